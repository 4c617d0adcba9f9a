//! Antisymmetric multivectors in the exterior algebra of a Lie algebra, up to
//! degree 4, with the wedge product, contraction against covectors, and the
//! Schouten-Nijenhuis bracket.
//!
//! Sign conventions. The Schouten bracket extends the Lie bracket so that
//! `[x, y_1 ^ ... ^ y_k] = sum_i y_1 ^ ... ^ [x, y_i] ^ ... ^ y_k` for a
//! degree-1 element `x`, together with graded antisymmetry
//! `[p, q] = -(-1)^((|p|-1)(|q|-1)) [q, p]`. Contraction is fixed by
//! `(b# xi)^i = sum_j b^{ji} xi_j`, so that `xi(b# zeta) = b(zeta, xi)`.

use std::collections::BTreeMap;


use crate::error::Error;
use crate::liealg::LieAlgebra;
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// Highest exterior degree the library works with. The pipeline needs at most
/// degree 3 (`[pi, pi]` and `[eta, eta]`), plus one spare degree for the
/// graded Leibniz tests.
pub const MAX_DEGREE: usize = 4;

/// A homogeneous multivector, stored as a map from strictly increasing index
/// tuples to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector<S> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree above the supported maximum");
        Multivector {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Degree-1 multivector with the given coordinates.
    pub fn from_vector(coords: &[S]) -> Self {
        let mut mv = Multivector::zero(coords.len(), 1);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                mv.terms.insert(vec![i], c.clone());
            }
        }
        mv
    }

    /// The basis vector `e_i` as a degree-1 multivector.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut mv = Multivector::zero(dim, 1);
        assert!(i < dim);
        mv.terms.insert(vec![i], S::one());
        mv
    }

    /// Build from explicit terms; indices in each tuple must be strictly
    /// increasing.
    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: Vec<(Vec<usize>, S)>,
    ) -> Result<Self, Error> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow {
                degree,
                max: MAX_DEGREE,
            });
        }
        let mut mv = Multivector::zero(dim, degree);
        for (key, coeff) in terms {
            if key.len() != degree {
                return Err(Error::invalid_input(
                    "terms",
                    format!("index tuple {key:?} does not have degree {degree}"),
                ));
            }
            if key.windows(2).any(|w| w[0] >= w[1]) || key.iter().any(|&i| i >= dim) {
                return Err(Error::invalid_input(
                    "terms",
                    format!("index tuple {key:?} is not strictly increasing below {dim}"),
                ));
            }
            mv.add_term(key, coeff);
        }
        Ok(mv)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[usize]) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    /// Coordinates of a degree-1 multivector.
    pub fn into_vector(&self) -> Result<Vector<S>, Error> {
        if self.degree != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                got: self.degree,
            });
        }
        let mut v = zero_vector(self.dim);
        for (key, c) in &self.terms {
            v[key[0]] = c.clone();
        }
        Ok(v)
    }

    fn add_term(&mut self, key: Vec<usize>, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in sum");
        assert_eq!(self.dim, other.dim, "dimension mismatch in sum");
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-S::one()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Multivector::zero(self.dim, self.degree);
        if c.is_zero() {
            return out;
        }
        for (key, coeff) in &self.terms {
            out.terms.insert(key.clone(), c.clone() * coeff.clone());
        }
        out
    }

    /// Graded-commutative wedge product.
    pub fn wedge(&self, other: &Self) -> Result<Self, Error> {
        assert_eq!(self.dim, other.dim, "dimension mismatch in wedge");
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow {
                degree,
                max: MAX_DEGREE,
            });
        }
        let mut out = Multivector::zero(self.dim, degree);
        for (ikey, a) in &self.terms {
            for (jkey, b) in &other.terms {
                let Some((key, sign)) = merge_keys(ikey, jkey) else {
                    continue;
                };
                let coeff = signed(a.clone() * b.clone(), sign);
                out.add_term(key, coeff);
            }
        }
        Ok(out)
    }

    /// Push forward along a linear map given by its matrix (columns are the
    /// images of the basis vectors).
    pub fn map_linear(&self, m: &Matrix<S>) -> Self {
        let mut out = Multivector::zero(self.dim, self.degree);
        for (key, c) in &self.terms {
            let mut factor = Multivector::zero(self.dim, 0);
            factor.add_term(Vec::new(), S::one());
            for &i in key {
                let col = m.column(i);
                factor = factor
                    .wedge(&Multivector::from_vector(&col))
                    .expect("degree bounded by the original term");
            }
            out = out.add(&factor.scale(c));
        }
        out
    }

    /// Evaluate a bivector against two covectors:
    /// `b(xi, zeta) = sum_{i<j} b_{ij} (xi_i zeta_j - xi_j zeta_i)`.
    pub fn eval_bivector(&self, xi: &[S], zeta: &[S]) -> Result<S, Error> {
        if self.degree != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                got: self.degree,
            });
        }
        let mut acc = S::zero();
        for (key, c) in &self.terms {
            let (i, j) = (key[0], key[1]);
            let cross = xi[i].clone() * zeta[j].clone() - xi[j].clone() * zeta[i].clone();
            if !cross.is_zero() {
                acc = acc + c.clone() * cross;
            }
        }
        Ok(acc)
    }
}

fn signed<S: Scalar>(value: S, sign: i32) -> S {
    if sign >= 0 {
        value
    } else {
        -value
    }
}

/// Merge two strictly increasing index tuples, counting the sign of the
/// permutation that sorts the concatenation. `None` when they share an index.
fn merge_keys(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1;
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() && ib < b.len() {
        if a[ia] == b[ib] {
            return None;
        }
        if a[ia] < b[ib] {
            out.push(a[ia]);
            ia += 1;
        } else {
            // b[ib] jumps over the remaining entries of a
            if (a.len() - ia) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[ib]);
            ib += 1;
        }
    }
    out.extend_from_slice(&a[ia..]);
    out.extend_from_slice(&b[ib..]);
    Some((out, sign))
}

/// Insert one index into a strictly increasing tuple that it is prepended to,
/// with the transposition sign. `None` when already present.
fn insert_index(base: &[usize], l: usize) -> Option<(Vec<usize>, i32)> {
    if base.contains(&l) {
        return None;
    }
    let pos = base.iter().take_while(|&&x| x < l).count();
    let mut key = Vec::with_capacity(base.len() + 1);
    key.extend_from_slice(&base[..pos]);
    key.push(l);
    key.extend_from_slice(&base[pos..]);
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    Some((key, sign))
}

/// Schouten-Nijenhuis bracket of two multivectors. On decomposables,
/// `[x_1^..^x_p, y_1^..^y_q] = sum_{s,t} (-1)^{s+t} [x_s, y_t] ^ rest`.
pub fn schouten<S: Scalar>(
    alg: &LieAlgebra<S>,
    p: &Multivector<S>,
    q: &Multivector<S>,
) -> Result<Multivector<S>, Error> {
    if p.dim() != alg.dim() || q.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: if p.dim() != alg.dim() { p.dim() } else { q.dim() },
        });
    }
    if p.degree() + q.degree() == 0 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            got: 0,
        });
    }
    let degree = p.degree() + q.degree() - 1;
    if degree > MAX_DEGREE {
        return Err(Error::DegreeOverflow {
            degree,
            max: MAX_DEGREE,
        });
    }
    let mut out = Multivector::zero(alg.dim(), degree);
    for (ikey, a) in p.terms() {
        for (jkey, b) in q.terms() {
            let ab = a.clone() * b.clone();
            for (s, &bi) in ikey.iter().enumerate() {
                let mut rest_i = ikey.clone();
                rest_i.remove(s);
                for (t, &bj) in jkey.iter().enumerate() {
                    let mut rest_j = jkey.clone();
                    rest_j.remove(t);
                    let Some((base, base_sign)) = merge_keys(&rest_i, &rest_j) else {
                        continue;
                    };
                    let st_sign = if (s + t) % 2 == 0 { 1 } else { -1 };
                    let bracket = alg.bracket_basis(bi, bj);
                    for (l, w) in bracket.iter().enumerate() {
                        if w.is_zero() {
                            continue;
                        }
                        let Some((key, ins_sign)) = insert_index(&base, l) else {
                            continue;
                        };
                        let coeff = signed(
                            ab.clone() * w.clone(),
                            st_sign * base_sign * ins_sign,
                        );
                        out.add_term(key, coeff);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Contraction of a bivector with a covector: `(b# xi)^i = sum_j b^{ji} xi_j`.
pub fn contract<S: Scalar>(b: &Multivector<S>, xi: &[S]) -> Result<Vector<S>, Error> {
    if b.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            got: b.degree(),
        });
    }
    if xi.len() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: xi.len(),
        });
    }
    let mut out: Vector<S> = zero_vector(b.dim());
    for (key, c) in b.terms() {
        let (p, q) = (key[0], key[1]);
        if !xi[p].is_zero() {
            out[q] = out[q].clone() + c.clone() * xi[p].clone();
        }
        if !xi[q].is_zero() {
            out[p] = out[p].clone() - c.clone() * xi[q].clone();
        }
    }
    Ok(out)
}

/// Is `t` invariant under the adjoint action of every basis element? Returns
/// the first basis index that breaks invariance.
pub fn ad_invariant_witness<S: Scalar>(
    alg: &LieAlgebra<S>,
    t: &Multivector<S>,
) -> Result<Option<usize>, Error> {
    for i in 0..alg.dim() {
        let e_i = Multivector::basis(alg.dim(), i);
        if !schouten(alg, &e_i, t)?.is_zero() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
