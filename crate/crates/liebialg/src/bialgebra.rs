//! Lie bialgebra structure induced by an r-matrix: the cobracket, the dual
//! bracket on the dual space, the subalgebra and coisotropy predicates, and
//! the Drinfeld double with its lagrangian-subalgebra test.


use crate::error::Error;
use crate::liealg::LieAlgebra;
use crate::linalg::{unit_vector, zero_vector, Matrix, Vector};
use crate::multivector::{ad_invariant_witness, schouten, Multivector};
use crate::scalar::Scalar;
use crate::subspace::{Ambient, Subspace};

/// Covector, written in the dual basis.
pub type DualVector<S> = Vec<S>;

/// Does `[pi, pi]` commute with the adjoint action? Returns the first basis
/// index breaking invariance, `None` when `pi` is an r-matrix.
pub fn r_matrix_witness<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
) -> Result<Option<usize>, Error> {
    let pipi = schouten(alg, pi, pi)?;
    ad_invariant_witness(alg, &pipi)
}

pub fn is_r_matrix<S: Scalar>(alg: &LieAlgebra<S>, pi: &Multivector<S>) -> Result<bool, Error> {
    Ok(r_matrix_witness(alg, pi)?.is_none())
}

/// The cobracket and dual bracket determined by an r-matrix, with the
/// cobracket values on basis elements precomputed.
pub struct DualStructure<S> {
    dim: usize,
    delta: Vec<Multivector<S>>,
}

impl<S: Scalar> DualStructure<S> {
    pub fn new(alg: &LieAlgebra<S>, pi: &Multivector<S>) -> Result<Self, Error> {
        let dim = alg.dim();
        let delta = (0..dim)
            .map(|k| schouten(alg, pi, &Multivector::basis(dim, k)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DualStructure { dim, delta })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `delta(e_k) = [pi, e_k]`.
    pub fn cobracket_basis(&self, k: usize) -> &Multivector<S> {
        &self.delta[k]
    }

    /// `delta(x) = [pi, x]`, extended linearly.
    pub fn cobracket(&self, x: &[S]) -> Result<Multivector<S>, Error> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut out = Multivector::zero(self.dim, 2);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.delta[k].scale(c));
            }
        }
        Ok(out)
    }

    /// Bracket on the dual space: `<[xi, zeta], e_k> = <xi ^ zeta, delta(e_k)>`.
    pub fn dual_bracket(&self, xi: &[S], zeta: &[S]) -> Result<DualVector<S>, Error> {
        if xi.len() != self.dim || zeta.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: if xi.len() != self.dim {
                    xi.len()
                } else {
                    zeta.len()
                },
            });
        }
        let mut out = zero_vector(self.dim);
        for k in 0..self.dim {
            out[k] = self.delta[k].eval_bivector(xi, zeta)?;
        }
        Ok(out)
    }
}

/// Cobracket `delta(x) = [pi, x]` (one-shot convenience).
pub fn cobracket<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    x: &[S],
) -> Result<Multivector<S>, Error> {
    schouten(alg, pi, &Multivector::from_vector(x))
}

/// Dual bracket (one-shot convenience; precompute a [`DualStructure`] when
/// calling repeatedly).
pub fn dual_bracket<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    xi: &[S],
    zeta: &[S],
) -> Result<DualVector<S>, Error> {
    DualStructure::new(alg, pi)?.dual_bracket(xi, zeta)
}

/// Annihilator of a subspace: the functionals (resp. vectors) vanishing on
/// it. Flips the ambient between the algebra and its dual, and satisfies
/// `dim s + dim s^o = dim g`.
pub fn annihilator<S: Scalar>(s: &Subspace<S>) -> Subspace<S> {
    let n = s.ambient_dim();
    let target = s.ambient().flip();
    if s.is_zero() {
        return Subspace::full(target, n);
    }
    let kernel = s.basis_matrix().kernel_basis();
    Subspace::from_spanning(target, n, kernel)
}

/// Is the subspace closed under the Lie bracket? Returns the first offending
/// pair of basis rows.
pub fn subalgebra_witness<S: Scalar>(
    alg: &LieAlgebra<S>,
    s: &Subspace<S>,
) -> Result<Option<(usize, usize)>, Error> {
    let basis = s.basis();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let b = alg.bracket(&basis[i], &basis[j])?;
            if !s.contains(&b) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_subalgebra<S: Scalar>(alg: &LieAlgebra<S>, s: &Subspace<S>) -> Result<bool, Error> {
    Ok(subalgebra_witness(alg, s)?.is_none())
}

/// Verdicts of the coisotropy test: the subspace must be a subalgebra and its
/// annihilator must close under the dual bracket. This check re-derives
/// everything from the structure constants and the r-matrix, independently of
/// how a candidate subspace was produced.
#[derive(Clone, Debug)]
pub struct CoisotropyReport<S: Scalar> {
    pub annihilator: Subspace<S>,
    /// Offending pair of basis rows of `s`, when `s` is not a subalgebra.
    pub subalgebra_witness: Option<(usize, usize)>,
    /// Offending pair of annihilator rows, when the dual closure fails.
    pub dual_closure_witness: Option<(usize, usize)>,
}

impl<S: Scalar> CoisotropyReport<S> {
    pub fn is_subalgebra(&self) -> bool {
        self.subalgebra_witness.is_none()
    }

    pub fn annihilator_closed(&self) -> bool {
        self.dual_closure_witness.is_none()
    }

    pub fn is_coisotropic(&self) -> bool {
        self.is_subalgebra() && self.annihilator_closed()
    }
}

pub fn coisotropy_report<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    s: &Subspace<S>,
) -> Result<CoisotropyReport<S>, Error> {
    let sub_witness = subalgebra_witness(alg, s)?;
    let ann = annihilator(s);
    let dual = DualStructure::new(alg, pi)?;
    let mut dual_witness = None;
    let rows = ann.basis();
    'outer: for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let b = dual.dual_bracket(&rows[i], &rows[j])?;
            if !ann.contains(&b) {
                dual_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    Ok(CoisotropyReport {
        annihilator: ann,
        subalgebra_witness: sub_witness,
        dual_closure_witness: dual_witness,
    })
}

pub fn is_coisotropic<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    s: &Subspace<S>,
) -> Result<bool, Error> {
    Ok(coisotropy_report(alg, pi, s)?.is_coisotropic())
}

/// Is the (dual-ambient) subspace an ideal for the dual bracket? Returns a
/// witness `(full-basis index, subspace row)` whose bracket escapes.
pub fn dual_ideal_witness<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    s: &Subspace<S>,
) -> Result<Option<(usize, usize)>, Error> {
    let dual = DualStructure::new(alg, pi)?;
    for a in 0..alg.dim() {
        let xi = unit_vector(alg.dim(), a);
        for (row, zeta) in s.basis().iter().enumerate() {
            let b = dual.dual_bracket(&xi, zeta)?;
            if !s.contains(&b) {
                return Ok(Some((a, row)));
            }
        }
    }
    Ok(None)
}

/// A Lie algebra with a distinguished symmetric pairing of which half the
/// dimension is isotropic; covers both the Drinfeld double on `g + g*` and
/// the direct sum `g + g` with the split Killing pairing.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra<S: Scalar> {
    pub algebra: LieAlgebra<S>,
    pub pairing: Matrix<S>,
    half_dim: usize,
}

impl<S: Scalar> DoubleAlgebra<S> {
    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn pair(&self, u: &[S], v: &[S]) -> S {
        let pv = self.pairing.mul_vector(v);
        let mut acc = S::zero();
        for (a, b) in u.iter().zip(&pv) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc + a.clone() * b.clone();
            }
        }
        acc
    }

    /// First basis triple where `<[a,b],c> + <b,[a,c]> != 0`, if any.
    pub fn pairing_invariance_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.algebra.bracket_basis(i, j);
                for k in 0..n {
                    let ik = self.algebra.bracket_basis(i, k);
                    let mut acc = S::zero();
                    for (c, p) in ij.iter().zip(self.pairing.column(k)) {
                        if !c.is_zero() && !p.is_zero() {
                            acc = acc + c.clone() * p;
                        }
                    }
                    for (c, p) in ik.iter().zip(self.pairing.column(j)) {
                        if !c.is_zero() && !p.is_zero() {
                            acc = acc + c.clone() * p;
                        }
                    }
                    if !acc.is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Lagrangian test: a subalgebra, isotropic for the pairing, of half the
    /// dimension of the double.
    pub fn is_lagrangian(&self, s: &Subspace<S>) -> Result<bool, Error> {
        if s.dim() != self.half_dim {
            return Ok(false);
        }
        if subalgebra_witness(&self.algebra, s)?.is_some() {
            return Ok(false);
        }
        let rows = s.basis();
        for i in 0..rows.len() {
            for j in i..rows.len() {
                if !self.pair(&rows[i], &rows[j]).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Drinfeld double of the bialgebra `(g, [pi, .])`: the unique bracket on
/// `g + g*` restricting to the bracket of `g` and the dual bracket, for which
/// the natural pairing `<x + xi, y + zeta> = xi(y) + zeta(x)` is invariant.
/// Fails with a Jacobi witness when `pi` is not an r-matrix.
pub fn drinfeld_double<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
) -> Result<DoubleAlgebra<S>, Error> {
    let n = alg.dim();
    let dual = DualStructure::new(alg, pi)?;
    let dim = 2 * n;
    let mut entries = Vec::new();
    // [e_i, e_j]: the bracket of g
    for i in 0..n {
        for j in (i + 1)..n {
            let v = alg.bracket_basis(i, j);
            let terms = sparse_terms(v, 0);
            entries.push((i, j, terms));
        }
    }
    // [e^a, e^b]: the dual bracket
    for a in 0..n {
        for b in (a + 1)..n {
            let v = dual.dual_bracket(&unit_vector(n, a), &unit_vector(n, b))?;
            let terms = sparse_terms(&v, n);
            entries.push((n + a, n + b, terms));
        }
    }
    // [e_i, e^a]: coadjoint action in both directions,
    //   g-part:  sum_b d_i^{ab} e_b   with delta(e_i) = sum_{p<q} d_i^{pq} e_p ^ e_q
    //   g*-part: -sum_j c_{ij}^a e^j
    for i in 0..n {
        let delta_i = dual.cobracket_basis(i);
        for a in 0..n {
            let mut g_part: Vector<S> = zero_vector(n);
            for (key, c) in delta_i.terms() {
                let (p, q) = (key[0], key[1]);
                if p == a {
                    g_part[q] = g_part[q].clone() + c.clone();
                } else if q == a {
                    g_part[p] = g_part[p].clone() - c.clone();
                }
            }
            let mut terms = sparse_terms(&g_part, 0);
            for j in 0..n {
                let c = &alg.bracket_basis(i, j)[a];
                if !c.is_zero() {
                    terms.push((n + j, -c.clone()));
                }
            }
            entries.push((i, n + a, terms));
        }
    }
    let mut names: Vec<String> = alg.basis_names().to_vec();
    names.extend(alg.basis_names().iter().map(|s| format!("{s}*")));
    let double = LieAlgebra::from_structure(dim, names, entries)?;
    if let Some((i, j, k)) = double.jacobi_check() {
        return Err(Error::JacobiFailure(i, j, k));
    }
    let mut pairing = Matrix::zero(dim, dim);
    for i in 0..n {
        pairing[(i, n + i)] = S::one();
        pairing[(n + i, i)] = S::one();
    }
    Ok(DoubleAlgebra {
        algebra: double,
        pairing,
        half_dim: n,
    })
}

fn sparse_terms<S: Scalar>(v: &[S], offset: usize) -> Vec<(usize, S)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k + offset, c.clone()))
        .collect()
}

/// Embed `k + k^o` into the double built on `g + g*`.
pub fn double_embedding<S: Scalar>(k: &Subspace<S>) -> Subspace<S> {
    let n = k.ambient_dim();
    let ann = annihilator(k);
    let mut rows = Vec::new();
    for row in k.basis() {
        let mut v = zero_vector(2 * n);
        v[..n].clone_from_slice(row);
        rows.push(v);
    }
    for row in ann.basis() {
        let mut v = zero_vector(2 * n);
        v[n..].clone_from_slice(row);
        rows.push(v);
    }
    Subspace::from_spanning(Ambient::Algebra, 2 * n, rows)
}

/// The direct sum `g + g` with the pairing
/// `<(x1, y1), (x2, y2)> = B(x1, x2)/2 - B(y1, y2)/2`, `B` the Killing form.
pub fn direct_sum_double<S: Scalar>(alg: &LieAlgebra<S>) -> Result<DoubleAlgebra<S>, Error> {
    let n = alg.dim();
    let dim = 2 * n;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = alg.bracket_basis(i, j);
            entries.push((i, j, sparse_terms(v, 0)));
            entries.push((n + i, n + j, sparse_terms(v, n)));
        }
    }
    let mut names: Vec<String> = alg.basis_names().iter().map(|s| format!("{s}'")).collect();
    names.extend(alg.basis_names().iter().map(|s| format!("{s}''")));
    let sum = LieAlgebra::from_structure(dim, names, entries)?;
    let killing = alg.killing_matrix();
    let half = S::from_fraction(1, 2);
    let mut pairing = Matrix::zero(dim, dim);
    for i in 0..n {
        for j in 0..n {
            let k = killing[(i, j)].clone();
            if k.is_zero() {
                continue;
            }
            pairing[(i, j)] = half.clone() * k.clone();
            pairing[(n + i, n + j)] = -(half.clone() * k);
        }
    }
    Ok(DoubleAlgebra {
        algebra: sum,
        pairing,
        half_dim: n,
    })
}

/// Outcome of the Manin-triple self-test on `g + g`.
#[derive(Debug)]
pub struct ManinTripleReport {
    pub diagonal_lagrangian: bool,
    pub split_lagrangian: bool,
    pub cobracket_recovered: bool,
}

impl ManinTripleReport {
    pub fn all_hold(&self) -> bool {
        self.diagonal_lagrangian && self.split_lagrangian && self.cobracket_recovered
    }
}

/// Self-test: `g + g` with the split Killing pairing, the diagonal copy, and
/// the subspace `{(h + v, -h + w)}` (Cartan part opposite, `v` upper, `w`
/// lower) form a Manin triple whose induced cobracket on the diagonal copy is
/// exactly `[pi, .]`.
///
/// `cartan`, `positive`, `negative` list the basis indices spanning the three
/// root-space blocks of the algebra.
pub fn manin_triple_check<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    cartan: &[usize],
    positive: &[usize],
    negative: &[usize],
) -> Result<ManinTripleReport, Error> {
    let n = alg.dim();
    assert_eq!(
        cartan.len() + positive.len() + negative.len(),
        n,
        "index sets must partition the basis"
    );
    let double = direct_sum_double(alg)?;
    if let Some((i, j, k)) = double.pairing_invariance_witness() {
        return Err(Error::OracleContradiction(format!(
            "split Killing pairing is not invariant at ({i}, {j}, {k})"
        )));
    }

    let diag_rows: Vec<Vector<S>> = (0..n)
        .map(|i| {
            let mut v = zero_vector(2 * n);
            v[i] = S::one();
            v[n + i] = S::one();
            v
        })
        .collect();
    let diagonal = Subspace::from_spanning(Ambient::Algebra, 2 * n, diag_rows);
    let diagonal_lagrangian = double.is_lagrangian(&diagonal)?;

    let mut split_rows: Vec<Vector<S>> = Vec::new();
    for &c in cartan {
        let mut v = zero_vector(2 * n);
        v[c] = S::one();
        v[n + c] = -S::one();
        split_rows.push(v);
    }
    for &p in positive {
        let mut v = zero_vector(2 * n);
        v[p] = S::one();
        split_rows.push(v);
    }
    for &m in negative {
        let mut v = zero_vector(2 * n);
        v[n + m] = S::one();
        split_rows.push(v);
    }
    let split = Subspace::from_spanning(Ambient::Algebra, 2 * n, split_rows);
    let split_lagrangian = double.is_lagrangian(&split)?;

    // Identify the split subalgebra with g* through the pairing against the
    // diagonal, transport its bracket back, and compare with [pi, .].
    let killing = alg.killing_matrix();
    let dual = DualStructure::new(alg, pi)?;
    let two = S::from_int(2);
    let realize = |xi: &[S]| -> Result<Vector<S>, Error> {
        // u solving B(u, .) = 2 xi, then (u_h/2 + u_+, -u_h/2 - u_-)
        let rhs: Vector<S> = xi.iter().map(|c| two.clone() * c.clone()).collect();
        let u = killing.solve(&rhs).ok_or(Error::SingularMatrix)?;
        let mut v = zero_vector(2 * n);
        for &c in cartan {
            let hc = u[c].clone() / two.clone();
            v[c] = hc.clone();
            v[n + c] = -hc;
        }
        for &p in positive {
            v[p] = u[p].clone();
        }
        for &m in negative {
            v[n + m] = -u[m].clone();
        }
        Ok(v)
    };

    let mut cobracket_recovered = true;
    'outer: for a in 0..n {
        let s_a = realize(&unit_vector(n, a))?;
        if !split.contains(&s_a) {
            cobracket_recovered = false;
            break;
        }
        for b in (a + 1)..n {
            let s_b = realize(&unit_vector(n, b))?;
            let br = double.algebra.bracket(&s_a, &s_b)?;
            for k in 0..n {
                let mut diag_k = zero_vector(2 * n);
                diag_k[k] = S::one();
                diag_k[n + k] = S::one();
                let lhs = double.pair(&br, &diag_k);
                let rhs = dual.cobracket_basis(k).coefficient(&[a, b]);
                if lhs != rhs {
                    cobracket_recovered = false;
                    break 'outer;
                }
            }
        }
    }

    Ok(ManinTripleReport {
        diagonal_lagrangian,
        split_lagrangian,
        cobracket_recovered,
    })
}
