//! Finite-dimensional Lie algebras over an exact field, presented by
//! structure constants with an optional matrix realization.

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{unit_vector, vector_is_zero, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// A Lie algebra given by its structure constants: `[e_i, e_j] = sum_k
/// c_{ij}^k e_k`. Only pairs `i < j` are supplied; antisymmetry fills in the
/// rest. A realization, when present, is a list of square matrices (one per
/// basis element) whose commutators reproduce the structure constants; it is
/// only needed for the adjoint action of group elements.
#[derive(Clone, Debug)]
pub struct LieAlgebra<S: Scalar> {
    dim: usize,
    basis_names: Vec<String>,
    /// Dense bracket table, `table[i * dim + j]` = coordinates of `[e_i, e_j]`.
    table: Vec<Vector<S>>,
    realization: Option<Vec<Matrix<S>>>,
}

impl<S: Scalar> LieAlgebra<S> {
    /// Build from sparse structure constants. Each entry is `(i, j, terms)`
    /// with `i < j` and `terms` a list of `(k, coefficient)`.
    pub fn from_structure(
        dim: usize,
        basis_names: Vec<String>,
        entries: Vec<(usize, usize, Vec<(usize, S)>)>,
    ) -> Result<Self, Error> {
        if basis_names.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: basis_names.len(),
            });
        }
        let mut table = vec![zero_vector(dim); dim * dim];
        for (i, j, terms) in entries {
            if i >= j || j >= dim {
                return Err(Error::invalid_input(
                    "brackets",
                    format!("bracket pair ({i}, {j}) must satisfy i < j < dim"),
                ));
            }
            let mut v: Vector<S> = zero_vector(dim);
            for (k, c) in terms {
                if k >= dim {
                    return Err(Error::invalid_input(
                        "brackets",
                        format!("component index {k} out of range"),
                    ));
                }
                v[k] = v[k].clone() + c;
            }
            table[j * dim + i] = v.iter().map(|c| -c.clone()).collect();
            table[i * dim + j] = v;
        }
        Ok(LieAlgebra {
            dim,
            basis_names,
            table,
            realization: None,
        })
    }

    /// Compute the structure constants from the commutators of a spanning set
    /// of matrices. `coords` must express an arbitrary matrix of the span in
    /// the given basis (returning `None` off the span).
    pub fn from_matrices(
        basis_names: Vec<String>,
        matrices: Vec<Matrix<S>>,
        coords: impl Fn(&Matrix<S>) -> Option<Vector<S>>,
    ) -> Result<Self, Error> {
        let dim = matrices.len();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let comm = matrices[i]
                    .mul(&matrices[j])
                    .sub(&matrices[j].mul(&matrices[i]));
                let v = coords(&comm).ok_or(Error::OutsideRealizationSpan)?;
                let terms = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                entries.push((i, j, terms));
            }
        }
        let mut alg = LieAlgebra::from_structure(dim, basis_names, entries)?;
        alg.realization = Some(matrices);
        Ok(alg)
    }

    /// Attach a matrix realization, validating that the commutators of the
    /// matrices reproduce the structure constants and that the matrices are
    /// linearly independent.
    pub fn with_realization(mut self, matrices: Vec<Matrix<S>>) -> Result<Self, Error> {
        if matrices.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: matrices.len(),
            });
        }
        let size = matrices[0].rows();
        for m in &matrices {
            if m.rows() != size || m.cols() != size {
                return Err(Error::invalid_input(
                    "realization",
                    "realization matrices must be square and of equal size",
                ));
            }
        }
        let coord_matrix = realization_coordinate_matrix(&matrices);
        if coord_matrix.rank() != self.dim {
            return Err(Error::DependentRealization);
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let comm = matrices[i]
                    .mul(&matrices[j])
                    .sub(&matrices[j].mul(&matrices[i]));
                let mut expected = Matrix::zero(size, size);
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        expected = expected.add(&matrices[k].scale(c));
                    }
                }
                if comm != expected {
                    return Err(Error::RealizationMismatch { i, j });
                }
            }
        }
        self.realization = Some(matrices);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn realization(&self) -> Option<&[Matrix<S>]> {
        self.realization.as_deref()
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        &self.table[i * self.dim + j]
    }

    /// Bilinear antisymmetric extension of the structure constants.
    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vector<S>, Error> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out: Vector<S> = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let factor = xi.clone() * yj.clone();
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + factor.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[v, e_j]` for a coordinate vector `v`.
    pub fn bracket_with_basis(&self, v: &[S], j: usize) -> Vector<S> {
        let mut out: Vector<S> = zero_vector(self.dim);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].clone() + vi.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Check the Jacobi identity on all basis triples. Returns the first
    /// offending triple, or `None` when the identity holds.
    pub fn jacobi_check(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.bracket_basis(i, j).to_vec();
                for k in (j + 1)..self.dim {
                    let jk = self.bracket_basis(j, k).to_vec();
                    let ki = self.bracket_basis(k, i).to_vec();
                    let mut acc = self.bracket_with_basis(&ij, k);
                    let t2 = self.bracket_with_basis(&jk, i);
                    let t3 = self.bracket_with_basis(&ki, j);
                    for idx in 0..self.dim {
                        acc[idx] =
                            acc[idx].clone() + t2[idx].clone() + t3[idx].clone();
                    }
                    if !vector_is_zero(&acc) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Matrix of `ad_x = [x, .]` in the working basis.
    pub fn ad_matrix(&self, x: &[S]) -> Result<Matrix<S>, Error> {
        self.check_len(x)?;
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &unit_vector(self.dim, j))?;
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }

    /// Killing form `B(x, y) = tr(ad_x ad_y)`.
    pub fn killing_form(&self, x: &[S], y: &[S]) -> Result<S, Error> {
        let ax = self.ad_matrix(x)?;
        let ay = self.ad_matrix(y)?;
        let mut trace = S::zero();
        for i in 0..self.dim {
            for k in 0..self.dim {
                if ax[(i, k)].is_zero() || ay[(k, i)].is_zero() {
                    continue;
                }
                trace = trace + ax[(i, k)].clone() * ay[(k, i)].clone();
            }
        }
        Ok(trace)
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_matrix(&self) -> Matrix<S> {
        let ads: Vec<Matrix<S>> = (0..self.dim)
            .map(|i| {
                self.ad_matrix(&unit_vector(self.dim, i))
                    .expect("basis vector has the right length")
            })
            .collect();
        Matrix::from_fn(self.dim, self.dim, |a, b| {
            let mut trace = S::zero();
            for i in 0..self.dim {
                for k in 0..self.dim {
                    if ads[a][(i, k)].is_zero() || ads[b][(k, i)].is_zero() {
                        continue;
                    }
                    trace = trace + ads[a][(i, k)].clone() * ads[b][(k, i)].clone();
                }
            }
            trace
        })
    }

    /// Adjoint action of a group element through the realization: the
    /// coordinates of `g * M_x * g^{-1}`.
    pub fn adjoint_group_action(&self, g: &Matrix<S>, x: &[S]) -> Result<Vector<S>, Error> {
        self.check_len(x)?;
        let mats = self.realization.as_ref().ok_or(Error::NoRealization)?;
        let size = mats[0].rows();
        if g.rows() != size || g.cols() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: g.rows(),
            });
        }
        let g_inv = g.inverse()?;
        let mut mx = Matrix::zero(size, size);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                mx = mx.add(&mats[i].scale(c));
            }
        }
        let conj = g.mul(&mx).mul(&g_inv);
        let coord_matrix = realization_coordinate_matrix(mats);
        coord_matrix
            .solve(&conj.flatten())
            .ok_or(Error::OutsideRealizationSpan)
    }

    /// Matrix whose columns are the adjoint images of the basis vectors.
    pub fn adjoint_matrix(&self, g: &Matrix<S>) -> Result<Matrix<S>, Error> {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.adjoint_group_action(g, &unit_vector(self.dim, j))?;
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }

    fn check_len(&self, v: &[S]) -> Result<(), Error> {
        if v.len() != self.dim {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            })
        } else {
            Ok(())
        }
    }
}

fn realization_coordinate_matrix<S: Scalar>(mats: &[Matrix<S>]) -> Matrix<S> {
    let size = mats[0].rows();
    Matrix::from_fn(size * size, mats.len(), |r, c| {
        mats[c][(r / size, r % size)].clone()
    })
}

/// sl(2) with the basis
/// `e1 = diag(1,-1)/2`, `e2 = ((0,1),(-1,0))/2`, `e3 = ((0,1),(1,0))/2`,
/// so that `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = -e2`. Carries the
/// defining 2x2 realization.
pub fn sl2<S: Scalar>() -> LieAlgebra<S> {
    let names = vec!["e1".into(), "e2".into(), "e3".into()];
    let h = S::from_fraction(1, 2);
    let mh = S::from_fraction(-1, 2);
    let e1 = Matrix::from_rows(vec![
        vec![h.clone(), S::zero()],
        vec![S::zero(), mh.clone()],
    ]);
    let e2 = Matrix::from_rows(vec![
        vec![S::zero(), h.clone()],
        vec![mh.clone(), S::zero()],
    ]);
    let e3 = Matrix::from_rows(vec![
        vec![S::zero(), h.clone()],
        vec![h.clone(), S::zero()],
    ]);
    let entries = vec![
        (0, 1, vec![(2, S::one())]),  // [e1,e2] = e3
        (1, 2, vec![(0, S::one())]),  // [e2,e3] = e1
        (0, 2, vec![(1, S::one())]),  // [e1,e3] = e2, i.e. [e3,e1] = -e2
    ];
    LieAlgebra::from_structure(3, names, entries)
        .and_then(|a| a.with_realization(vec![e1, e2, e3]))
        .expect("sl2 data is consistent")
}

/// su(2) with `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`. The structure
/// constants are rational, so the algebra is available over any scalar field;
/// no realization is attached.
pub fn su2<S: Scalar>() -> LieAlgebra<S> {
    let names = vec!["e1".into(), "e2".into(), "e3".into()];
    let entries = vec![
        (0, 1, vec![(2, S::one())]),
        (1, 2, vec![(0, S::one())]),
        (0, 2, vec![(1, -S::one())]), // [e3,e1] = e2
    ];
    LieAlgebra::from_structure(3, names, entries).expect("su2 data is consistent")
}

/// su(2) over the Gaussian rationals with its defining 2x2 realization
/// `e1 = diag(i,-i)/2`, `e2 = ((0,1),(-1,0))/2`, `e3 = ((0,i),(i,0))/2`.
pub fn su2_complex() -> LieAlgebra<crate::scalar::GaussRational> {
    use crate::scalar::{GaussRational, Rational};
    let h = GaussRational::from_fraction(1, 2);
    let mh = GaussRational::from_fraction(-1, 2);
    let hi = GaussRational::new(Rational::zero(), Rational::from_fraction(1, 2));
    let mhi = GaussRational::new(Rational::zero(), Rational::from_fraction(-1, 2));
    let zero = GaussRational::zero;
    let e1 = Matrix::from_rows(vec![vec![hi.clone(), zero()], vec![zero(), mhi.clone()]]);
    let e2 = Matrix::from_rows(vec![vec![zero(), h.clone()], vec![mh.clone(), zero()]]);
    let e3 = Matrix::from_rows(vec![vec![zero(), hi.clone()], vec![hi.clone(), zero()]]);
    su2::<GaussRational>()
        .with_realization(vec![e1, e2, e3])
        .expect("su2 realization matches the structure constants")
}
