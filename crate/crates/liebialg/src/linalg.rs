//! Dense exact linear algebra over a [`Scalar`] field: reduced row echelon
//! form, kernels, linear solves and the proportionality test.

use std::fmt;


use crate::error::Error;
use crate::scalar::Scalar;

/// Coordinate vector over the working field.
pub type Vector<S> = Vec<S>;

pub fn zero_vector<S: Scalar>(dim: usize) -> Vector<S> {
    vec![S::zero(); dim]
}

pub fn unit_vector<S: Scalar>(dim: usize, index: usize) -> Vector<S> {
    let mut v = zero_vector(dim);
    v[index] = S::one();
    v
}

pub fn vector_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn vector_add<S: Scalar>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn vector_sub<S: Scalar>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn vector_scale<S: Scalar>(c: &S, v: &[S]) -> Vector<S> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

/// Dense matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Row-major flattening, used to treat a matrix as one long vector.
    pub fn flatten(&self) -> Vector<S> {
        self.data.clone()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                let b = &rhs[(k, c)];
                if b.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * b.clone();
            }
            acc
        })
    }

    pub fn mul_vector(&self, v: &[S]) -> Vector<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    if self[(r, c)].is_zero() || v[c].is_zero() {
                        continue;
                    }
                    acc = acc + self[(r, c)].clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - rhs[(r, c)].clone()
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, k| c.clone() * self[(r, k)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Stack the rows of `self` on top of the rows of `other`.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "stack needs equal column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and rank. The RREF of a matrix is unique, so
    /// it doubles as the canonical representative of the row space.
    pub fn rref(&self) -> (Self, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(p) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, p);
            let inv = m[(pivot_row, col)]
                .inverse()
                .expect("pivot is nonzero by construction");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Canonical basis of the null space; empty when the matrix has full
    /// column rank. The returned rows are themselves in RREF.
    pub fn kernel_basis(&self) -> Vec<Vector<S>> {
        let (r, rank) = self.rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        for row in 0..rank {
            let col = (0..r.cols)
                .find(|&c| !r[(row, c)].is_zero())
                .expect("nonzero row above the rank");
            pivot_cols.push(col);
        }
        let mut kernel = Vec::new();
        for free in 0..r.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = zero_vector(r.cols);
            v[free] = S::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -r[(row, free)].clone();
            }
            kernel.push(v);
        }
        if kernel.is_empty() {
            return kernel;
        }
        let (canon, krank) = Matrix::from_rows(kernel).rref();
        (0..krank).map(|i| canon.row(i).to_vec()).collect()
    }

    /// Solve `self * x = b`. Returns `None` when inconsistent. When the
    /// solution is not unique the free coordinates are set to zero.
    pub fn solve(&self, b: &[S]) -> Option<Vector<S>> {
        assert_eq!(self.rows, b.len(), "solve shape mismatch");
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, rank) = aug.rref();
        aug = red;
        let mut x = zero_vector(self.cols);
        for row in 0..rank {
            let Some(col) = (0..=self.cols).find(|&c| !aug[(row, c)].is_zero()) else {
                continue;
            };
            if col == self.cols {
                return None; // pivot in the augmented column
            }
            x[col] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c == n + r {
                S::one()
            } else {
                S::zero()
            }
        });
        let (red, _) = aug.rref();
        for i in 0..n {
            if red[(i, i)] != S::one() {
                return Err(Error::SingularMatrix);
            }
        }
        Ok(Matrix::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &S) {
        for c in 0..self.cols {
            if !self[(r, c)].is_zero() {
                self[(r, c)] = self[(r, c)].clone() * factor.clone();
            }
        }
    }

    /// row[r] -= factor * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &S) {
        for c in 0..self.cols {
            if self[(src, c)].is_zero() {
                continue;
            }
            let delta = factor.clone() * self[(src, c)].clone();
            self[(r, c)] = self[(r, c)].clone() - delta;
        }
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Outcome of the proportionality test `a = lambda * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proportionality<S> {
    /// The unique scalar with `a = lambda * b`.
    Unique(S),
    /// Both vectors are zero, so every scalar works.
    Any,
}

/// Find `lambda` with `a = lambda * b`, if one exists.
///
/// Returns `Ok(None)` when no scalar works, and `Ok(Some(Any))` when both
/// vectors vanish.
pub fn solve_proportionality<S: Scalar>(
    a: &[S],
    b: &[S],
) -> Result<Option<Proportionality<S>>, Error> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let Some(pivot) = b.iter().position(|c| !c.is_zero()) else {
        return Ok(if vector_is_zero(a) {
            Some(Proportionality::Any)
        } else {
            None
        });
    };
    let lambda = a[pivot].clone() / b[pivot].clone();
    for (x, y) in a.iter().zip(b) {
        if *x != lambda.clone() * y.clone() {
            return Ok(None);
        }
    }
    Ok(Some(Proportionality::Unique(lambda)))
}
