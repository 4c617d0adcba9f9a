//! Subspaces of the algebra or of its dual, held in canonical form.

use std::fmt;


use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Which space a subspace lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// The Lie algebra itself.
    Algebra,
    /// Its dual space.
    Dual,
}

impl Ambient {
    pub fn label(self) -> &'static str {
        match self {
            Ambient::Algebra => "g",
            Ambient::Dual => "g*",
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Ambient::Algebra => Ambient::Dual,
            Ambient::Dual => Ambient::Algebra,
        }
    }
}

/// A subspace stored as the reduced row echelon basis of its spanning set.
/// Two subspaces are equal exactly when their stored bases coincide, which
/// makes subspace comparison a plain structural equality test.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: Ambient,
    ambient_dim: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn from_spanning(ambient: Ambient, ambient_dim: usize, spanning: Vec<Vector<S>>) -> Self {
        for v in &spanning {
            assert_eq!(v.len(), ambient_dim, "spanning vector of wrong length");
        }
        if spanning.is_empty() {
            return Subspace {
                ambient,
                ambient_dim,
                basis: Vec::new(),
            };
        }
        let (rref, rank) = Matrix::from_rows(spanning).rref();
        let basis = (0..rank).map(|r| rref.row(r).to_vec()).collect();
        Subspace {
            ambient,
            ambient_dim,
            basis,
        }
    }

    pub fn zero(ambient: Ambient, ambient_dim: usize) -> Self {
        Subspace::from_spanning(ambient, ambient_dim, Vec::new())
    }

    pub fn full(ambient: Ambient, ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| crate::linalg::unit_vector(ambient_dim, i))
            .collect();
        Subspace::from_spanning(ambient, ambient_dim, rows)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical (RREF) basis rows.
    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix<S> {
        if self.basis.is_empty() {
            Matrix::zero(0, self.ambient_dim)
        } else {
            Matrix::from_rows(self.basis.clone())
        }
    }

    /// Reduce `v` against the canonical basis; membership means the residue
    /// vanishes.
    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "membership test length mismatch");
        let mut residue = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|c| !c.is_zero())
                .expect("stored basis rows are nonzero");
            if residue[pivot].is_zero() {
                continue;
            }
            let factor = residue[pivot].clone();
            for (res, base) in residue.iter_mut().zip(row) {
                if !base.is_zero() {
                    *res = res.clone() - factor.clone() * base.clone();
                }
            }
        }
        residue.iter().all(|c| c.is_zero())
    }
}

impl<S: Scalar> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace({}, dim {} of {})",
            self.ambient.label(),
            self.dim(),
            self.ambient_dim
        )?;
        for row in &self.basis {
            let coords: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            write!(f, "\n  [{}]", coords.join(", "))?;
        }
        Ok(())
    }
}
