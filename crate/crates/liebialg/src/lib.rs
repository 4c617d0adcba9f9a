//! Exact-arithmetic Lie bialgebras from r-matrices.
//!
//! The crate computes with finite-dimensional Lie algebras presented by
//! structure constants over an exact field, builds the bialgebra structure an
//! r-matrix induces, and produces coisotropic subalgebras two ways:
//!
//! * from an algebra element `X` with `[X,[X,pi]] = lambda [X,pi]`, as the
//!   image of contraction with `[X,pi]`;
//! * from a group element `g` of a matrix realization, as the image of
//!   contraction with `pi - Ad_g pi`.
//!
//! Every candidate subspace is certified by an independent oracle that checks
//! the subalgebra property and closure of the annihilator under the dual
//! bracket. The `classical` module builds the split forms of the series
//! A, B, C, D, their standard r-matrices, and reproduces the tabulated
//! coisotropic family of every root passing the root-string condition.
//!
//! All core types are generic over the [`scalar::Scalar`] field; the two
//! shipped instantiations are the rationals and the Gaussian rationals, with
//! concrete aliases at the crate root (`QMatrix`, `QiLieAlgebra`, ...).
//!
//! ```
//! use liebialg::{classical, construction, Rational};
//!
//! let (alg, rd) = classical::build_series::<Rational>(classical::Series::A, 2).unwrap();
//! let pi = classical::standard_r_matrix(&alg, &rd).unwrap();
//! let x = rd.generator_vector(&rd.parse_root("L1-L3").unwrap()).unwrap();
//! let report = construction::construct(&alg, &pi, &x).unwrap();
//! assert!(report.condition.holds && report.is_coisotropic());
//! assert_eq!(report.dim(), 4);
//! ```

pub mod bialgebra;
pub mod classical;
pub mod construction;
pub mod error;
pub mod json;
pub mod liealg;
pub mod linalg;
pub mod multivector;
pub mod scalar;
pub mod subspace;

pub use error::Error;
pub use scalar::{GaussRational, Rational, Scalar};

pub type QMatrix = linalg::Matrix<Rational>;
pub type QiMatrix = linalg::Matrix<GaussRational>;
pub type QVector = linalg::Vector<Rational>;
pub type QiVector = linalg::Vector<GaussRational>;
pub type QLieAlgebra = liealg::LieAlgebra<Rational>;
pub type QiLieAlgebra = liealg::LieAlgebra<GaussRational>;
pub type QMultivector = multivector::Multivector<Rational>;
pub type QiMultivector = multivector::Multivector<GaussRational>;
pub type QSubspace = subspace::Subspace<Rational>;
pub type QiSubspace = subspace::Subspace<GaussRational>;
