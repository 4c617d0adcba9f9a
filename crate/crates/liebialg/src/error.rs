use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("multivector degree {degree} exceeds the supported maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("operation needs a multivector of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("the algebra carries no matrix realization")]
    NoRealization,

    #[error("matrix does not lie in the span of the realization")]
    OutsideRealizationSpan,

    #[error("realization commutator disagrees with the structure constants at pair ({i}, {j})")]
    RealizationMismatch { i: usize, j: usize },

    #[error("realization matrices are linearly dependent")]
    DependentRealization,

    #[error("Jacobi identity fails at basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),

    #[error("rank {rank} is out of range for series {series} (minimum {min})")]
    RankOutOfRange {
        series: char,
        rank: usize,
        min: usize,
    },

    #[error("pairing of the root-space generators for {root} vanishes")]
    DegenerateRootPairing { root: String },

    #[error("'{text}' is not a root of {series}{rank}")]
    UnknownRoot {
        text: String,
        series: char,
        rank: usize,
    },

    #[error("root {root} violates the string condition")]
    StringConditionViolated { root: String },

    #[error("internal consistency failure: {0}")]
    OracleContradiction(String),

    #[error("invalid scalar '{text}': {message}")]
    InvalidScalar { text: String, message: String },

    #[error("invalid {field}: {message}")]
    InvalidInput { field: String, message: String },
}

impl Error {
    pub fn invalid_input(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidInput {
            field: field.into(),
            message: message.into(),
        }
    }
}
