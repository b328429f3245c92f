use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// Variant names double as the stable error identifiers printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("reversal degree {requested} is smaller than the polynomial degree {degree}")]
    ReverseDegreeTooSmall { degree: usize, requested: usize },

    #[error("factor {factor} has roots on both sides of the unit circle; splitting it needs an algebraic extension of Q(i)")]
    MixedLocationFactor { factor: String },

    #[error("Schur-Cohn recursion hit a unit-modulus reflection coefficient on {factor}; supply it pre-factored")]
    SingularSchurCohn { factor: String },

    #[error("matrix is singular (determinant vanishes identically)")]
    SingularMatrix,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("input does not have the required shape: {0}")]
    ShapeMismatch(String),

    #[error("diagonalization condition violated: {0}")]
    ConditionFailed(String),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
}

impl Error {
    /// Short identifier, e.g. `MixedLocationFactor`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ReverseDegreeTooSmall { .. } => "ReverseDegreeTooSmall",
            Error::MixedLocationFactor { .. } => "MixedLocationFactor",
            Error::SingularSchurCohn { .. } => "SingularSchurCohn",
            Error::SingularMatrix => "SingularMatrix",
            Error::SizeMismatch(_) => "SizeMismatch",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::ConditionFailed(_) => "ConditionFailed",
            Error::InvalidFactorization(_) => "InvalidFactorization",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
