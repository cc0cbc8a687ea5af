use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    ZeroDivision,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("vector is not normalized")]
    NotNormalized,
    #[error("unknown state label {0:?}")]
    UnknownLabel(String),
    #[error("value {0} has no square root in the field")]
    NotRepresentable(String),
    #[error("basis does not diagonalize the operator: <{row}|C|{col}> = {value}")]
    NotDiagonalizedByBasis { row: String, col: String, value: String },
    #[error("basis is not orthonormal and complete: {0}")]
    InvalidBasis(String),
    #[error("expectation value is not real: {0}")]
    NonRealExpectation(String),
    #[error("negative eigenvalue {0:e} beyond tolerance")]
    NegativeEigenvalue(f64),
    #[error("shot count must be at least 1")]
    ShotsZero,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
