use thiserror::Error;

#[derive(Debug, Error)]
pub enum GdofError {
    #[error(transparent)]
    Core(#[from] gdof_core::Error),
    #[error(transparent)]
    Rational(#[from] gdof_core::rational::ParseRationalError),
    #[error("SNR must be a finite value above 1, got {0}")]
    InvalidSnr(f64),
    #[error("rho pair must satisfy 1 < lo < hi, got ({0}, {1})")]
    InvalidRhoPair(f64, f64),
    #[error("{name} should be {expected:?}, found {found:?}")]
    Shape {
        name: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("bound {0} evaluated to a non-finite value")]
    NonFinite(usize),
    #[error("non-finite rate evaluation")]
    NonFiniteEvaluation,
    #[error("needs a symmetric (M, N, M, N) channel")]
    NotSymmetric,
    #[error("{0}")]
    Invalid(String),
    #[error("malformed JSON document: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = GdofError> = std::result::Result<T, E>;
