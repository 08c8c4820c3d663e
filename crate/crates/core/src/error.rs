use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |H[{row},{col}] - conj(H[{col},{row}])| = {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("matrix is not real skew-symmetric: deviation {deviation:e} at ({row},{col})")]
    NotSkew { row: usize, col: usize, deviation: f64 },

    #[error("eigensolver stopped after {sweeps} sweeps with residual {residual:e}")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },

    /// Indices are 1-based, as in the matrix definitions.
    #[error("{property} violated at ({row},{col})")]
    StructureViolation { row: usize, col: usize, property: &'static str },

    #[error("zeros table is empty")]
    EmptyTable,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: ordinate {value} does not exceed previous {previous}")]
    NotIncreasing { line: usize, previous: f64, value: f64 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
