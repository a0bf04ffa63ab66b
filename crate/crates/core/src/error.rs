use thiserror::Error;

use crate::words::WordParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordParseError),

    #[error("matrix size n = {0} is not supported; n must be at least 2")]
    DimensionTooSmall(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("NOT_O_ADMISSIBLE: F·conj(F) is not a nonzero real multiple of the identity")]
    NotOAdmissible,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error(
        "tensor dimension {n}^{len} exceeds the desk-scale limit of {limit} coordinates; pass --force to override"
    )]
    Guardrail { n: usize, len: usize, limit: u64 },

    #[error("delta must satisfy 0 < delta < 1/2, got {0}")]
    InvalidDelta(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix file: {0}")]
    MatrixFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
