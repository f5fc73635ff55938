use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {dim} too small (need at least {min})")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("vector has zero or non-finite norm")]
    ZeroNorm,

    #[error("operator is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not square or has ragged rows")]
    NotSquare,

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed interval ({0}, {1})")]
    MalformedInterval(f64, f64),

    #[error("path evaluation failed: {0}")]
    PathEvaluation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
