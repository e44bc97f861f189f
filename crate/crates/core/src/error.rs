use thiserror::Error;

/// Errors produced by the samplers, solvers and reference laws.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{solver} did not converge after {iterations} iterations ({detail})")]
    NonConvergence {
        solver: &'static str,
        iterations: usize,
        detail: String,
    },

    #[error("eigenvalue {value:e} is below the roundoff floor -{floor:e}; input is corrupted")]
    NegativeEigenvalue { value: f64, floor: f64 },

    #[error("pencil roots not bracketed at degree {degree} in [{lo:e}, {hi:e}]: coupling b~ must be positive")]
    BracketViolation { degree: usize, lo: f64, hi: f64 },

    #[error("quadrature failure: {0}")]
    Quadrature(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
