//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: expected length {expected}, got {actual}")]
    SizeMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("row index {index} out of range for {nrows} rows")]
    IndexOutOfRange { index: usize, nrows: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported matrix-market format: {0}")]
    UnsupportedFormat(String),

    #[error("degenerate problem: {0}")]
    DegenerateProblem(String),

    #[error("inconsistent system: {0}")]
    InconsistentSystem(String),

    #[error("least-squares solver failed: {0}")]
    SolverFailure(String),

    #[error("non-finite iterate detected at iteration {iter}")]
    Divergence { iter: usize },

    #[error("matrix {m}x{n} exceeds the dense decomposition cap of {cap}")]
    CapExceeded { m: usize, n: usize, cap: usize },

    #[error(
        "convergence bound violated at iteration {k}: observed factor {observed} \
         exceeds bound factor {bound} (block size {tau_size})"
    )]
    BoundViolated {
        k: usize,
        tau_size: usize,
        observed: f64,
        bound: f64,
    },

    #[error("verification failed: {0}")]
    VerificationFailure(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
