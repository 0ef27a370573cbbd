use thiserror::Error;

/// Errors raised by the library. The CLI maps `Internal` to exit code 3 and
/// every other variant to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported prime {p}: {reason}")]
    UnsupportedPrime { p: u64, reason: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("Hensel lifting failed: {0}")]
    Hensel(String),
    #[error("insufficient precision: {0}")]
    Precision(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
