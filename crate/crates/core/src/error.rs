use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped the way the command-line front end reports them:
/// malformed input, unsupported types or ranks, and violated internal
/// consistency checks (which indicate bad tables or a convention mismatch).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("group order exceeds the configured bound {0}")]
    BoundExceeded(usize),

    #[error("consistency check failed: {0}")]
    Assertion(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
