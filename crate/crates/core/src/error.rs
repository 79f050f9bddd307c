use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },

    #[error("operation requires level >= {min}, got {got}")]
    LevelTooLow { min: u32, got: u32 },

    #[error("level {got} exceeds the configured maximum {max}")]
    LevelTooHigh { max: u32, got: u32 },

    #[error("basis index {index} out of range for level {level}")]
    IndexOutOfRange { level: u32, index: usize },

    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },

    #[error("invalid scalar {0:?}")]
    ParseScalar(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("norm is irrational (norm^2 = {0}); use an exact radius test on the squared norm instead")]
    IrrationalNorm(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
