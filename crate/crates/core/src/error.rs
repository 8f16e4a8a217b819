use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the range an operation accepts.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// Two objects that must agree in size do not.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a subspace: {0}")]
    NotASubspace(String),

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A computation would exceed the configured size ceiling.
    #[error("resource ceiling exceeded: {0}")]
    ResourceLimit(String),

    /// An identity that holds mathematically was violated. This indicates a
    /// sign bug in the engine rather than bad input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::OutOfRange(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }
}
