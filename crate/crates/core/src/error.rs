use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("factor {0} does not occur in the indexed word")]
    NotInLanguage(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("insufficient context: {0}")]
    InsufficientContext(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
