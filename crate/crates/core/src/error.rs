use thiserror::Error;

/// Failure modes shared by every module in the crate.
///
/// `Capacity` is reserved for inputs that are well-formed but exceed a hard
/// size cap or resource budget; callers that report exit statuses treat it
/// like `Input`. Search outcomes such as "Ramsey number above the cap" are
/// values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("protocol violation: {0}")]
    Protocol(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
