use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Identity failures are never errors: they are entries in a
/// [`CheckReport`](crate::report::CheckReport). Errors are reserved for
/// malformed shapes, violated preconditions and internal consistency traps.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("extension admits no diagonal section")]
    NotDiagonal,

    #[error("degree {0} is out of the supported range")]
    Degree(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Dimension(msg.into()))
}
