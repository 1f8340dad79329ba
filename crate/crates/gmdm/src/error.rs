use thiserror::Error;

/// Errors raised by the library.
///
/// Infeasibility of an inverse problem is *not* an error: solvers return
/// `Ok(None)` when no path of the requested type exists. Errors signal
/// misuse (invalid arguments, mismatched controls) or I/O failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A turning primitive was asked to run with `omega == 0`, or vice versa.
    #[error("wrong primitive: {0}")]
    WrongPrimitive(String),

    /// Segment controls do not match the requested path type.
    #[error("invalid path type: {0}")]
    InvalidPathType(String),

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
