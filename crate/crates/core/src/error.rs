use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Domain` covers caller mistakes (bad parameters, violated
/// preconditions). `Invariant` means an algorithm reached a state its
/// correctness argument rules out; it always indicates a bug and carries
/// enough context to reproduce the instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("search budget exhausted: {0}")]
    Exhausted(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
