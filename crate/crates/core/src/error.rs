use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is larger than a solver or arithmetic bound allows.
    #[error("capacity error: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: String,
        limit: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("parse error in {path}: {message} at line {line}, column {column}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn capacity(
        what: &'static str,
        actual: impl ToString,
        limit: impl ToString,
    ) -> Self {
        Error::Capacity {
            what,
            actual: actual.to_string(),
            limit: limit.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
