use std::io;
use thiserror::Error;

/// Errors produced by the toolkit. Input-side problems (parsing, bad
/// parameters) are distinguished from numeric failures so the CLI can map
/// them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty input: no edges and no node-count header")]
    EmptyInput,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("graph too large for dense operation: N={n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    /// Process exit code for the CLI: 2 for input errors, 3 for numeric ones.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Numeric(_) | Error::TooLarge { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
