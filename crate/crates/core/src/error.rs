use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("duplicate matrix entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },

    #[error("degenerate code: parity-check matrix has full column rank ({0} columns)")]
    DegenerateCode(usize),

    #[error("construction failed after {attempts} attempts: {reason}")]
    Construction { attempts: usize, reason: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn dim(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}
