use mhalg_core::error::Error as CoreError;
use thiserror::Error;

/// Failures of the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(e: impl std::fmt::Display) -> Self {
        CliError::Parse(e.to_string())
    }
}
