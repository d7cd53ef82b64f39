use std::path::PathBuf;

use thiserror::Error;

/// Anything that stops a command before it can report a verdict; all map to
/// exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] freemix::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;
