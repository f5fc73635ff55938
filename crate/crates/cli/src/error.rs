use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Config {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("evaluation failed in case {case}: {source}")]
    Evaluation {
        case: usize,
        source: certainty_core::Error,
    },
    #[error(transparent)]
    Core(#[from] certainty_core::Error),
    #[error("worker pool: {0}")]
    Pool(String),
}

impl CliError {
    /// 2 for anything the user can fix in the input, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config { .. } | CliError::Read { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
