use std::io;
use std::path::PathBuf;

use linetw_core::Error as CoreError;
use thiserror::Error;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    /// A decomposition failed validation, or `verify` found a mismatch.
    Mismatch = 1,
    /// Parse, IO or usage problems.
    Usage = 2,
    Budget = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(CoreError::BudgetExceeded { .. }) => ExitCode::Budget,
            _ => ExitCode::Usage,
        }
    }
}
