//! Command-line front end: each subcommand is a thin adapter over the
//! `equiangular` library. Output goes to the supplied writer so the commands
//! can be driven in-process.

pub mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

pub use commands::run;

/// Process exit status of a completed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    ValidationFailed,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        match s {
            Status::Success => ExitCode::SUCCESS,
            Status::ValidationFailed => ExitCode::from(1),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flag or argument value; exit 2.
    #[error("{flag}: {message}")]
    Usage { flag: String, message: String },
    /// Input read fine but its content is rejected; exit 1.
    #[error(transparent)]
    Input(#[from] equiangular::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn usage(flag: &str, message: impl ToString) -> Self {
        CliError::Usage { flag: flag.to_string(), message: message.to_string() }
    }

    pub fn status(&self) -> u8 {
        match self {
            CliError::Usage { .. } | CliError::Io { .. } => 2,
            CliError::Input(_) => 1,
        }
    }
}

pub(crate) fn stdout_io(err: std::io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source: err }
}

pub(crate) fn write_file(path: &std::path::Path, contents: &str) -> Result<(), CliError> {
    std::fs::File::create(path)
        .and_then(|mut f| f.write_all(contents.as_bytes()))
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
