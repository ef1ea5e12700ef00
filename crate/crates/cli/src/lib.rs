//! Experiment harness around the `epiword` library: text-form parsing,
//! prefix-source pipelines, reproducible reports and conjecture sweeps.

pub mod config;
pub mod experiments;
pub mod parse;
pub mod report;
pub mod sample;
pub mod source;
pub mod sweep;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] epiword::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit code: 2 for usage and input errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Core(epiword::Error::InvalidArgument(_) | epiword::Error::AlphabetMismatch(_)) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}
