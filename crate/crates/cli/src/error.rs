use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Numerical(#[from] vibronic::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("validation failed: {0}")]
    Validation(String),
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        CliError::Config(message.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Config(_) => 2,
            CliError::Numerical(e) => match e {
                vibronic::Error::Truncation { .. }
                | vibronic::Error::IllConditioned { .. }
                | vibronic::Error::NonMonotone { .. } => 1,
                vibronic::Error::Domain { .. } | vibronic::Error::UnequalFrequencies { .. } => 2,
                _ => 3,
            },
            CliError::Io { .. } => 4,
        }
    }
}
