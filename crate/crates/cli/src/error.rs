use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const PASS: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const PARAMETER: u8 = 2;
    pub const IO: u8 = 3;
    pub const RESOURCE_CAP: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parameter(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Format(String),
    #[error("{0}")]
    ResourceCap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parameter(_) => exit::PARAMETER,
            CliError::Io { .. } | CliError::Format(_) => exit::IO,
            CliError::ResourceCap(_) => exit::RESOURCE_CAP,
        }
    }
}

impl From<triortho::Error> for CliError {
    fn from(e: triortho::Error) -> Self {
        match e {
            triortho::Error::CapExceeded { .. } => CliError::ResourceCap(e.to_string()),
            other => CliError::Parameter(other.to_string()),
        }
    }
}
