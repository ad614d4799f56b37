use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] semicolor::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("{0}")]
    Verification(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Verification(_) => "verification-failed",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(semicolor::Error::ResourceLimit { .. }) => 3,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Verification(_) => 4,
            CliError::Io { .. } => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
