use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit: {what} exceeds the bound {bound}")]
    ResourceLimit { what: String, bound: u64 },

    /// Raised by the general partition constructor when two blocks overlap
    /// or the blocks fail to cover the group.
    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// Short machine-readable category, used as the CLI error prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::NotAPartition(_) => "not-a-partition",
            Error::UnsupportedPattern(_) => "unsupported-pattern",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
