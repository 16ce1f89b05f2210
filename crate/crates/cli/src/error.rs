use dgp_core::DgpError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] DgpError),
}

impl CliError {
    /// 2 for unreadable input, 3 for violated preconditions, 4 for broken
    /// internal invariants.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Core(DgpError::Parse(_)) => 2,
            CliError::Core(DgpError::Internal(_)) => 4,
            CliError::Usage(_) | CliError::Core(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
