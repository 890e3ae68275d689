use thiserror::Error;

/// Every failure the front end reports, each tied to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("truncation too small: {0}")]
    Truncation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::InvalidParams(_) => 4,
            CliError::Truncation(_) => 5,
            CliError::Io(_) => 1,
        }
    }
}

impl From<qpol::Error> for CliError {
    fn from(e: qpol::Error) -> Self {
        match e {
            qpol::Error::InvalidState(msg) => CliError::Invariant(msg),
            qpol::Error::TruncationTooSmall { .. } => CliError::Truncation(e.to_string()),
            qpol::Error::Domain { .. } | qpol::Error::DimensionMismatch { .. } => {
                CliError::InvalidParams(e.to_string())
            }
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
