use std::path::PathBuf;

use thiserror::Error;

use crate::parse::ParseError;

/// Process exit status for IO failures.
pub const EXIT_IO: u8 = 1;
/// Process exit status for inputs that parse but fail validation.
pub const EXIT_VALIDATION: u8 = 2;
/// Process exit status for malformed input text.
pub const EXIT_PARSE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("{context}: invalid JSON at line {line}, column {column}: {message}")]
    Json {
        context: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Invalid(#[from] ribbon_core::Error),

    #[error("invalid knot record: {0}")]
    Record(String),

    /// Some batch entries failed; each has already been reported.
    #[error("batch finished with failures (status {status})")]
    Batch { status: u8 },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Parse(_) | CliError::Json { .. } => EXIT_PARSE,
            CliError::Invalid(_) | CliError::Record(_) => EXIT_VALIDATION,
            CliError::Batch { status } => *status,
        }
    }

    pub fn json(context: impl Into<String>, err: &serde_json::Error) -> Self {
        let message = err.to_string();
        // serde_json appends its own position; keep just the message.
        let message = match message.rfind(" at line ") {
            Some(at) => message[..at].to_string(),
            None => message,
        };
        CliError::Json {
            context: context.into(),
            line: err.line(),
            column: err.column(),
            message,
        }
    }

    /// Short class name used in batch error records.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse(_) | CliError::Json { .. } => "parse",
            CliError::Invalid(_) | CliError::Record(_) => "validation",
            CliError::Batch { .. } => "batch",
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
