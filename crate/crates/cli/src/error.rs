use std::path::{Path, PathBuf};

use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mspectra::Error),

    #[error("malformed argument {token:?}: {reason}")]
    Spec { token: String, reason: String },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Usage(String),

    #[error("format {format} is not available for {command}")]
    Format { format: &'static str, command: &'static str },
}

impl CliError {
    pub fn spec(token: &str, reason: &str) -> Self {
        CliError::Spec { token: token.to_string(), reason: reason.to_string() }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    pub fn category(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.category(),
            CliError::Spec { .. } => "parse",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::Format { .. } => "format",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Io { .. } => 74,
            _ => 65,
        }
    }

    /// `{"error": {"category": .., "message": ..}}`
    pub fn record(&self) -> serde_json::Value {
        json!({ "error": { "category": self.category(), "message": self.to_string() } })
    }
}
