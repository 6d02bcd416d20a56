use serde::Serialize;
use thiserror::Error;

/// Exit status for command-line misuse.
pub const EXIT_USAGE: i32 = 64;
/// Exit status for a malformed input document.
pub const EXIT_DATAERR: i32 = 65;
/// Exit status for an unreadable input file.
pub const EXIT_NOINPUT: i32 = 66;
/// Exit status for a numerical failure inside the pipeline.
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error at line {line}, column {column} ({field}): {message}")]
    Parse {
        field: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Numeric(#[from] hankel_hurwitz::Error),
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    exit_code: i32,
    message: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    error: ErrorBody<'a>,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse { .. } | CliError::Shape(_) => EXIT_DATAERR,
            CliError::Io { .. } => EXIT_NOINPUT,
            CliError::Numeric(_) => EXIT_SOFTWARE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Shape(_) => "shape",
            CliError::Io { .. } => "io",
            CliError::Numeric(_) => "numeric",
        }
    }

    /// `{"error": {"kind", "exit_code", "message"}}`
    pub fn to_json(&self) -> String {
        let env = Envelope {
            error: ErrorBody {
                kind: self.kind(),
                exit_code: self.exit_code(),
                message: self.to_string(),
            },
        };
        serde_json::to_string_pretty(&env).expect("error body serializes")
    }
}
