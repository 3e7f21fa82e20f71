//! CLI errors and their exit codes.
//!
//! Exit codes: `0` success, `2` input error (unreadable file, malformed
//! JSON, or a value that fails validation), `3` numeric-policy
//! violation (a theorem residual above tolerance, which indicates an
//! implementation bug rather than bad input).

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Unreadable input (missing file, stdin failure).
    Io(String),
    /// Malformed JSON.
    Parse(String),
    /// Structurally valid JSON describing an invalid value.
    Validation(String),
    /// Path probabilities must satisfy Σ‖α_k‖² ≤ 1.
    NotSubnormalized { total: f64 },
    /// The screen needs at least two bins.
    BadBinCount { bins: usize },
    /// A numeric invariant failed beyond tolerance.
    Policy(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Policy(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(message) => write!(f, "io error: {message}"),
            CliError::Parse(message) => write!(f, "parse error: {message}"),
            CliError::Validation(message) => write!(f, "invalid input: {message}"),
            CliError::NotSubnormalized { total } => {
                write!(f, "path probabilities sum to {total}, must be ≤ 1")
            }
            CliError::BadBinCount { bins } => {
                write!(f, "screen needs at least 2 bins, got {bins}")
            }
            CliError::Policy(message) => write!(f, "numeric-policy violation: {message}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ditkit_core::Error> for CliError {
    fn from(err: ditkit_core::Error) -> Self {
        CliError::Validation(err.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Parse(err.to_string())
    }
}
