//! Command-line front end: function evaluation, subordination certificates,
//! hypothesis checks, figure data and the acceptance suite.

pub mod args;
pub mod commands;
pub mod functions;
pub mod report;
pub mod suite;

use std::fmt;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const REFUTED: i32 = 2;
    pub const INCONCLUSIVE: i32 = 3;
}

/// Anything that ends a command with exit code 1.
#[derive(Debug)]
pub struct CliError(String);

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<expdisk_core::Error> for CliError {
    fn from(e: expdisk_core::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError(format!("json: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError(format!("csv: {e}"))
    }
}
