use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Scenario { path: String, message: String },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("cannot write report to {path}: {source}")]
    ReportDir { path: PathBuf, source: std::io::Error },
}

impl CliError {
    /// Usage and validation problems both exit with 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
