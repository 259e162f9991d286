use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed JSON: {0}")]
    Json(serde_json::Error),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Core(#[from] mobile_hook_core::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0} mismatches")]
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Mismatch(_) => ExitCode::from(2),
            _ => ExitCode::from(1),
        }
    }
}
