use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Verification failure, or an I/O problem.
    pub const FAILURE: i32 = 1;
    pub const DOMAIN: i32 = 2;
    pub const CONVERGENCE: i32 = 3;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] neel_lab::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_domain() => exit::DOMAIN,
            CliError::Core(_) => exit::CONVERGENCE,
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) | CliError::Csv(_) => exit::FAILURE,
        }
    }
}
