use gns_core::GnsError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_INPUT: i32 = 2;
    pub const UNREALIZABLE: i32 = 3;
    pub const MISMATCH: i32 = 4;
    pub const OVER_BUDGET: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Gns(#[from] GnsError),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Gns(GnsError::UnrealizableCorner(_)) => exit::UNREALIZABLE,
            CliError::Gns(GnsError::BudgetExceeded { .. }) => exit::OVER_BUDGET,
            CliError::Mismatch(_) => exit::MISMATCH,
            _ => exit::INVALID_INPUT,
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;
