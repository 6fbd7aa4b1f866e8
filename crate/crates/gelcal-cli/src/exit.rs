//! Exit-code contract, fixed so scripts can branch on the failure class:
//! 0 success, 2 bad input, 3 not enough data, 4 inversion failure,
//! 5 numerical solver failure.

use gelcal::Error;

pub const OK: u8 = 0;
pub const INPUT: u8 = 2;
pub const DATA: u8 = 3;
pub const INVERSION: u8 = 4;
pub const SOLVER: u8 = 5;

/// A failure carrying its exit class.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: INPUT,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InsufficientData { .. } | Error::DegenerateDesign(_) => DATA,
            Error::InversionFailure { .. } => INVERSION,
            Error::SolverFailure(_) | Error::BracketFailure { .. } | Error::SingularInput(_) => {
                SOLVER
            }
            _ => INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: INPUT,
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
