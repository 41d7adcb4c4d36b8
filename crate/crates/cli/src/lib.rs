//! Command-line front end for `urtetrad`: tetrad emission, seeded
//! verification sweeps, Fock-operator queries and the expansion law.
//!
//! All output is JSON on stdout. Exit codes: 0 success, 1 a verification or
//! physics failure, 2 a usage error.

pub mod commands;
pub mod json;
pub mod sampling;
pub mod verify;

use std::fmt;

/// Failure of a command, carrying its exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad flags or inadmissible input. Exit code 2.
    Usage(String),
    /// A physics or verification failure. Exit code 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<urtetrad::Error> for CliError {
    fn from(e: urtetrad::Error) -> Self {
        use urtetrad::Error::*;
        match e {
            TruncationTooLossy { .. } | DyadInvalid { .. } | SingularFrameMetric => {
                CliError::Failure(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}
