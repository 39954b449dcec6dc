use std::fmt;
use std::process::ExitCode;

use gcx_core::Error;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable input, malformed file or invalid data (exit code 2).
    Parse(String),
    /// Well-formed input that the operation does not accept (exit code 3).
    Precondition(String),
    /// Numerical method failed to converge (exit code 4).
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Numeric(_) => 4,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition violated: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Numeric(_) => CliError::Numeric(msg),
            Error::InvalidGraph(_)
            | Error::InvalidRotation(_)
            | Error::NonPlanar(_)
            | Error::InvalidColoring(_)
            | Error::InvalidGenerator { .. }
            | Error::WrongVariableCount { .. }
            | Error::VariableMismatch(..)
            | Error::NotSquare { .. } => CliError::Parse(msg),
            _ => CliError::Precondition(msg),
        }
    }
}
