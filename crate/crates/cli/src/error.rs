use mdcodes::Error;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Budget,
    /// A broken internal invariant.
    Internal,
}

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Parse, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Precondition, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Parse => EXIT_PARSE,
            ErrorKind::Precondition => EXIT_PRECONDITION,
            ErrorKind::Budget => EXIT_BUDGET,
            ErrorKind::Internal => EXIT_INTERNAL,
        }
    }

    /// Prefixes the message, e.g. with the argument that failed to parse.
    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::Parse(_) | Error::InvalidRing(_) => ErrorKind::Parse,
            Error::BudgetExceeded { .. } => ErrorKind::Budget,
            Error::WitnessNotFound | Error::IdempotentIdentity(_) | Error::SpecMismatch => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        };
        CliError { kind, message: e.to_string() }
    }
}
