use thiserror::Error;

use crate::text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    SpecMismatch,
    #[error("element {0} is not a unit")]
    NotAUnit(String),
    #[error("order {n} does not divide q - 1 = {q_minus_one}")]
    OrderNotCompatible { n: usize, q_minus_one: u64 },
    #[error("residue {0} is not a simple root of y^n - 1")]
    NotSimpleRoot(String),
    #[error("residue {0} is not a root of y^n - 1")]
    NotARoot(String),
    #[error("substituted value {value} does not satisfy value^{n} = 1")]
    RootOrderViolation { value: String, n: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("no codeword with the requested top coefficient exists (internal inconsistency)")]
    WitnessNotFound,
    #[error("oracle budget exceeded: more than {limit} words")]
    BudgetExceeded { limit: usize },
    #[error("invalid level input: {0}")]
    InvalidLevelInput(String),
    #[error("idempotent identity failed: {0}")]
    IdempotentIdentity(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
