use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group parameter n must be at least 1, got {0}")]
    InvalidGroupOrder(usize),

    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("operands live in different algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },

    #[error("not a derivation: obstruction {relator} does not vanish")]
    NotADerivation { relator: &'static str },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
