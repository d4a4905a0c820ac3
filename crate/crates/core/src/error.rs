use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} is too large (must be below 2^31)")]
    ModulusTooLarge(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("duplicate Vandermonde node {0}")]
    DuplicateNode(u64),

    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("symbol {value} at position {position} is outside the alphabet [0, {max}]")]
    SymbolOutOfRange { position: usize, value: u64, max: u64 },

    #[error("position {position} is erased")]
    UnexpectedErasure { position: usize },

    #[error("{count} erasures exceed the correctable maximum of {max}")]
    TooManyErasures { count: usize, max: usize },

    #[error("offset component b_{index} = {value} is outside [0, {max}]")]
    OffsetOutOfRange { index: usize, value: u64, max: u64 },

    #[error("enumeration of {required} items exceeds the budget of {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("inconsistent received word: {0}")]
    Inconsistent(String),

    #[error("uncorrectable received word: {0}")]
    Uncorrectable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
