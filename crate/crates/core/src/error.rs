use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("multiplicative order of {k} modulo {modulus} is undefined: not coprime")]
    NotCoprime { k: u64, modulus: u64 },

    #[error("invalid group spec `{0}`")]
    InvalidSpec(String),

    #[error("unsupported group parameters: {0}")]
    Unsupported(String),

    #[error("group order {order} exceeds the supported ceiling {limit}")]
    OrderTooLarge { order: u128, limit: u64 },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("exponent k = {0} is below 2")]
    ExponentTooSmall(u64),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("census inconsistency: {0}")]
    Census(String),

    #[error("structural mismatch: {0}")]
    StructureMismatch(String),

    #[error("closed form disagrees with computation: {0}")]
    Discrepancy(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
