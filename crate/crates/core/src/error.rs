use thiserror::Error;

/// Errors raised by the library surface. Identity-check failures are not
/// errors; they come back as a [`crate::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("triangular index must be nonnegative, got {0}")]
    NegativeIndex(i64),

    #[error("table size must be at least {min}, got {got}")]
    TableTooSmall { min: usize, got: usize },

    #[error("constant term {0} is not a unit over the integers")]
    NonUnitConstant(String),

    #[error("logarithmic derivative needs constant term 1, got {0}")]
    ConstantNotOne(String),

    #[error("product factor exponent must be positive")]
    ZeroExponent,

    #[error("a series needs at least one coefficient")]
    EmptySeries,

    #[error("invalid divisor class: {0}")]
    InvalidClass(String),

    #[error("{0} has no figurate recurrence")]
    NoRecurrence(crate::DivisorSumKind),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
