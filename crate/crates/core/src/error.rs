use thiserror::Error;

/// Errors from parameter validation and parsing.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("rates must be distinct: {0}")]
    DuplicateRates(String),
    #[error("parameter must be positive: {0}")]
    NonPositive(String),
    #[error("need at least {need} parameters, got {got}")]
    TooFewParameters { need: usize, got: usize },
    #[error("parameter lists must have equal length: {0}")]
    LengthMismatch(String),
    #[error("rates too close for float-mode construction: min relative gap {gap:.3e} < 1e-6")]
    ClusteredRates { gap: f64 },
    #[error("values must be distinct: {0}")]
    DuplicateValues(String),
    #[error("value must be nonzero: {0}")]
    ZeroValue(String),
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("not a rational number: {0:?}")]
    ParseRational(String),
    #[error("series needs integer shapes in exact mode (got {0})")]
    NonIntegerShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
