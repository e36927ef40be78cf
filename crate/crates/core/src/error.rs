use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point {0}")]
    PoleAtEvaluation(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series is not invertible (zero element)")]
    NonInvertible,
    #[error("negative valuation {0}: the series has a genuine pole in h")]
    NegativeValuation(i64),
    #[error("series precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("parameters are not generic: {0}")]
    NotGeneric(String),
    #[error("n = {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("rewrite step limit exceeded ({0} steps)")]
    RewriteLimit(usize),
    #[error("canonical word count {found} differs from expected {expected}")]
    DimensionMismatch { found: usize, expected: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(char, char),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cache i/o: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
