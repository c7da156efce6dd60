use thiserror::Error;

/// Errors raised by the combinatorial machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("weight {0} lies outside the allowed set for this configuration")]
    OutsideRange(String),
    #[error("p = {p} is below the smallest admissible prime {min}")]
    PrimeBelowBound { p: u32, min: u32 },
    #[error("arrow count mismatch: {0}")]
    ArrowCount(String),
    #[error("flavor mismatch: {0}")]
    Flavor(String),
    #[error("sequence lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("weights are not in the same orbit")]
    NotComparable,
    #[error("search budget of {0} exceeded (raise KLCAP_MAX_ORBIT)")]
    Budget(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial coefficient overflow")]
    Overflow,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
