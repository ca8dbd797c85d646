use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, GammaError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("modulus must be a positive integer")]
    ZeroModulus,

    #[error("part {part} is not divisible by the modulus {modulus}")]
    NotDivisible { part: u32, modulus: u32 },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("refusing to enumerate {what}: size {size} exceeds the guard {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),

    #[error("invalid Kostka table: {0}")]
    InvalidTable(String),

    #[error("incomplete Kostka table, missing entries: {}", .missing.join(", "))]
    IncompleteTable { missing: Vec<String> },

    #[error("table is inconsistent: transferred multiplicity is negative ({0})")]
    NegativeMultiplicity(BigInt),

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl GammaError {
    /// True for the refusals raised by enumeration guards.
    pub fn is_refusal(&self) -> bool {
        matches!(self, GammaError::GuardExceeded { .. })
    }
}

impl From<serde_json::Error> for GammaError {
    fn from(err: serde_json::Error) -> Self {
        GammaError::Json(err.to_string())
    }
}
