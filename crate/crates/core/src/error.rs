use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid bit symbol {found:?} at position {pos}")]
pub struct ParseBitsError {
    pub pos: usize,
    pub found: char,
}

/// Failure to decode a self-delimiting pair code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("no 1 at an odd position terminates the padded header")]
    MissingTerminator,
    #[error("declared length {declared} exceeds the {available} remaining bits")]
    Truncated { declared: u64, available: usize },
    #[error("pair level must be 1, 2 or 3 (got {0})")]
    BadLevel(u8),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseBitsError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
    #[error("execution budget fields must be strictly positive")]
    EmptyBudget,
    #[error("request refused: {0}")]
    ResourceRefused(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("sequence source exhausted after {0} bits")]
    SourceExhausted(usize),
    #[error("selection rule {rule} exceeded its step cap on a prefix of length {prefix_len}")]
    RuleStepCap { rule: String, prefix_len: usize },
    #[error("test rejected at load: level {level} has measure {measure} > 2^-{level}")]
    MeasureViolation { level: u32, measure: String },
    #[error("invalid source spec: {0}")]
    BadSource(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
