use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("exponent of {var} must be non-negative, got {value}")]
    NegativeExponent { var: char, value: i64 },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("parts {parts:?} do not form a window class of window {window}")]
    Classification { window: u32, parts: Vec<u32> },
    #[error("window class index {0} is outside 0..=15")]
    ClassIndex(u8),
    #[error("invalid parameters: {0}")]
    Parameter(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("invalid general parameters (lambda={lambda}, k={k}, a={a}): {reason}")]
    GeneralParams {
        lambda: u32,
        k: u32,
        a: u32,
        reason: String,
    },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Bound(String),
}
