use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input value is malformed or outside its admissible range.
    #[error("invalid {field}: {reason}")]
    Validation { field: &'static str, reason: String },

    /// An operation was called outside its contract.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Exact arithmetic produced a value that cannot be represented faithfully.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// An evaluated digit fell outside `[0, p - 1]`.
    #[error("digit {value} at index {index} is outside [0, {max}]")]
    DigitRange { index: usize, value: i64, max: u64 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    /// A containment `V1 <= V2` failed at the given component.
    #[error("containment violated at component {index}")]
    Containment { index: usize },
}

impl Error {
    pub fn validation(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Validation {
            field,
            reason: reason.into(),
        }
    }
}
