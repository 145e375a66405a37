use thiserror::Error;

/// Errors raised by constructors and strict-length operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoreError {
    #[error("sequence is not weakly decreasing at position {position}")]
    NotDecreasing { position: usize },
    #[error("negative part {value} at position {position}")]
    NegativePart { value: i64, position: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} out of range 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("progression from {from} to {to} with step {step} is not integral")]
    BadProgression {
        from: String,
        to: String,
        step: String,
    },
    #[error("cannot pad to length {requested}: {needed} entries are needed")]
    PadTooShort { requested: usize, needed: usize },
    #[error("expected an even total, got {0}")]
    OddTotal(i64),
    #[error("invalid sign token {0:?}, expected \"+\" or \"-\"")]
    BadSign(String),
    #[error("invalid sign map entry {0:?}, expected \"part:sign\"")]
    BadSignMapEntry(String),
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error("invalid rational {0:?}")]
    BadRational(String),
}
