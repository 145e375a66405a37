use thiserror::Error;

/// Errors surfaced by multiplicity computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultError {
    #[error(transparent)]
    Core(#[from] partition_core::CoreError),

    #[error(transparent)]
    Engine(#[from] pab_engine::EngineError),

    /// The two sides of a multiplicity query must carry the same total.
    #[error("total of the target pair differs from the total of the source pair")]
    SumMismatch,

    /// A target sequence must have exactly as many entries as its source row.
    #[error("target length {got} does not match source length {want}")]
    TargetLength { want: usize, got: usize },

    /// A shift vector may only be supported on cross pairs of the ambient order.
    #[error("shift vector key is not a cross pair of this indexed pair")]
    BadShiftKey,

    /// Shift multiplicities are nonnegative.
    #[error("negative shift multiplicity")]
    NegativeShift,
}

pub type Result<T> = std::result::Result<T, MultError>;
