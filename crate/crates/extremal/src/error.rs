use thiserror::Error;

/// Failures surfaced by the extremal computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error(transparent)]
    Core(#[from] partition_core::CoreError),
    #[error(transparent)]
    Engine(#[from] pab_engine::EngineError),
    #[error(transparent)]
    Mult(#[from] kostka_mult::MultError),
    #[error(transparent)]
    Corr(#[from] springer_corr::CorrError),
    #[error("every part must be even")]
    OddPartUnsupported,
    #[error("the empty couple has no first part to peel")]
    EmptyCouple,
    #[error("unknown sweep kind: {0}")]
    UnknownSweep(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, ExtremalError>;
