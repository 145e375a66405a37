use thiserror::Error;

/// Errors surfaced by the correspondence.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorrError {
    #[error(transparent)]
    Core(#[from] partition_core::CoreError),

    /// The partition is not symplectic (some odd part has odd multiplicity).
    #[error("partition is not symplectic")]
    NotSymplectic,

    /// Signs must be keyed by exactly the even parts with multiplicity >= 1.
    #[error("sign map keys do not match the even distinct parts of the partition")]
    EpsilonKeys,

    /// The requested row count cannot hold the partition.
    #[error("r = {r} is too small for this partition")]
    RTooSmall { r: usize },

    /// The operation is defined only when every part is even.
    #[error("operation requires a partition with even parts only")]
    OddPartUnsupported,

    /// The merged symbol has a repeated entry.
    #[error("merged symbol has a repeated entry")]
    NotMultiplicityFree,

    #[error("invalid datum: {0}")]
    BadDatum(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, CorrError>;
