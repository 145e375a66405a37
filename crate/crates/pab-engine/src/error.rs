use partition_core::CoreError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(
        "order word has {word_a} A's and {word_b} B's but the pair has lengths {len_a},{len_b}"
    )]
    OrderMismatch {
        word_a: usize,
        word_b: usize,
        len_a: usize,
        len_b: usize,
    },
    #[error("procedure ({side}) needs a nonempty {side} side")]
    EmptySide { side: char },
    #[error("dropping the leading A entry requires the first A to precede every B")]
    LeadingANotMinimal,
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("invalid padding: {0}")]
    BadPad(String),
    #[error("index k={k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid order word character {0:?}, expected 'A' or 'B'")]
    BadOrderChar(char),
}
