//! Ordered index words over two rows, the two alternating extraction
//! procedures, the recursive pair sets they generate (full, offset
//! constrained, and forced-B-prefix variants), symbols with their merged
//! form, and the insertion and counting maps used to compare them.
//!
//! Everything is pure and deterministic; memo caches live per call.

mod constrained;
mod error;
mod order;
mod pair;
mod sets;
mod symbol;

pub use constrained::{
    allowed_procedures, canonical_element, canonical_trace, p_constrained_set, Params, TraceEntry,
};
pub use error::EngineError;
pub use order::{ShuffleOrder, Side};
pub use pair::{drop_first, pad_pair, step_a, step_b, BiPartition, IndexedPair, StepOutcome};
pub use sets::{iota, p_b_c_set, p_set};
pub use symbol::{b_count, merged_symbol, p_bracket, symbol_of, Symbol};
