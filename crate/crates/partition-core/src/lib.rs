//! Exact scalars, weakly decreasing sequences, partitions, the dominance
//! order, and the small enumerators the rest of the workspace consumes.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

mod enumerate;
mod error;
mod partition;
mod rational;
mod seq;
mod sign;

pub use enumerate::{
    enumerate_bipartitions, enumerate_marked, enumerate_partitions, enumerate_symplectic,
};
pub use error::CoreError;
pub use partition::Partition;
pub use rational::{parse_rat, rat, Rat};
pub use seq::{arith_progression, RatSeq};
pub use sign::{parse_sign_map, sign_map_text, Sign, SignMap};
