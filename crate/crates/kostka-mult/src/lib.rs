//! Signed multiplicities attached to an indexed pair of partition rows.
//!
//! A shuffle order on the rows (α, β) singles out the cross pairs along
//! which mass may transfer towards earlier positions. Counting transfer
//! vectors over all permutation twists of a target pair (ν, μ) yields a
//! signed multiplicity; this crate computes it two ways:
//!
//! * [`mult_bruteforce`] evaluates the signed double sum over both symmetric
//!   groups directly, each term counted by [`x_solution_count`];
//! * [`mult_recursive`] peels the leading row entry and recurses through
//!   interlacing rows, memoised across calls.
//!
//! Both agree on every input; the brute force is the oracle, the recursion
//! is the fast path.

mod brute;
mod error;
mod recursive;
mod shift;

pub use brute::{
    mult_bruteforce, mult_bruteforce_audited, mult_bruteforce_seq, twist, AuditTerm, MultResult,
};
pub use error::{MultError, Result};
pub use recursive::{mult_recursive, q_set};
pub use shift::{cross_pairs, shift_apply, x_solution_count, CrossPair, ShiftVector};
