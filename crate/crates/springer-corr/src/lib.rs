//! The generalized Springer correspondence for symplectic partitions.
//!
//! A marked couple is a symplectic partition λ together with a sign on each
//! distinct even part. Each couple determines a block index k and a pair of
//! rows (α, β); the bridge between the two descriptions is a two-row symbol:
//!
//! * [`sharp_symbols`] builds the unmarked symbol of λ from a staircase
//!   shift, [`marked_symbols`] folds the signs in by swapping integer runs;
//! * [`pair_symbols`] builds the same symbol from (k, α, β);
//! * [`springer_to_pair`] and [`pair_to_springer`] convert in both
//!   directions and check each other;
//! * [`sign_twist`] transposes and swaps the rows, the combinatorial shadow
//!   of tensoring with the sign character;
//! * [`order_from_pair`] reads a shuffle order off the merged symbol and
//!   [`u_v_sequences`] widens the rows by half-integer staircases.

mod datum;
mod error;
mod marked;
mod order;
mod symbols;

pub use datum::{pair_to_springer, sign_twist, springer_to_pair, SpringerDatum};
pub use error::{CorrError, Result};
pub use marked::{enumerate_couples, epsilon_on_indices, k_of, m_value, MarkedSymplectic};
pub use order::{order_from_pair, u_v_sequences};
pub use symbols::{marked_symbols, pair_symbols, sharp_symbols, SymbolPair};
