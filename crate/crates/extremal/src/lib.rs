//! Dominance extremes of multiplicity tables for marked symplectic couples.
//!
//! For a couple with even parts, the couples reachable from it with nonzero
//! multiplicity admit a dominance-greatest element and, after a sign twist, a
//! dominance-least one. Two independent routes compute the greatest element:
//!
//! * [`bar`] peels the couple part by part, tracking sign changes along the
//!   index line ([`bar_step`] exposes one peel, [`bar_with_trace`] the whole
//!   chain);
//! * [`lambda_max`] extracts it from the constrained bipartition set of the
//!   couple's block rows, then insists the two routes agree.
//!
//! [`lambda_min`] twists the maximum, [`mult_table`] lists every nonzero
//! multiplicity in the block, and [`verify_extremal`] cross-checks one couple
//! end to end. [`verify_sweep`] runs a whole verification family over every
//! couple up to a given total, in parallel when the `parallel` feature
//! (default on) is enabled; [`verify_sweep_seq`] is its single-thread twin.

mod bar;
mod error;
mod extreme;
mod report;
mod table;

pub use bar::{bar, bar_step, bar_with_trace, BarTrace};
pub use error::{ExtremalError, Result};
pub use extreme::{lambda_max, lambda_min};
pub use report::{
    verify_extremal, verify_sweep, verify_sweep_seq, ExtremalReport, SweepKind, SweepReport,
};
pub use table::{mult_pair, mult_pair_audited, mult_table, MultTable};
