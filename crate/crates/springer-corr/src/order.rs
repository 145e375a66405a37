use pab_engine::{ShuffleOrder, Side};
use partition_core::{arith_progression, rat, RatSeq};

use crate::datum::springer_to_pair;
use crate::datum::SpringerDatum;
use crate::error::{CorrError, Result};
use crate::marked::MarkedSymplectic;

/// The shuffle order carried by a block datum: merge the two staircased rows
/// and read off, largest entry first, which row each entry came from. The
/// merged entries must be pairwise distinct.
pub fn order_from_pair(sd: &SpringerDatum) -> Result<ShuffleOrder> {
    let mut tagged: Vec<(i64, Side)> = Vec::with_capacity(sd.n() + sd.m());
    for j in 1..=sd.n() {
        tagged.push((
            sd.alpha().get(j - 1) + sd.a_top() + 2 - 2 * j as i64,
            Side::A,
        ));
    }
    for l in 1..=sd.m() {
        tagged.push((
            sd.beta().get(l - 1) + sd.b_top() + 2 - 2 * l as i64,
            Side::B,
        ));
    }
    tagged.sort_by_key(|entry| std::cmp::Reverse(entry.0));
    for window in tagged.windows(2) {
        if window[0].0 == window[1].0 {
            return Err(CorrError::NotMultiplicityFree);
        }
    }
    Ok(ShuffleOrder::new(
        tagged.into_iter().map(|(_, side)| side).collect(),
    ))
}

/// Half-integer staircased rows over the widened lengths a_top+1 and
/// b_top+1.
pub fn u_v_sequences(ms: &MarkedSymplectic, r: usize) -> Result<(RatSeq, RatSeq)> {
    let sd = springer_to_pair(ms, r)?;
    let u = widened(
        sd.alpha().padded((sd.a_top() + 1) as usize)?.to_ratseq(),
        sd.a_top(),
    )?;
    let v = widened(
        sd.beta()
            .padded((sd.b_top() + 1).max(0) as usize)?
            .to_ratseq(),
        sd.b_top(),
    )?;
    Ok((u, v))
}

fn widened(row: RatSeq, top: i64) -> Result<RatSeq> {
    let staircase =
        arith_progression(rat(top) / rat(2), rat(0), rat(1) / rat(2)).map_err(CorrError::Core)?;
    row.pointwise_add(&staircase).map_err(CorrError::Core)
}
