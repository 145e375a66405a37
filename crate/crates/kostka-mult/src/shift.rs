use std::collections::{BTreeMap, BTreeSet};

use pab_engine::{IndexedPair, Side};

use crate::error::{MultError, Result};

/// Two row entries on opposite sides, the earlier one in the shuffle order
/// first. Indices are 1-based within their rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossPair {
    pub lower: (usize, Side),
    pub upper: (usize, Side),
}

/// All cross pairs of the shuffle order, listed with the lower entry taken in
/// word order. The listing is deterministic.
pub fn cross_pairs(pair: &IndexedPair) -> Vec<CrossPair> {
    let word = pair.order().word();
    let labels = position_labels(word);
    let mut out = Vec::new();
    for p in 0..labels.len() {
        for q in p + 1..labels.len() {
            if labels[p].1 != labels[q].1 {
                out.push(CrossPair {
                    lower: labels[p],
                    upper: labels[q],
                });
            }
        }
    }
    out
}

/// (index, side) of each word position, indices counted 1-based per side.
fn position_labels(word: &[Side]) -> Vec<(usize, Side)> {
    let (mut seen_a, mut seen_b) = (0usize, 0usize);
    word.iter()
        .map(|&side| {
            let index = match side {
                Side::A => {
                    seen_a += 1;
                    seen_a
                }
                Side::B => {
                    seen_b += 1;
                    seen_b
                }
            };
            (index, side)
        })
        .collect()
}

/// Nonnegative multiplicities on the cross pairs of one indexed pair.
/// Missing keys count as zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShiftVector {
    values: BTreeMap<CrossPair, i64>,
}

impl ShiftVector {
    /// Keys must be cross pairs of `pair` and values must be nonnegative.
    pub fn new(pair: &IndexedPair, values: BTreeMap<CrossPair, i64>) -> Result<Self> {
        let allowed: BTreeSet<CrossPair> = cross_pairs(pair).into_iter().collect();
        for (key, &value) in &values {
            if !allowed.contains(key) {
                return Err(MultError::BadShiftKey);
            }
            if value < 0 {
                return Err(MultError::NegativeShift);
            }
        }
        Ok(Self { values })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &CrossPair) -> i64 {
        self.values.get(key).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &BTreeMap<CrossPair, i64> {
        &self.values
    }
}

/// Rows after the transfer: each unit on a cross pair moves from the upper
/// entry to the lower one. The results are plain integer sequences; they need
/// not be decreasing.
pub fn shift_apply(pair: &IndexedPair, x: &ShiftVector) -> (Vec<i64>, Vec<i64>) {
    let mut row_a: Vec<i64> = pair.alpha().parts().to_vec();
    let mut row_b: Vec<i64> = pair.beta().parts().to_vec();
    for (key, &value) in x.values() {
        *slot(key.lower, &mut row_a, &mut row_b) += value;
        *slot(key.upper, &mut row_a, &mut row_b) -= value;
    }
    (row_a, row_b)
}

fn slot<'v>(loc: (usize, Side), row_a: &'v mut [i64], row_b: &'v mut [i64]) -> &'v mut i64 {
    match loc.1 {
        Side::A => &mut row_a[loc.0 - 1],
        Side::B => &mut row_b[loc.0 - 1],
    }
}

/// Number of shift vectors carrying the rows of `pair` onto the given targets.
/// Targets are arbitrary integer sequences of lengths (n, m).
///
/// Transfers only move mass towards earlier word positions, so the count is
/// computed by sweeping the word from the right: each position must receive
/// its deficit from earlier positions on the opposite side, and every way of
/// splitting that deficit is explored.
pub fn x_solution_count(pair: &IndexedPair, nu_t: &[i64], mu_t: &[i64]) -> u64 {
    assert_eq!(
        nu_t.len(),
        pair.n(),
        "first target must match the first row length"
    );
    assert_eq!(
        mu_t.len(),
        pair.m(),
        "second target must match the second row length"
    );
    let word = pair.order().word();
    let (mut seen_a, mut seen_b) = (0usize, 0usize);
    let deficits: Vec<i64> = word
        .iter()
        .map(|&side| match side {
            Side::A => {
                seen_a += 1;
                nu_t[seen_a - 1] - pair.alpha().get(seen_a - 1)
            }
            Side::B => {
                seen_b += 1;
                mu_t[seen_b - 1] - pair.beta().get(seen_b - 1)
            }
        })
        .collect();
    let mut acc = 0i64;
    for &deficit in &deficits {
        acc += deficit;
        if acc < 0 {
            return 0;
        }
    }
    if acc != 0 {
        return 0;
    }
    let mut outgoing = vec![0i64; word.len()];
    count_from(word.len(), word, &deficits, &mut outgoing)
}

/// Counts completions once every position at index >= remaining is settled.
/// `outgoing[k]` accumulates the mass position k still has to send left.
fn count_from(remaining: usize, word: &[Side], deficits: &[i64], outgoing: &mut [i64]) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let q = remaining - 1;
    let need = outgoing[q] - deficits[q];
    if need < 0 {
        return 0;
    }
    let sources: Vec<usize> = (0..q).filter(|&k| word[k] != word[q]).collect();
    split_need(&sources, need, q, word, deficits, outgoing)
}

fn split_need(
    sources: &[usize],
    need: i64,
    q: usize,
    word: &[Side],
    deficits: &[i64],
    outgoing: &mut [i64],
) -> u64 {
    match sources.split_first() {
        None => {
            if need == 0 {
                count_from(q, word, deficits, outgoing)
            } else {
                0
            }
        }
        Some((&k, rest)) => {
            let mut total = 0;
            for take in 0..=need {
                outgoing[k] += take;
                total += split_need(rest, need - take, q, word, deficits, outgoing);
                outgoing[k] -= take;
            }
            total
        }
    }
}
