use std::collections::BTreeSet;

use partition_core::{arith_progression, rat, Partition, Rat, RatSeq, Sign};

use crate::datum::SpringerDatum;
use crate::error::{CorrError, Result};
use crate::marked::{epsilon_on_indices, MarkedSymplectic};

/// Two strictly decreasing rows of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolPair {
    a_side: RatSeq,
    b_side: RatSeq,
}

impl SymbolPair {
    pub fn new(a_side: RatSeq, b_side: RatSeq) -> Result<Self> {
        for side in [&a_side, &b_side] {
            for window in side.entries().windows(2) {
                if window[0] <= window[1] {
                    return Err(CorrError::Invariant(
                        "symbol rows must be strictly decreasing".into(),
                    ));
                }
            }
            if side
                .entries()
                .iter()
                .any(|e| !e.is_integer() || *e < rat(0))
            {
                return Err(CorrError::Invariant(
                    "symbol entries must be nonnegative integers".into(),
                ));
            }
        }
        Ok(Self { a_side, b_side })
    }

    pub fn a_side(&self) -> &RatSeq {
        &self.a_side
    }

    pub fn b_side(&self) -> &RatSeq {
        &self.b_side
    }

    /// Both rows merged into one decreasing sequence.
    pub fn merged(&self) -> RatSeq {
        self.a_side.sorted_union(&self.b_side)
    }
}

fn int_seq(values: Vec<i64>) -> RatSeq {
    RatSeq::new(values.into_iter().map(rat).collect()).expect("entries built decreasing")
}

/// The unmarked symbol of a symplectic partition: the staircase shift
/// lambda + (2r-1, ..., 1, 0) splits evenly into even and odd entries; the
/// halves, raised by staircases again, form the two rows (the first row
/// closes with 0).
pub fn sharp_symbols(lambda: &Partition, r: usize) -> Result<SymbolPair> {
    if !lambda.is_symplectic() {
        return Err(CorrError::NotSymplectic);
    }
    let padded = lambda
        .padded(2 * r)
        .map_err(|_| CorrError::RTooSmall { r })?;
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for i in 0..2 * r {
        let value = padded.get(i) + (2 * r - 1 - i) as i64;
        if value % 2 == 0 {
            evens.push(value / 2);
        } else {
            odds.push((value - 1) / 2);
        }
    }
    if evens.len() != r || odds.len() != r {
        return Err(CorrError::Invariant(
            "staircase shift must balance even and odd entries".into(),
        ));
    }
    let r_i = r as i64;
    let mut row_a: Vec<i64> = odds
        .iter()
        .enumerate()
        .map(|(j, z)| z + r_i + 1 - j as i64)
        .collect();
    row_a.push(0);
    let row_b: Vec<i64> = evens
        .iter()
        .enumerate()
        .map(|(j, z)| z + r_i - j as i64)
        .collect();

    // The same rows fall out of a three-way case split on part parities;
    // both computations must agree entrywise.
    let wide = lambda.padded(2 * r + 2).expect("already fits in 2r parts");
    for j in 1..=r + 1 {
        let expected = closed_form_a(&wide, r, j)?;
        if row_a[j - 1] != expected {
            return Err(CorrError::Invariant(format!(
                "first-row closed form disagrees at index {j}: {} vs {expected}",
                row_a[j - 1]
            )));
        }
    }
    for j in 1..=r {
        let expected = closed_form_b(&wide, r, j)?;
        if row_b[j - 1] != expected {
            return Err(CorrError::Invariant(format!(
                "second-row closed form disagrees at index {j}: {} vs {expected}",
                row_b[j - 1]
            )));
        }
    }
    SymbolPair::new(int_seq(row_a), int_seq(row_b))
}

/// Entry j (1-based) of the first sharp row, by parity case split.
fn closed_form_a(wide: &Partition, r: usize, j: usize) -> Result<i64> {
    let shift = 2 * (r as i64) + 2 - 2 * j as i64;
    let mut found = Vec::new();
    if wide.get(2 * j - 2) % 2 == 0 {
        found.push(wide.get(2 * j - 2) / 2 + shift);
    }
    if wide.get(2 * j - 1) % 2 != 0 && wide.partial_sum(2 * j) % 2 == 0 {
        found.push((wide.get(2 * j - 1) - 1) / 2 + shift);
    }
    if j >= 2 && wide.get(2 * j - 3) % 2 != 0 && wide.partial_sum(2 * j - 2) % 2 != 0 {
        found.push((wide.get(2 * j - 3) + 1) / 2 + shift);
    }
    if found.len() != 1 {
        return Err(CorrError::Invariant(format!(
            "first-row case split selects {} branches at index {j}",
            found.len()
        )));
    }
    Ok(found[0])
}

/// Entry j (1-based) of the second sharp row, by parity case split.
fn closed_form_b(wide: &Partition, r: usize, j: usize) -> Result<i64> {
    let shift = 2 * (r as i64) + 1 - 2 * j as i64;
    let mut found = Vec::new();
    if wide.get(2 * j - 1) % 2 == 0 {
        found.push(wide.get(2 * j - 1) / 2 + shift);
    }
    if wide.get(2 * j - 2) % 2 != 0 && wide.partial_sum(2 * j - 1) % 2 != 0 {
        found.push((wide.get(2 * j - 2) + 1) / 2 + shift);
    }
    if wide.get(2 * j) % 2 != 0 && wide.partial_sum(2 * j + 1) % 2 == 0 {
        found.push((wide.get(2 * j) - 1) / 2 + shift);
    }
    if found.len() != 1 {
        return Err(CorrError::Invariant(format!(
            "second-row case split selects {} branches at index {j}",
            found.len()
        )));
    }
    Ok(found[0])
}

/// The marked symbol: within each integer run of the symmetric difference of
/// the two sharp rows (runs containing 0 excluded, matched increasingly with
/// the distinct even parts), a minus sign swaps the run's entries between the
/// rows.
pub fn marked_symbols(ms: &MarkedSymplectic, r: usize) -> Result<SymbolPair> {
    let sharp = sharp_symbols(ms.lambda(), r)?;
    let a_set: BTreeSet<i64> = sharp
        .a_side()
        .entries()
        .iter()
        .map(|e| *e.numer())
        .collect();
    let b_set: BTreeSet<i64> = sharp
        .b_side()
        .entries()
        .iter()
        .map(|e| *e.numer())
        .collect();
    let diff: Vec<i64> = a_set.symmetric_difference(&b_set).copied().collect();
    let mut runs: Vec<Vec<i64>> = Vec::new();
    for value in diff {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == value => run.push(value),
            _ => runs.push(vec![value]),
        }
    }
    runs.retain(|run| !run.contains(&0));
    let mut jord = ms.lambda().jord_bp();
    jord.reverse();
    if runs.len() != jord.len() {
        return Err(CorrError::Invariant(format!(
            "{} integer runs for {} marked parts",
            runs.len(),
            jord.len()
        )));
    }
    let mut a_new = a_set.clone();
    let mut b_new = b_set.clone();
    for (part, run) in jord.iter().zip(&runs) {
        if ms.epsilon()[part] == Sign::Minus {
            for value in run {
                if a_set.contains(value) {
                    a_new.remove(value);
                    b_new.insert(*value);
                } else {
                    b_new.remove(value);
                    a_new.insert(*value);
                }
            }
        }
    }
    let result = SymbolPair::new(
        int_seq(a_new.into_iter().rev().collect()),
        int_seq(b_new.into_iter().rev().collect()),
    )?;
    if ms.lambda().all_parts_even() {
        let direct = even_case_symbols(ms, r)?;
        if direct != result {
            return Err(CorrError::Invariant(
                "even-part closed form disagrees with the run construction".into(),
            ));
        }
    }
    Ok(result)
}

/// For partitions with even parts only, the rows can be written down
/// directly: index j contributes lambda_j/2 + 2r+1−j to the first row when
/// its sign matches the alternating pattern, to the second row otherwise.
fn even_case_symbols(ms: &MarkedSymplectic, r: usize) -> Result<SymbolPair> {
    let signs = epsilon_on_indices(ms, r)?;
    let padded = ms
        .lambda()
        .padded(2 * r + 1)
        .expect("checked by index signs");
    let mut row_a = Vec::new();
    let mut row_b = Vec::new();
    for j in 1..=2 * r + 1 {
        let entry = padded.get(j - 1) / 2 + (2 * r + 1 - j) as i64;
        let alternating = if j % 2 == 1 { Sign::Plus } else { Sign::Minus };
        if signs[j - 1] == alternating {
            row_a.push(entry);
        } else {
            row_b.push(entry);
        }
    }
    SymbolPair::new(int_seq(row_a), int_seq(row_b))
}

fn progression(top: i64, bottom: i64) -> RatSeq {
    arith_progression(rat(top), rat(bottom), rat(2)).expect("step-2 staircase")
}

/// The symbol rows of a block datum: the rows alpha and beta raised by
/// step-2 staircases, roles swapped on odd blocks.
pub fn pair_symbols(sd: &SpringerDatum) -> Result<SymbolPair> {
    let alpha_row = sd.alpha().to_ratseq().pointwise_add(&progression(
        sd.a_top(),
        if sd.k() % 2 == 0 { 0 } else { 1 },
    ))?;
    let beta_row = sd.beta().to_ratseq().pointwise_add(&progression(
        sd.b_top(),
        if sd.k() % 2 == 0 { 1 } else { 0 },
    ))?;
    if sd.k() % 2 == 0 {
        SymbolPair::new(alpha_row, beta_row)
    } else {
        SymbolPair::new(beta_row, alpha_row)
    }
}

/// One decreasing sequence per side, tagged by provenance: the merged symbol
/// entries of `pair_symbols` together with which row each entry came from.
pub(crate) fn tagged_entries(sd: &SpringerDatum) -> Result<Vec<(i64, bool)>> {
    let symbols = pair_symbols(sd)?;
    let mut tagged: Vec<(i64, bool)> = symbols
        .a_side()
        .entries()
        .iter()
        .map(|e| (*e.numer(), true))
        .chain(
            symbols
                .b_side()
                .entries()
                .iter()
                .map(|e| (*e.numer(), false)),
        )
        .collect();
    tagged.sort_by_key(|entry| std::cmp::Reverse(entry.0));
    Ok(tagged)
}

pub(crate) fn to_int(value: Rat) -> i64 {
    debug_assert!(value.is_integer());
    *value.numer()
}
