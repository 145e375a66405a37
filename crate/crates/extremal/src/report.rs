use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use pab_engine::p_constrained_set;
use partition_core::{arith_progression, rat, RatSeq};
use springer_corr::{
    enumerate_couples, k_of, marked_symbols, pair_to_springer, sign_twist, springer_to_pair,
    u_v_sequences, MarkedSymplectic,
};

use crate::bar::bar;
use crate::error::{ExtremalError, Result};
use crate::extreme::{block_params, half_params, lambda_max, lambda_min, max_via_extraction};
use crate::table::{block_pair, mult_table, MultTable};

/// Everything checked about one couple: both extremes, the size of its
/// multiplicity table, and any violated dominance statements as text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub source: MarkedSymplectic,
    pub maximum: MarkedSymplectic,
    pub minimum: MarkedSymplectic,
    pub table_len: usize,
    pub failures: Vec<String>,
}

impl ExtremalReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds the multiplicity table of `ms` and checks the greatest couple
/// against every entry and the least couple against every twisted entry.
pub fn verify_extremal(ms: &MarkedSymplectic) -> Result<ExtremalReport> {
    let table = mult_table(ms)?;
    let maximum = lambda_max(ms)?;
    let minimum = lambda_min(ms)?;
    let mut failures = max_failures(&table, &maximum);
    failures.extend(min_failures(&table, &maximum, &minimum)?);
    Ok(ExtremalReport {
        source: ms.clone(),
        maximum,
        minimum,
        table_len: table.entries().len(),
        failures,
    })
}

/// The greatest couple must carry multiplicity one and strictly dominate
/// every other nonzero entry.
fn max_failures(table: &MultTable, maximum: &MarkedSymplectic) -> Vec<String> {
    let mut failures = Vec::new();
    if table.get(maximum) != 1 {
        failures.push(format!(
            "the greatest couple {maximum} has multiplicity {}, expected one",
            table.get(maximum)
        ));
    }
    for target in table.entries().keys() {
        if target != maximum && !target.lambda().dominance_lt(maximum.lambda()) {
            failures.push(format!("{target} escapes the maximum {maximum}"));
        }
    }
    failures
}

/// The least couple must be the twist of the greatest and sit strictly under
/// the twist of every other nonzero entry.
fn min_failures(
    table: &MultTable,
    maximum: &MarkedSymplectic,
    minimum: &MarkedSymplectic,
) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    if sign_twist(minimum)? != *maximum {
        failures.push(format!(
            "the twist of {minimum} misses the maximum {maximum}"
        ));
    }
    for target in table.entries().keys() {
        if target == maximum {
            continue;
        }
        let twisted = sign_twist(target)?;
        if !minimum.lambda().dominance_lt(twisted.lambda()) {
            failures.push(format!(
                "the twist of {target} escapes the minimum {minimum}"
            ));
        }
    }
    Ok(failures)
}

/// One verification family, sweepable over all couples up to a total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepKind {
    /// The greatest couple carries multiplicity one and dominates every
    /// nonzero entry of its table.
    Max,
    /// The least couple is the twisted maximum and sits under the twist of
    /// every nonzero entry.
    Min,
    /// Peeling and constrained extraction name the same couple.
    Bar,
    /// Peeling preserves the block index.
    Defect,
    /// Doubled widened rows match the twisted transpose plus staircases.
    Uv,
    /// Block data convert back losslessly and ignore the row count.
    Roundtrip,
    /// Dominance of couples matches dominance of merged symbols blockwise.
    Transfer,
    /// Halving the staircase offsets leaves the extraction set unchanged.
    Halfstep,
}

impl SweepKind {
    pub const ALL: [SweepKind; 8] = [
        SweepKind::Max,
        SweepKind::Min,
        SweepKind::Bar,
        SweepKind::Defect,
        SweepKind::Uv,
        SweepKind::Roundtrip,
        SweepKind::Transfer,
        SweepKind::Halfstep,
    ];

    fn name(self) -> &'static str {
        match self {
            SweepKind::Max => "max",
            SweepKind::Min => "min",
            SweepKind::Bar => "bar",
            SweepKind::Defect => "defect",
            SweepKind::Uv => "uv",
            SweepKind::Roundtrip => "roundtrip",
            SweepKind::Transfer => "transfer",
            SweepKind::Halfstep => "halfstep",
        }
    }

    /// Peeling, extraction, and widened rows all need signs on every part,
    /// so those families skip couples with odd parts.
    fn even_only(self) -> bool {
        !matches!(self, SweepKind::Roundtrip | SweepKind::Transfer)
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepKind {
    type Err = ExtremalError;

    fn from_str(text: &str) -> Result<Self> {
        SweepKind::ALL
            .into_iter()
            .find(|kind| kind.name() == text)
            .ok_or_else(|| ExtremalError::UnknownSweep(text.to_string()))
    }
}

/// Outcome of one sweep: how many couples were checked and which failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub kind: SweepKind,
    pub max_two_n: i64,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs one family over every eligible couple of total at most `max_two_n`,
/// fanning the couples out across threads when the parallel feature is on.
pub fn verify_sweep(kind: SweepKind, max_two_n: i64) -> SweepReport {
    run_sweep(kind, max_two_n, true)
}

/// The same sweep on a single thread.
pub fn verify_sweep_seq(kind: SweepKind, max_two_n: i64) -> SweepReport {
    run_sweep(kind, max_two_n, false)
}

fn run_sweep(kind: SweepKind, max_two_n: i64, parallel: bool) -> SweepReport {
    let mut couples = Vec::new();
    for two_n in (0..=max_two_n).step_by(2) {
        couples.extend(
            enumerate_couples(two_n)
                .expect("even nonnegative totals enumerate")
                .into_iter()
                .filter(|ms| !kind.even_only() || ms.lambda().all_parts_even()),
        );
    }

    #[cfg(feature = "parallel")]
    let failures: Vec<String> = if parallel {
        couples
            .par_iter()
            .filter_map(|ms| check_instance(kind, ms))
            .collect()
    } else {
        couples
            .iter()
            .filter_map(|ms| check_instance(kind, ms))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let failures: Vec<String> = {
        let _ = parallel;
        couples
            .iter()
            .filter_map(|ms| check_instance(kind, ms))
            .collect()
    };

    SweepReport {
        kind,
        max_two_n,
        instances: couples.len(),
        failures,
    }
}

fn check_instance(kind: SweepKind, ms: &MarkedSymplectic) -> Option<String> {
    match run_instance(kind, ms) {
        Ok(None) => None,
        Ok(Some(message)) => Some(format!("{ms}: {message}")),
        Err(error) => Some(format!("{ms}: {error}")),
    }
}

fn run_instance(kind: SweepKind, ms: &MarkedSymplectic) -> Result<Option<String>> {
    match kind {
        SweepKind::Max => max_instance(ms),
        SweepKind::Min => min_instance(ms),
        SweepKind::Bar => bar_instance(ms),
        SweepKind::Defect => defect_instance(ms),
        SweepKind::Uv => uv_instance(ms),
        SweepKind::Roundtrip => roundtrip_instance(ms),
        SweepKind::Transfer => transfer_instance(ms),
        SweepKind::Halfstep => halfstep_instance(ms),
    }
}

fn join_failures(failures: Vec<String>) -> Option<String> {
    if failures.is_empty() {
        None
    } else {
        Some(failures.join("; "))
    }
}

fn max_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let table = mult_table(ms)?;
    let maximum = lambda_max(ms)?;
    Ok(join_failures(max_failures(&table, &maximum)))
}

fn min_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let table = mult_table(ms)?;
    let maximum = lambda_max(ms)?;
    let minimum = lambda_min(ms)?;
    Ok(join_failures(min_failures(&table, &maximum, &minimum)?))
}

fn bar_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let peeled = bar(ms)?;
    let extracted = max_via_extraction(ms)?;
    let mut failures = Vec::new();
    if peeled != extracted {
        failures.push(format!(
            "peeling gives {peeled}, extraction gives {extracted}"
        ));
    }
    if !peeled.lambda().all_parts_even() || !peeled.lambda().is_symplectic() {
        failures.push(format!("{peeled} is not an even symplectic couple"));
    }
    Ok(join_failures(failures))
}

fn defect_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let peeled = bar(ms)?;
    if k_of(&peeled) != k_of(ms) {
        return Ok(Some(format!(
            "peeling moves the block index from {} to {}",
            k_of(ms),
            k_of(&peeled)
        )));
    }
    Ok(None)
}

fn doubled(row: &RatSeq) -> RatSeq {
    RatSeq::new(row.entries().iter().map(|e| *e * rat(2)).collect())
        .expect("doubling keeps entries decreasing")
}

fn staircase(top: i64) -> RatSeq {
    arith_progression(rat(top), rat(0), rat(1)).expect("unit staircase")
}

fn uv_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let twisted = sign_twist(ms)?;
    for r in [ms.default_r(), ms.default_r() + 1] {
        let (u, v) = u_v_sequences(ms, r)?;
        let left = doubled(&u).sorted_union(&doubled(&v));
        let top = 2 * r as i64;
        let staircases = staircase(top).sorted_union(&staircase(top - 1));
        let right = twisted
            .lambda()
            .transpose()
            .padded(4 * r + 1)?
            .to_ratseq()
            .pointwise_add(&staircases)?;
        if left != right {
            return Ok(Some(format!(
                "widened rows disagree with the twisted transpose at r = {r}"
            )));
        }
    }
    Ok(None)
}

fn roundtrip_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let base = ms.default_r();
    let first = springer_to_pair(ms, base)?;
    let second = springer_to_pair(ms, base + 1)?;
    let mut failures = Vec::new();
    if first.k() != k_of(ms) || second.k() != first.k() {
        failures.push(format!(
            "block index drifts across row counts: {}, {}, {}",
            k_of(ms),
            first.k(),
            second.k()
        ));
    }
    if first.alpha().trim() != second.alpha().trim() || first.beta().trim() != second.beta().trim()
    {
        failures.push("rows depend on the ambient row count".to_string());
    }
    for sd in [&first, &second] {
        if pair_to_springer(sd)? != *ms {
            failures.push(format!(
                "round trip through r = {} loses the couple",
                sd.r()
            ));
        }
    }
    Ok(join_failures(failures))
}

fn transfer_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let r = ms.default_r();
    let own = marked_symbols(ms, r)?.merged();
    let mut failures = Vec::new();
    for other in enumerate_couples(ms.two_n())? {
        if k_of(&other) != k_of(ms) {
            continue;
        }
        let theirs = marked_symbols(&other, r)?.merged();
        let couples_leq = ms.lambda().dominance_leq(other.lambda());
        let symbols_leq = own.dominance_leq(&theirs)?;
        if couples_leq != symbols_leq {
            failures.push(format!(
                "dominance against {other} is {couples_leq} on couples but {symbols_leq} on symbols"
            ));
        }
    }
    Ok(join_failures(failures))
}

fn halfstep_instance(ms: &MarkedSymplectic) -> Result<Option<String>> {
    let (sd, pair) = block_pair(ms)?;
    let whole = p_constrained_set(&pair, &block_params(&sd)?)?;
    let half = p_constrained_set(&pair, &half_params(&sd)?)?;
    if whole != half {
        return Ok(Some("halved offsets change the extraction set".to_string()));
    }
    Ok(None)
}
