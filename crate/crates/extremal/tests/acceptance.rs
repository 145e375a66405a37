//! End-to-end checks, one per test, each printing a single PASS or FAIL
//! line with the number of instances it covered.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use extremal::{verify_sweep, SweepKind};
use kostka_mult::{mult_bruteforce, mult_recursive};
use pab_engine::{
    b_count, drop_first, merged_symbol, p_bracket, p_constrained_set, p_set, symbol_of,
    BiPartition, IndexedPair, Params, ShuffleOrder, Side,
};
use partition_core::{rat, Partition, Rat, RatSeq};

fn report(index: usize, label: &str, instances: usize, failures: &[String]) {
    if failures.is_empty() {
        println!("[{index:02}/12] {label}: PASS ({instances} instances)");
    } else {
        println!(
            "[{index:02}/12] {label}: FAIL ({} of {instances} instances)",
            failures.len()
        );
        panic!("{label}: {}", failures[0]);
    }
}

fn merge(
    (count_a, mut failures_a): (usize, Vec<String>),
    (count_b, failures_b): (usize, Vec<String>),
) -> (usize, Vec<String>) {
    failures_a.extend(failures_b);
    (count_a + count_b, failures_a)
}

/// All weakly decreasing vectors of the given length with entries in 0..=cap.
fn desc_vectors(len: usize, cap: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(len: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            go(len, v, cur, out);
            cur.pop();
        }
    }
    go(len, cap, &mut cur, &mut out);
    out
}

/// All weakly decreasing vectors of the given length summing to `sum`, with
/// entries at most `cap`.
fn desc_sum_vectors(len: usize, cap: i64, sum: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return if sum == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let len_i = len as i64;
    let lo = ((sum + len_i - 1).div_euclid(len_i)).max(0);
    let mut out = Vec::new();
    for first in lo..=cap.min(sum) {
        for mut rest in desc_sum_vectors(len - 1, first, sum - first) {
            let mut v = Vec::with_capacity(len);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// All words with `n` A's and `m` B's.
fn words(n: usize, m: usize) -> Vec<ShuffleOrder> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, m: usize, cur: &mut Vec<Side>, out: &mut Vec<ShuffleOrder>) {
        if n == 0 && m == 0 {
            out.push(ShuffleOrder::new(cur.clone()));
            return;
        }
        if n > 0 {
            cur.push(Side::A);
            go(n - 1, m, cur, out);
            cur.pop();
        }
        if m > 0 {
            cur.push(Side::B);
            go(n, m - 1, cur, out);
            cur.pop();
        }
    }
    go(n, m, &mut cur, &mut out);
    out
}

/// Every indexed pair with n+m ≤ `max_total` and parts ≤ `max_part`.
fn all_pairs(max_total: usize, max_part: i64) -> Vec<IndexedPair> {
    let mut out = Vec::new();
    for n in 0..=max_total {
        for m in 0..=(max_total - n) {
            for a in desc_vectors(n, max_part) {
                let alpha = Partition::new(a).unwrap();
                for b in desc_vectors(m, max_part) {
                    let beta = Partition::new(b).unwrap();
                    for w in words(n, m) {
                        out.push(IndexedPair::new(alpha.clone(), beta.clone(), w).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Every target split of the pair's total across rows of lengths (n, m).
fn matching_targets(pair: &IndexedPair) -> Vec<(Partition, Partition)> {
    let total = pair.alpha().sum() + pair.beta().sum();
    let mut out = Vec::new();
    for sum_a in 0..=total {
        for nu in desc_sum_vectors(pair.n(), total, sum_a) {
            let nu = Partition::new(nu).unwrap();
            for mu in desc_sum_vectors(pair.m(), total, total - sum_a) {
                out.push((nu.clone(), Partition::new(mu).unwrap()));
            }
        }
    }
    out
}

/// Staircase tops and steps that are valid for every pair in the grid.
fn offset_triples() -> [(Rat, Rat, Rat); 6] {
    [
        (rat(6), rat(5), rat(1)),
        (rat(9), rat(8), rat(2)),
        (rat(12), rat(13), rat(3)),
        (rat(5), rat(6), rat(1)),
        (rat(8), rat(8), rat(2)),
        (Rat::new(7, 2), rat(4), Rat::new(1, 2)),
    ]
}

fn sweep_criterion(index: usize, label: &str, kind: SweepKind, max_two_n: i64) {
    let outcome = verify_sweep(kind, max_two_n);
    report(index, label, outcome.instances, &outcome.failures);
}

#[test]
fn c01_closed_recursion_equals_brute_force() {
    let pairs = all_pairs(5, 3);
    let (instances, failures) = pairs
        .par_iter()
        .map(|pair| {
            let mut failures = Vec::new();
            let mut count = 0usize;
            for (nu, mu) in matching_targets(pair) {
                count += 1;
                let brute = mult_bruteforce(pair, &nu, &mu).unwrap().value;
                let fast = mult_recursive(pair, &nu, &mu).unwrap();
                if fast != brute {
                    failures.push(format!(
                        "{pair:?} -> ({nu}; {mu}): recursion {fast}, brute force {brute}"
                    ));
                }
            }
            (count, failures)
        })
        .reduce(|| (0, Vec::new()), merge);
    report(
        1,
        "closed recursion equals brute force",
        instances,
        &failures,
    );
}

#[test]
fn c02_merged_symbols_stay_under_the_bracket() {
    let pairs = all_pairs(5, 3);
    let (instances, failures) = pairs
        .par_iter()
        .map(|pair| {
            let mut failures = Vec::new();
            let mut count = 0usize;
            let full = p_set(pair);
            for (top_a, top_b, step) in offset_triples() {
                let params = Params::new(pair.n(), pair.m(), top_a, top_b, step).unwrap();
                let bracket = p_bracket(pair, &params).unwrap();
                let constrained = p_constrained_set(pair, &params).unwrap();
                for element in &full {
                    count += 1;
                    let merged = merged_symbol(&symbol_of(element, &params).unwrap());
                    if !merged.dominance_leq(&bracket).unwrap() {
                        failures.push(format!("bound fails at {pair:?} element {element:?}"));
                    }
                    if (merged == bracket) != constrained.contains(element) {
                        failures.push(format!(
                            "equality locus fails at {pair:?} element {element:?}"
                        ));
                    }
                }
            }
            (count, failures)
        })
        .reduce(|| (0, Vec::new()), merge);
    report(
        2,
        "merged symbols stay under the bracket",
        instances,
        &failures,
    );
}

#[test]
fn c03_support_matches_the_equality_locus() {
    let pairs = all_pairs(5, 3);
    let (instances, failures) = pairs
        .par_iter()
        .map(|pair| {
            let mut failures = Vec::new();
            let mut count = 0usize;
            let setups: Vec<(Params, RatSeq, BTreeSet<BiPartition>)> = offset_triples()
                .into_iter()
                .map(|(top_a, top_b, step)| {
                    let params = Params::new(pair.n(), pair.m(), top_a, top_b, step).unwrap();
                    let bracket = p_bracket(pair, &params).unwrap();
                    let constrained = p_constrained_set(pair, &params).unwrap();
                    (params, bracket, constrained)
                })
                .collect();
            for (nu, mu) in matching_targets(pair) {
                let value = mult_recursive(pair, &nu, &mu).unwrap();
                let target = BiPartition::new(nu, mu);
                for (params, bracket, constrained) in &setups {
                    count += 1;
                    let merged = merged_symbol(&symbol_of(&target, params).unwrap());
                    let member = constrained.contains(&target);
                    if value != 0 && !merged.dominance_leq(bracket).unwrap() {
                        failures.push(format!(
                            "nonzero multiplicity above the bracket at {pair:?} -> {target:?}"
                        ));
                    }
                    if merged == *bracket && (value != 0) != member {
                        failures.push(format!(
                            "support misses the equality locus at {pair:?} -> {target:?}"
                        ));
                    }
                    if member && value != 1 {
                        failures.push(format!(
                            "constrained member with multiplicity {value} at {pair:?} -> {target:?}"
                        ));
                    }
                }
            }
            (count, failures)
        })
        .reduce(|| (0, Vec::new()), merge);
    report(
        3,
        "support matches the equality locus",
        instances,
        &failures,
    );
}

#[test]
fn c04_greatest_couples_dominate_their_tables() {
    sweep_criterion(
        4,
        "greatest couples dominate their tables",
        SweepKind::Max,
        8,
    );
}

#[test]
fn c05_least_couples_sit_under_every_twist() {
    sweep_criterion(5, "least couples sit under every twist", SweepKind::Min, 8);
}

#[test]
fn c06_peeling_agrees_with_extraction() {
    sweep_criterion(6, "peeling agrees with extraction", SweepKind::Bar, 10);
}

#[test]
fn c07_peeling_preserves_the_block_index() {
    sweep_criterion(
        7,
        "peeling preserves the block index",
        SweepKind::Defect,
        12,
    );
}

#[test]
fn c08_widened_rows_match_the_twisted_transpose() {
    sweep_criterion(
        8,
        "widened rows match the twisted transpose",
        SweepKind::Uv,
        12,
    );
}

#[test]
fn c09_block_data_round_trip_at_either_row_count() {
    sweep_criterion(
        9,
        "block data round trip at either row count",
        SweepKind::Roundtrip,
        10,
    );
}

#[test]
fn c10_dominance_transfers_to_merged_symbols() {
    sweep_criterion(
        10,
        "dominance transfers to merged symbols",
        SweepKind::Transfer,
        10,
    );
}

#[test]
fn c11_bracket_inequalities_on_sampled_instances() {
    let samples: Vec<(IndexedPair, Params, u32)> = {
        let mut rng = StdRng::seed_from_u64(0x0eed);
        (0..10_500).map(|_| random_instance(&mut rng)).collect()
    };
    let (instances, failures) = samples
        .par_iter()
        .map(|(pair, params, shift)| {
            let mut failures = Vec::new();
            check_drop_bound(pair, params, &mut failures);
            check_row_trade(pair, params, &mut failures);
            check_peel_bounds(pair, params, *shift, &mut failures);
            (1usize, failures)
        })
        .reduce(|| (0, Vec::new()), merge);
    report(
        11,
        "bracket inequalities on sampled instances",
        instances,
        &failures,
    );
}

#[test]
fn c12_halved_offsets_fix_the_extraction_set() {
    sweep_criterion(
        12,
        "halved offsets fix the extraction set",
        SweepKind::Halfstep,
        10,
    );
}

/// A random pair whose word starts on the A side, row counts strictly above
/// the lengths, and offsets with a little slack.
fn random_instance(rng: &mut StdRng) -> (IndexedPair, Params, u32) {
    let n = rng.gen_range(1usize..=3);
    let m = rng.gen_range(0usize..=3);
    let mut a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    let mut b: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=4)).collect();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let starting_a: Vec<ShuffleOrder> = words(n, m)
        .into_iter()
        .filter(|w| m == 0 || w.starts_with(Side::A))
        .collect();
    let word = starting_a[rng.gen_range(0..starting_a.len())].clone();
    let pair =
        IndexedPair::new(Partition::new(a).unwrap(), Partition::new(b).unwrap(), word).unwrap();
    let step = [rat(1), rat(2), Rat::new(1, 2)][rng.gen_range(0..3)];
    let rows_a = n + rng.gen_range(1usize..=2);
    let rows_b = m + rng.gen_range(1usize..=2);
    let top_a = step * rat(rows_a as i64 - 1) + step * rat(rng.gen_range(0..=6)) / rat(2);
    let top_b = step * rat(rows_b as i64 - 1) + step * rat(rng.gen_range(0..=6)) / rat(2);
    let params = Params::new(rows_a, rows_b, top_a, top_b, step).unwrap();
    (pair, params, rng.gen_range(0..4))
}

/// Removing the leading first-row entry can only lower the bracket, and by
/// at most the two leading parts.
fn check_drop_bound(pair: &IndexedPair, params: &Params, failures: &mut Vec<String>) {
    let shorter = drop_first(pair, Side::A).unwrap();
    let full = p_bracket(pair, params).unwrap();
    let less = p_bracket(&shorter, params).unwrap();
    let cap = rat(pair.alpha().first() + pair.beta().first());
    for k in 1..=(params.rows_a + params.rows_b) {
        let sk_full = full.partial_sum(k).unwrap();
        let sk_less = less.partial_sum(k).unwrap();
        if !(sk_less <= sk_full && sk_full <= sk_less + cap) {
            failures.push(format!("first-entry drop bound fails at {pair:?} k={k}"));
        }
    }
}

/// Trading one B row for one A row can raise partial sums only by the
/// first-row overhang.
fn check_row_trade(pair: &IndexedPair, params: &Params, failures: &mut Vec<String>) {
    let s = params.step;
    let on_b = Params {
        rows_b: params.rows_b - 1,
        top_b: params.top_b - s,
        ..*params
    };
    let on_a = Params {
        rows_a: params.rows_a - 1,
        top_a: params.top_a - s,
        ..*params
    };
    if on_b.rows_b < pair.m() || on_a.rows_a < pair.n() {
        return;
    }
    let lhs = p_bracket(pair, &on_b).unwrap();
    let rhs = p_bracket(pair, &on_a).unwrap();
    let overhang = (rat(pair.alpha().first()) + params.top_a - params.top_b).max(rat(0));
    for k in 1..=(params.rows_a + params.rows_b - 1) {
        if lhs.partial_sum(k).unwrap() > rhs.partial_sum(k).unwrap() + overhang {
            failures.push(format!("row-trade bound fails at {pair:?} k={k}"));
        }
    }
}

/// Peeled-entry lower bounds relating the shortened pair's bracket to the
/// full one, in both the plain and shifted-offset forms.
fn check_peel_bounds(pair: &IndexedPair, params: &Params, shift: u32, failures: &mut Vec<String>) {
    let s = params.step;
    let shorter = drop_first(pair, Side::A).unwrap();
    let a1 = rat(pair.alpha().first());
    let full = p_bracket(pair, params).unwrap();

    let reduced = Params {
        rows_a: params.rows_a - 1,
        top_a: params.top_a - s,
        ..*params
    };
    let less = p_bracket(&shorter, &reduced).unwrap();
    for k in 1..=(params.rows_a + params.rows_b) {
        if less.partial_sum(k - 1).unwrap() + a1 + params.top_a > full.partial_sum(k).unwrap() {
            failures.push(format!("peel lower bound fails at {pair:?} k={k}"));
        }
    }

    let shifted = Params {
        top_b: params.top_b + s * rat(shift as i64) / rat(2),
        ..reduced
    };
    let less_shifted = p_bracket(&shorter, &shifted).unwrap();
    for k in 1..=(params.rows_a + params.rows_b - 1) {
        let b = b_count(&shorter, &shifted, k).unwrap();
        let lhs = less_shifted.partial_sum(k).unwrap();
        let rhs = full.partial_sum(k).unwrap();
        let ok = if b >= 1 {
            let corr = a1 + params.top_a - params.top_b - s
                + rat(b as i64) * s * (rat(1) - rat(shift as i64) / rat(2));
            lhs + corr <= rhs
        } else {
            lhs <= rhs
        };
        if !ok {
            failures.push(format!(
                "shifted peel bound fails at {pair:?} k={k} shift={shift}"
            ));
        }
    }
}
