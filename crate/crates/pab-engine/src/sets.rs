use std::collections::{BTreeSet, HashMap};

use partition_core::Partition;

use crate::pair::{step_a, step_b, trim_trailing, BiPartition, IndexedPair, StepOutcome};

/// Element assembly after an A-side extraction: the extracted value joins the
/// sub-result's first row, both rows are padded back to (n, m).
pub(crate) fn assemble_a(
    outcome: &StepOutcome,
    sub: &BiPartition,
    n: usize,
    m: usize,
) -> BiPartition {
    let head = Partition::new(vec![outcome.extracted]).expect("sum of parts is nonnegative");
    BiPartition::new(
        head.sorted_union(&sub.nu)
            .padded(n)
            .expect("lengths shrink along the recursion"),
        sub.mu
            .padded(m)
            .expect("lengths shrink along the recursion"),
    )
}

pub(crate) fn assemble_b(
    outcome: &StepOutcome,
    sub: &BiPartition,
    n: usize,
    m: usize,
) -> BiPartition {
    let head = Partition::new(vec![outcome.extracted]).expect("sum of parts is nonnegative");
    BiPartition::new(
        sub.nu
            .padded(n)
            .expect("lengths shrink along the recursion"),
        head.sorted_union(&sub.mu)
            .padded(m)
            .expect("lengths shrink along the recursion"),
    )
}

fn pad_set(set: &BTreeSet<BiPartition>, n: usize, m: usize) -> BTreeSet<BiPartition> {
    set.iter()
        .map(|bp| {
            BiPartition::new(
                bp.nu.padded(n).expect("padding only grows"),
                bp.mu.padded(m).expect("padding only grows"),
            )
        })
        .collect()
}

/// The full set of pairs extractable from `pair` by the two procedures, in
/// every order, deduplicated. Base case: a pair with an empty side yields
/// only itself.
pub fn p_set(pair: &IndexedPair) -> BTreeSet<BiPartition> {
    let mut memo = HashMap::new();
    p_set_rec(pair, &mut memo)
}

fn p_set_rec(
    pair: &IndexedPair,
    memo: &mut HashMap<IndexedPair, BTreeSet<BiPartition>>,
) -> BTreeSet<BiPartition> {
    let key = trim_trailing(pair);
    let core = if let Some(hit) = memo.get(&key) {
        hit.clone()
    } else {
        let mut out = BTreeSet::new();
        if key.n() == 0 || key.m() == 0 {
            out.insert(BiPartition::new(key.alpha().clone(), key.beta().clone()));
        } else {
            let sa = step_a(&key).expect("n >= 1");
            for sub in p_set_rec(&sa.residual, memo) {
                out.insert(assemble_a(&sa, &sub, key.n(), key.m()));
            }
            let sb = step_b(&key).expect("m >= 1");
            for sub in p_set_rec(&sb.residual, memo) {
                out.insert(assemble_b(&sb, &sub, key.n(), key.m()));
            }
        }
        memo.insert(key, out.clone());
        out
    };
    pad_set(&core, pair.n(), pair.m())
}

/// Subset of `p_set` whose first `c` extractions are forced to the B side;
/// `c = 0` or an empty B side gives the full set. Stabilizes once c reaches m.
pub fn p_b_c_set(pair: &IndexedPair, c: usize) -> BTreeSet<BiPartition> {
    if c == 0 || pair.m() == 0 {
        return p_set(pair);
    }
    let sb = step_b(pair).expect("m >= 1");
    let mut out = BTreeSet::new();
    for sub in p_b_c_set(&sb.residual, c - 1) {
        out.insert(assemble_b(&sb, &sub, pair.n(), pair.m()));
    }
    out
}

/// Re-inserts a first-row entry into a shortened pair: for c within the
/// second row, the new first entry is x plus the c-th second-row value,
/// which is removed and replaced by a trailing zero; for c past the second
/// row, x is prepended alone. Inputs are plain integer sequences of lengths
/// (n-1, m); the output has lengths (n, m).
pub fn iota(c: usize, x: i64, nu: &[i64], mu: &[i64]) -> (Vec<i64>, Vec<i64>) {
    assert!(c >= 1, "insertion slot is 1-based");
    let m = mu.len();
    if c <= m {
        let mut nu_out = Vec::with_capacity(nu.len() + 1);
        nu_out.push(x + mu[c - 1]);
        nu_out.extend_from_slice(nu);
        let mut mu_out: Vec<i64> = mu
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != c - 1)
            .map(|(_, &v)| v)
            .collect();
        mu_out.push(0);
        (nu_out, mu_out)
    } else {
        let mut nu_out = Vec::with_capacity(nu.len() + 1);
        nu_out.push(x);
        nu_out.extend_from_slice(nu);
        (nu_out, mu.to_vec())
    }
}
