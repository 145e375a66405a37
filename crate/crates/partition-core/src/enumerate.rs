use crate::error::CoreError;
use crate::partition::Partition;
use crate::sign::{Sign, SignMap};

/// All trimmed partitions of `sum` with at most `max_len` parts, in
/// lexicographically decreasing order.
pub fn enumerate_partitions(sum: i64, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(sum, sum, max_len, &mut stack, &mut out);
    out
}

fn fill(rest: i64, cap: i64, slots: usize, stack: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::new(stack.clone()).expect("descending by construction"));
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = rest.min(cap);
    for p in (1..=hi).rev() {
        stack.push(p);
        fill(rest - p, p, slots - 1, stack, out);
        stack.pop();
    }
}

/// All trimmed symplectic partitions of `two_n`, lexicographically
/// decreasing. Rejects odd or negative totals.
pub fn enumerate_symplectic(two_n: i64) -> Result<Vec<Partition>, CoreError> {
    if two_n < 0 || two_n % 2 != 0 {
        return Err(CoreError::OddTotal(two_n));
    }
    Ok(enumerate_partitions(two_n, two_n.max(0) as usize)
        .into_iter()
        .filter(Partition::is_symplectic)
        .collect())
}

/// All couples (λ, ε) with λ symplectic of `two_n` and ε a choice of sign on
/// each distinct even part of λ. Within one λ the all-plus marking comes
/// first and the sign on the largest part varies slowest.
pub fn enumerate_marked(two_n: i64) -> Result<Vec<(Partition, SignMap)>, CoreError> {
    let mut out = Vec::new();
    for lambda in enumerate_symplectic(two_n)? {
        let keys = lambda.jord_bp();
        let t = keys.len();
        for mask in 0u32..(1 << t) {
            let mut eps = SignMap::new();
            for (j, &key) in keys.iter().enumerate() {
                let minus = mask >> (t - 1 - j) & 1 == 1;
                eps.insert(key, if minus { Sign::Minus } else { Sign::Plus });
            }
            out.push((lambda.clone(), eps));
        }
    }
    Ok(out)
}

/// All pairs (α, β) with |α|+|β| = `total`, α padded to exactly `len_a`
/// entries and β to `len_b`. Ordered by |α| decreasing, then α and β each
/// lexicographically decreasing. Splits needing more nonzero parts than the
/// padding allows are absent.
pub fn enumerate_bipartitions(
    total: i64,
    len_a: usize,
    len_b: usize,
) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for sum_a in (0..=total).rev() {
        for alpha in enumerate_partitions(sum_a, len_a) {
            let alpha = alpha.padded(len_a).expect("length bounded by len_a");
            for beta in enumerate_partitions(total - sum_a, len_b) {
                let beta = beta.padded(len_b).expect("length bounded by len_b");
                out.push((alpha.clone(), beta));
            }
        }
    }
    out
}
