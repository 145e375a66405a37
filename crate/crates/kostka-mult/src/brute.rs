use pab_engine::IndexedPair;
use partition_core::Partition;

use crate::error::{MultError, Result};
use crate::shift::x_solution_count;

/// A signed multiplicity, optionally broken down per permutation pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultResult {
    pub value: i64,
    pub audit: Option<Vec<AuditTerm>>,
}

/// One term of the double sum: permutations are 0-based images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditTerm {
    pub w: Vec<usize>,
    pub v: Vec<usize>,
    pub sign: i64,
    pub count: u64,
}

/// seq[w]_i = seq_{w(i)} + i − w(i), all indices 1-based in the formula.
pub fn twist(seq: &[i64], w: &[usize]) -> Vec<i64> {
    assert_eq!(
        seq.len(),
        w.len(),
        "permutation must act on the whole sequence"
    );
    (0..seq.len())
        .map(|i| seq[w[i]] + i as i64 - w[i] as i64)
        .collect()
}

/// All permutations of 0..n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        all.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    all
}

fn sign_of(w: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn padded_targets(
    pair: &IndexedPair,
    nu: &Partition,
    mu: &Partition,
) -> Result<(Vec<i64>, Vec<i64>)> {
    if nu.sum() + mu.sum() != pair.alpha().sum() + pair.beta().sum() {
        return Err(MultError::SumMismatch);
    }
    let nu = nu.padded(pair.n())?;
    let mu = mu.padded(pair.m())?;
    Ok((nu.parts().to_vec(), mu.parts().to_vec()))
}

fn term(pair: &IndexedPair, nu: &[i64], mu: &[i64], w: &[usize], v: &[usize]) -> AuditTerm {
    let count = x_solution_count(pair, &twist(nu, w), &twist(mu, v));
    AuditTerm {
        w: w.to_vec(),
        v: v.to_vec(),
        sign: sign_of(w) * sign_of(v),
        count,
    }
}

/// Signed double sum over both symmetric groups of transfer-vector counts.
/// The targets must carry the same total as the rows.
pub fn mult_bruteforce(pair: &IndexedPair, nu: &Partition, mu: &Partition) -> Result<MultResult> {
    let (nu, mu) = padded_targets(pair, nu, mu)?;
    let ws = permutations(pair.n());
    let vs = permutations(pair.m());
    #[cfg(feature = "parallel")]
    let value = {
        use rayon::prelude::*;
        let combos: Vec<(&Vec<usize>, &Vec<usize>)> = ws
            .iter()
            .flat_map(|w| vs.iter().map(move |v| (w, v)))
            .collect();
        combos
            .par_iter()
            .map(|(w, v)| {
                let t = term(pair, &nu, &mu, w, v);
                t.sign * t.count as i64
            })
            .sum()
    };
    #[cfg(not(feature = "parallel"))]
    let value = sum_terms(pair, &nu, &mu, &ws, &vs);
    Ok(MultResult { value, audit: None })
}

/// Sequential evaluation of the same double sum.
pub fn mult_bruteforce_seq(
    pair: &IndexedPair,
    nu: &Partition,
    mu: &Partition,
) -> Result<MultResult> {
    let (nu, mu) = padded_targets(pair, nu, mu)?;
    let ws = permutations(pair.n());
    let vs = permutations(pair.m());
    let value = sum_terms(pair, &nu, &mu, &ws, &vs);
    Ok(MultResult { value, audit: None })
}

fn sum_terms(
    pair: &IndexedPair,
    nu: &[i64],
    mu: &[i64],
    ws: &[Vec<usize>],
    vs: &[Vec<usize>],
) -> i64 {
    let mut value = 0;
    for w in ws {
        for v in vs {
            let t = term(pair, nu, mu, w, v);
            value += t.sign * t.count as i64;
        }
    }
    value
}

/// Same sum with every term recorded, in lexicographic (w, v) order.
pub fn mult_bruteforce_audited(
    pair: &IndexedPair,
    nu: &Partition,
    mu: &Partition,
) -> Result<MultResult> {
    let (nu, mu) = padded_targets(pair, nu, mu)?;
    let mut terms = Vec::new();
    for w in permutations(pair.n()) {
        for v in permutations(pair.m()) {
            terms.push(term(pair, &nu, &mu, &w, &v));
        }
    }
    let value = terms.iter().map(|t| t.sign * t.count as i64).sum();
    Ok(MultResult {
        value,
        audit: Some(terms),
    })
}
