use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use pab_engine::{drop_first, IndexedPair, ShuffleOrder, Side};
use partition_core::Partition;

use crate::error::{MultError, Result};

/// All partitions of length len(mu) interlacing above `mu` entrywise, with
/// total fixed by `alpha1 + S(mu') - S(mu) = target`. Listed in decreasing
/// lexicographic order.
pub fn q_set(alpha1: i64, target: i64, mu: &Partition) -> Vec<Partition> {
    let needed = target - alpha1 + mu.sum();
    let mut out = Vec::new();
    if needed < mu.sum() {
        return out;
    }
    let mut prefix = Vec::with_capacity(mu.len());
    fill(0, needed, mu, &mut prefix, &mut out);
    out
}

fn fill(i: usize, left: i64, mu: &Partition, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if i == mu.len() {
        if left == 0 {
            out.push(Partition::new(prefix.clone()).expect("interlacing keeps entries decreasing"));
        }
        return;
    }
    let lo = mu.get(i);
    // Later entries cannot dip below their own floors.
    let suffix_lo: i64 = (i + 1..mu.len()).map(|j| mu.get(j)).sum();
    let mut hi = left - suffix_lo;
    if i >= 1 {
        hi = hi.min(mu.get(i - 1));
    }
    let mut value = hi;
    while value >= lo {
        prefix.push(value);
        fill(i + 1, left - value, mu, prefix, out);
        prefix.pop();
        value -= 1;
    }
}

#[derive(PartialEq, Eq, Hash)]
struct MemoKey {
    word: Vec<Side>,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    nu: Vec<i64>,
    mu: Vec<i64>,
}

fn memo() -> &'static Mutex<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Upper bound on retained memo entries; the cache resets past it so bulk
/// enumerations stay within a fixed memory envelope.
const MEMO_CAP: usize = 1 << 20;

/// First-entry recursion for the same signed multiplicity as
/// `mult_bruteforce`, memoised across calls.
pub fn mult_recursive(pair: &IndexedPair, nu: &Partition, mu: &Partition) -> Result<i64> {
    if nu.sum() + mu.sum() != pair.alpha().sum() + pair.beta().sum() {
        return Err(MultError::SumMismatch);
    }
    let nu = nu.padded(pair.n())?;
    let mu = mu.padded(pair.m())?;
    Ok(eval(pair, nu.parts(), mu.parts()))
}

fn eval(pair: &IndexedPair, nu: &[i64], mu: &[i64]) -> i64 {
    // The recursion peels the first row, so relabel when the other row leads.
    if pair.n() >= 1 && pair.m() >= 1 && !pair.order().starts_with(Side::A) {
        return eval(&pair.swapped_sides(), mu, nu);
    }
    if pair.n() == 0 || pair.m() == 0 {
        return i64::from(nu == pair.alpha().parts() && mu == pair.beta().parts());
    }
    let (pair, nu, mu) = trim_synchronized(pair, nu, mu);
    if pair.n() == 0 || pair.m() == 0 {
        return i64::from(nu == pair.alpha().parts() && mu == pair.beta().parts());
    }
    let key = MemoKey {
        word: pair.order().word().to_vec(),
        alpha: pair.alpha().parts().to_vec(),
        beta: pair.beta().parts().to_vec(),
        nu: nu.clone(),
        mu: mu.clone(),
    };
    if let Some(&cached) = memo().lock().unwrap().get(&key) {
        return cached;
    }
    let residual = drop_first(&pair, Side::A).expect("first row nonempty and leading");
    let alpha1 = pair.alpha().first();
    let n = pair.n();
    let mu_row = Partition::new(mu.clone()).expect("row stays decreasing");
    let mut value = 0i64;
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let mut nu_k = Vec::with_capacity(n - 1);
        nu_k.extend(nu.iter().take(k - 1).map(|part| part + 1));
        nu_k.extend_from_slice(&nu[k..]);
        let target = nu[k - 1] + 1 - k as i64;
        for mu_prime in q_set(alpha1, target, &mu_row) {
            value += sign * eval(&residual, &nu_k, mu_prime.parts());
        }
    }
    let mut cache = memo().lock().unwrap();
    if cache.len() >= MEMO_CAP {
        cache.clear();
    }
    cache.insert(key, value);
    value
}

/// Zero entries aligned with the end of the word carry no information on
/// either the rows or the targets; dropping them keeps memo entries shared
/// across ambient lengths.
fn trim_synchronized(
    pair: &IndexedPair,
    nu: &[i64],
    mu: &[i64],
) -> (IndexedPair, Vec<i64>, Vec<i64>) {
    let mut word = pair.order().word().to_vec();
    let mut alpha = pair.alpha().parts().to_vec();
    let mut beta = pair.beta().parts().to_vec();
    let mut nu = nu.to_vec();
    let mut mu = mu.to_vec();
    loop {
        match word.last() {
            Some(Side::A) if alpha.last() == Some(&0) && nu.last() == Some(&0) => {
                word.pop();
                alpha.pop();
                nu.pop();
            }
            Some(Side::B) if beta.last() == Some(&0) && mu.last() == Some(&0) => {
                word.pop();
                beta.pop();
                mu.pop();
            }
            _ => break,
        }
    }
    let trimmed = IndexedPair::new(
        Partition::new(alpha).expect("prefix of a row"),
        Partition::new(beta).expect("prefix of a row"),
        ShuffleOrder::new(word),
    )
    .expect("letter counts preserved");
    (trimmed, nu, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::ptn;

    fn pair(alpha: &str, beta: &str, order: &str) -> IndexedPair {
        IndexedPair::new(
            alpha.parse().unwrap(),
            beta.parse().unwrap(),
            order.parse().unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn q_set_interlaces_with_the_required_total() {
        let out = q_set(1, 2, &ptn![1, 0]);
        assert_eq!(out, vec![ptn![2, 0], ptn![1, 1]]);
    }

    #[test]
    fn q_set_contains_mu_exactly_when_the_sum_is_tight() {
        let out = q_set(2, 2, &ptn![1, 0]);
        assert!(out.contains(&ptn![1, 0]));
        for element in &out {
            assert_eq!(element.sum(), 1);
        }
        assert!(q_set(3, 1, &ptn![1, 0]).is_empty());
    }

    #[test]
    fn q_set_on_an_empty_row() {
        assert_eq!(q_set(2, 2, &ptn![]), vec![ptn![]]);
        assert!(q_set(2, 3, &ptn![]).is_empty());
    }

    #[test]
    fn base_cases_reduce_to_equality() {
        let pr = IndexedPair::new(ptn![2, 1], ptn![], "AA".parse().unwrap()).unwrap();
        assert_eq!(mult_recursive(&pr, &ptn![2, 1], &ptn![]).unwrap(), 1);
        assert_eq!(mult_recursive(&pr, &ptn![3], &ptn![]).unwrap(), 0);
    }

    #[test]
    fn reproduces_the_single_cross_pair_values() {
        let pr = pair("0", "1", "AB");
        assert_eq!(mult_recursive(&pr, &ptn![1], &ptn![0]).unwrap(), 1);
        assert_eq!(mult_recursive(&pr, &ptn![0], &ptn![1]).unwrap(), 1);
    }

    #[test]
    fn reproduces_the_braid_value() {
        let pr = pair("1", "1,1", "ABB");
        assert_eq!(mult_recursive(&pr, &ptn![2], &ptn![1, 0]).unwrap(), 1);
    }

    #[test]
    fn second_row_leading_words_are_relabeled() {
        let pr = pair("1", "0", "BA");
        let mirrored = pair("0", "1", "AB");
        for (nu, mu) in [(ptn![1], ptn![0]), (ptn![0], ptn![1])] {
            assert_eq!(
                mult_recursive(&pr, &nu, &mu).unwrap(),
                mult_recursive(&mirrored, &mu, &nu).unwrap()
            );
        }
    }

    #[test]
    fn sum_mismatch_is_an_argument_error() {
        let pr = pair("0", "1", "AB");
        assert_eq!(
            mult_recursive(&pr, &ptn![1], &ptn![1]),
            Err(MultError::SumMismatch)
        );
    }

    #[test]
    fn padding_does_not_change_values() {
        let small = pair("1", "1,1", "ABB");
        let padded = pair("1,0", "1,1,0", "ABBAB");
        assert_eq!(
            mult_recursive(&small, &ptn![2], &ptn![1, 0]).unwrap(),
            mult_recursive(&padded, &ptn![2], &ptn![1, 0]).unwrap()
        );
    }
}
