use partition_core::{Partition, Sign, SignMap};
use springer_corr::{epsilon_on_indices, MarkedSymplectic};

use crate::error::{ExtremalError, Result};

/// One step of the peeling recursion on a couple whose parts are all even:
/// the sign-change positions over the index set {1..2r+1}, the two
/// alternation classes, the peeled first part, and the smaller couple left
/// behind.
///
/// Invariants: `frak_s` starts at 1 and is strictly increasing; `bar_first`
/// is even with 2 ≤ `bar_first` ≤ 2N; the derived couple sums to
/// 2N − `bar_first`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarTrace {
    frak_s: Vec<usize>,
    j_a: Vec<usize>,
    j_b: Vec<usize>,
    bar_first: i64,
    derived: MarkedSymplectic,
}

impl BarTrace {
    /// Positions where the alternation ε(j)(−1)^j changes, preceded by 1.
    pub fn frak_s(&self) -> &[usize] {
        &self.frak_s
    }

    /// Indices with (−1)^{j+1}ε(j) = 1.
    pub fn j_a(&self) -> &[usize] {
        &self.j_a
    }

    /// Indices with (−1)^j ε(j) = 1.
    pub fn j_b(&self) -> &[usize] {
        &self.j_b
    }

    /// The part peeled off by this step.
    pub fn bar_first(&self) -> i64 {
        self.bar_first
    }

    /// The smaller couple the recursion continues on.
    pub fn derived(&self) -> &MarkedSymplectic {
        &self.derived
    }

    /// The sign at index 1, which the peeled part inherits.
    pub fn leading_sign(&self) -> Sign {
        if self.j_a.first() == Some(&1) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

fn parity(j: usize) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sign_of(value: i64) -> Sign {
    if value == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// One peeling step at row count r. Requires every part even and a nonempty
/// couple; r must leave the index 2r+1 on a zero part.
pub fn bar_step(ms: &MarkedSymplectic, r: usize) -> Result<BarTrace> {
    if !ms.lambda().all_parts_even() {
        return Err(ExtremalError::OddPartUnsupported);
    }
    let two_n = ms.two_n();
    if two_n == 0 {
        return Err(ExtremalError::EmptyCouple);
    }
    let signs = epsilon_on_indices(ms, r)?;
    let padded = ms.lambda().padded(2 * r + 1)?;
    let count = 2 * r + 1;
    let eps = |j: usize| signs[j - 1].value();

    let j_a: Vec<usize> = (1..=count)
        .filter(|&j| parity(j + 1) * eps(j) == 1)
        .collect();
    let j_b: Vec<usize> = (1..=count).filter(|&j| parity(j) * eps(j) == 1).collect();
    let mut frak_s = vec![1usize];
    for j in 2..=count {
        if eps(j) * parity(j) != eps(j - 1) * parity(j - 1) {
            frak_s.push(j);
        }
    }

    let s_len = frak_s.len();
    let sum_s: i64 = frak_s.iter().map(|&s| padded.get(s - 1)).sum();
    let bar_first = if eps(1) == 1 {
        sum_s + s_len as i64 - 1 - 2 * j_b.len() as i64
    } else {
        sum_s + s_len as i64 - 2 * j_a.len() as i64
    };

    // The same value through the gap form, with a sentinel position past the
    // last index.
    let mut gaps = 0i64;
    for h in 1..=s_len / 2 {
        let upper = frak_s.get(2 * h).copied().unwrap_or(count + 1);
        gaps += upper as i64 - frak_s[2 * h - 1] as i64 - 1;
    }
    if bar_first != sum_s - 2 * gaps {
        return Err(ExtremalError::Invariant(format!(
            "peeled part {bar_first} disagrees with its gap form {}",
            sum_s - 2 * gaps
        )));
    }
    if bar_first % 2 != 0 || bar_first < 2 || bar_first > two_n {
        return Err(ExtremalError::Invariant(format!(
            "peeled part {bar_first} outside [2, {two_n}] or odd"
        )));
    }

    // Off-𝔖 indices contribute their part, raised by 2 exactly when their
    // alternation matches the leading one; the sign they carry depends only
    // on the resulting value.
    let mut parts = Vec::with_capacity(count - s_len);
    let mut epsilon = SignMap::new();
    for j in 1..=count {
        if frak_s.binary_search(&j).is_ok() {
            continue;
        }
        let value = if eps(j) * parity(j) == eps(1) {
            padded.get(j - 1) + 2
        } else {
            padded.get(j - 1)
        };
        let h_j = frak_s.iter().filter(|&&s| s < j).count();
        let sign = sign_of(parity(h_j + 1) * eps(j));
        if value == 0 {
            if sign != Sign::Plus {
                return Err(ExtremalError::Invariant(format!(
                    "zero part carries a minus at index {j}"
                )));
            }
            parts.push(0);
            continue;
        }
        if let Some(prev) = epsilon.get(&value) {
            if *prev != sign {
                return Err(ExtremalError::Invariant(format!(
                    "conflicting signs for derived part {value}"
                )));
            }
        }
        epsilon.insert(value, sign);
        parts.push(value);
    }
    if parts.len() != count - s_len {
        return Err(ExtremalError::Invariant(format!(
            "derived row has {} parts, expected {}",
            parts.len(),
            count - s_len
        )));
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    let lambda = Partition::new(parts)?.trim();
    if lambda.sum() != two_n - bar_first {
        return Err(ExtremalError::Invariant(format!(
            "derived total {} differs from {}",
            lambda.sum(),
            two_n - bar_first
        )));
    }
    let derived = MarkedSymplectic::new(lambda, epsilon)?;
    Ok(BarTrace {
        frak_s,
        j_a,
        j_b,
        bar_first,
        derived,
    })
}

/// The fully peeled couple. Identity on the empty couple.
pub fn bar(ms: &MarkedSymplectic) -> Result<MarkedSymplectic> {
    Ok(bar_with_trace(ms)?.0)
}

/// The fully peeled couple together with the step traces, outermost first.
/// Each level runs at the canonical row count and must reproduce itself one
/// row count higher; the peeled parts are weakly decreasing down the chain
/// and their signs agree wherever a part value repeats.
pub fn bar_with_trace(ms: &MarkedSymplectic) -> Result<(MarkedSymplectic, Vec<BarTrace>)> {
    if !ms.lambda().all_parts_even() {
        return Err(ExtremalError::OddPartUnsupported);
    }
    if ms.two_n() == 0 {
        return Ok((ms.clone(), Vec::new()));
    }
    let r = ms.default_r();
    let step = bar_step(ms, r)?;
    let wider = bar_step(ms, r + 1)?;
    if step.bar_first != wider.bar_first || step.derived != wider.derived {
        return Err(ExtremalError::Invariant(
            "peeling step depends on the ambient row count".into(),
        ));
    }
    let (inner, chain) = bar_with_trace(&step.derived)?;
    let first = step.bar_first;
    if first < inner.lambda().first() {
        return Err(ExtremalError::Invariant(format!(
            "peeled part {first} below the recursive first part {}",
            inner.lambda().first()
        )));
    }
    let lead = step.leading_sign();
    let mut epsilon = inner.epsilon().clone();
    if let Some(prev) = epsilon.get(&first) {
        if *prev != lead {
            return Err(ExtremalError::Invariant(format!(
                "sign clash at the joined part {first}"
            )));
        }
    }
    epsilon.insert(first, lead);
    let mut parts = vec![first];
    parts.extend_from_slice(inner.lambda().parts());
    let lambda = Partition::new(parts)?;
    let couple = MarkedSymplectic::new(lambda, epsilon)?;
    let mut steps = vec![step];
    steps.extend(chain);
    Ok((couple, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::parse_sign_map;
    use springer_corr::CorrError;

    fn ms(lambda: &str, epsilon: &str) -> MarkedSymplectic {
        MarkedSymplectic::new(lambda.parse().unwrap(), parse_sign_map(epsilon).unwrap()).unwrap()
    }

    fn empty() -> MarkedSymplectic {
        MarkedSymplectic::new(Partition::new(vec![]).unwrap(), SignMap::new()).unwrap()
    }

    #[test]
    fn step_peels_a_single_plus_part() {
        let trace = bar_step(&ms("2", "2:+"), 1).unwrap();
        assert_eq!(trace.frak_s(), &[1, 2, 3]);
        assert_eq!(trace.j_a(), &[1, 3]);
        assert_eq!(trace.j_b(), &[2]);
        assert_eq!(trace.bar_first(), 2);
        assert_eq!(trace.derived(), &empty());
        assert_eq!(trace.leading_sign(), Sign::Plus);
    }

    #[test]
    fn step_merges_a_plus_pair() {
        let trace = bar_step(&ms("2,2", "2:+"), 1).unwrap();
        assert_eq!(trace.frak_s(), &[1, 2, 3]);
        assert_eq!(trace.bar_first(), 4);
        assert_eq!(trace.derived(), &empty());
    }

    #[test]
    fn step_splits_a_minus_pair() {
        let trace = bar_step(&ms("2,2", "2:-"), 1).unwrap();
        assert_eq!(trace.frak_s(), &[1, 2]);
        assert_eq!(trace.j_a(), &[2, 3]);
        assert_eq!(trace.j_b(), &[1]);
        assert_eq!(trace.bar_first(), 2);
        assert_eq!(trace.derived(), &ms("2", "2:-"));
        assert_eq!(trace.leading_sign(), Sign::Minus);
    }

    #[test]
    fn step_rejects_odd_parts_empty_couples_and_small_radii() {
        assert_eq!(
            bar_step(&ms("1,1", ""), 1),
            Err(ExtremalError::OddPartUnsupported)
        );
        assert_eq!(bar_step(&empty(), 1), Err(ExtremalError::EmptyCouple));
        assert_eq!(
            bar_step(&ms("2,2,2", "2:+"), 1),
            Err(ExtremalError::Corr(CorrError::RTooSmall { r: 1 }))
        );
    }

    #[test]
    fn full_peeling_examples() {
        assert_eq!(bar(&ms("2", "2:+")).unwrap(), ms("2", "2:+"));
        assert_eq!(bar(&ms("2,2", "2:+")).unwrap(), ms("4", "4:+"));
        assert_eq!(bar(&ms("2,2", "2:-")).unwrap(), ms("2,2", "2:-"));
        assert_eq!(bar(&empty()).unwrap(), empty());
    }

    #[test]
    fn trace_chain_lists_steps_outermost_first() {
        let (couple, chain) = bar_with_trace(&ms("2,2", "2:-")).unwrap();
        assert_eq!(couple, ms("2,2", "2:-"));
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0].bar_first(), 2);
        assert_eq!(chain[0].derived(), &ms("2", "2:-"));
        assert_eq!(chain[1].bar_first(), 2);
        assert_eq!(chain[1].derived(), &empty());
    }

    #[test]
    fn peeled_couples_stay_symplectic_and_even() {
        for two_n in (0..=10).step_by(2) {
            for couple in springer_corr::enumerate_couples(two_n).unwrap() {
                if !couple.lambda().all_parts_even() {
                    continue;
                }
                let peeled = bar(&couple).unwrap();
                assert!(peeled.lambda().is_symplectic(), "{couple}");
                assert!(peeled.lambda().all_parts_even(), "{couple}");
                assert_eq!(peeled.two_n(), two_n, "{couple}");
            }
        }
    }
}
