use std::fmt;

use crate::error::CoreError;
use crate::rational::{rat, Rat};

/// Weakly decreasing sequence of exact rationals.
///
/// Trailing zeros are significant: sequences of different lengths are never
/// equal. Entries may be negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatSeq(Vec<Rat>);

impl RatSeq {
    /// Invariant checked: entries weakly decreasing.
    pub fn new(entries: Vec<Rat>) -> Result<Self, CoreError> {
        for i in 1..entries.len() {
            if entries[i] > entries[i - 1] {
                return Err(CoreError::NotDecreasing { position: i });
            }
        }
        Ok(RatSeq(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self, CoreError> {
        Self::new(entries.iter().copied().map(rat).collect())
    }

    pub fn empty() -> Self {
        RatSeq(Vec::new())
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 0-based `i`; positions past the end read as zero.
    pub fn get(&self, i: usize) -> Rat {
        self.0.get(i).copied().unwrap_or_else(|| rat(0))
    }

    pub fn sum(&self) -> Rat {
        self.0.iter().copied().sum()
    }

    /// Sum of the first `k` entries; `k` must not exceed the length.
    pub fn partial_sum(&self, k: usize) -> Result<Rat, CoreError> {
        if k > self.0.len() {
            return Err(CoreError::IndexOutOfRange {
                index: k,
                len: self.0.len(),
            });
        }
        Ok(self.0[..k].iter().copied().sum())
    }

    /// True iff every partial sum of `self` is at most the matching partial
    /// sum of `other`. Lengths must agree.
    pub fn dominance_leq(&self, other: &RatSeq) -> Result<bool, CoreError> {
        if self.len() != other.len() {
            return Err(CoreError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let mut sa = rat(0);
        let mut sb = rat(0);
        for (a, b) in self.0.iter().zip(&other.0) {
            sa += *a;
            sb += *b;
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiset union sorted decreasing; length adds.
    pub fn sorted_union(&self, other: &RatSeq) -> RatSeq {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            if self.0[i] >= other.0[j] {
                merged.push(self.0[i]);
                i += 1;
            } else {
                merged.push(other.0[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.0[i..]);
        merged.extend_from_slice(&other.0[j..]);
        RatSeq(merged)
    }

    /// Entrywise sum; lengths must agree. The sum of two weakly decreasing
    /// sequences is weakly decreasing.
    pub fn pointwise_add(&self, other: &RatSeq) -> Result<RatSeq, CoreError> {
        if self.len() != other.len() {
            return Err(CoreError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(RatSeq(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// True iff all entries are pairwise distinct (no repeated value).
    pub fn multiplicity_free(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for RatSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// The decreasing progression `from, from-step, ..., to`.
///
/// `to = from + step` yields the empty sequence by convention. Any other
/// pair with `(from - to)/step` not a nonnegative integer is rejected.
pub fn arith_progression(from: Rat, to: Rat, step: Rat) -> Result<RatSeq, CoreError> {
    let bad = || CoreError::BadProgression {
        from: from.to_string(),
        to: to.to_string(),
        step: step.to_string(),
    };
    if step <= rat(0) {
        return Err(bad());
    }
    if to == from + step {
        return Ok(RatSeq::empty());
    }
    let q = (from - to) / step;
    if !q.is_integer() || q < rat(0) {
        return Err(bad());
    }
    let count = q.to_integer() as usize + 1;
    let mut entries = Vec::with_capacity(count);
    let mut v = from;
    for _ in 0..count {
        entries.push(v);
        v -= step;
    }
    Ok(RatSeq(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(parts: &[i64]) -> RatSeq {
        RatSeq::from_ints(parts).unwrap()
    }

    #[test]
    fn partial_sums() {
        let s = seq(&[3, 1, 0]);
        assert_eq!(s.partial_sum(2).unwrap(), rat(4));
        assert_eq!(s.partial_sum(0).unwrap(), rat(0));
        assert_eq!(seq(&[4, 3, 1]).partial_sum(3).unwrap(), rat(8));
        assert!(s.partial_sum(4).is_err());
    }

    #[test]
    fn dominance() {
        let a = seq(&[3, 3, 2]);
        let b = seq(&[4, 3, 1]);
        assert!(a.dominance_leq(&b).unwrap());
        assert!(a.dominance_leq(&a).unwrap());
        assert!(!b.dominance_leq(&a).unwrap());
        assert!(a.dominance_leq(&seq(&[1])).is_err());
    }

    #[test]
    fn union_merges_sorted() {
        assert_eq!(seq(&[3, 1]).sorted_union(&seq(&[2, 2])), seq(&[3, 2, 2, 1]));
        assert_eq!(RatSeq::empty().sorted_union(&seq(&[2])), seq(&[2]));
        assert_eq!(seq(&[4]).sorted_union(&seq(&[3, 1])), seq(&[4, 3, 1]));
    }

    #[test]
    fn pointwise_add_entrywise() {
        assert_eq!(
            seq(&[2, 0, 0]).pointwise_add(&seq(&[2, 1, 0])).unwrap(),
            seq(&[4, 1, 0])
        );
        assert_eq!(
            seq(&[1, 0]).pointwise_add(&seq(&[2, 0])).unwrap(),
            seq(&[3, 0])
        );
        assert_eq!(
            seq(&[3, 2]).pointwise_add(&seq(&[0, 0])).unwrap(),
            seq(&[3, 2])
        );
        assert!(seq(&[1]).pointwise_add(&seq(&[1, 0])).is_err());
    }

    #[test]
    fn progressions() {
        assert_eq!(
            arith_progression(rat(4), rat(0), rat(2)).unwrap(),
            seq(&[4, 2, 0])
        );
        assert_eq!(
            arith_progression(rat(3), rat(5), rat(2)).unwrap(),
            RatSeq::empty()
        );
        assert_eq!(
            arith_progression(rat(3), rat(3), rat(1)).unwrap(),
            seq(&[3])
        );
        assert!(arith_progression(rat(3), rat(6), rat(2)).is_err());
        assert!(arith_progression(rat(3), rat(0), rat(2)).is_err());
        let half = Rat::new(1, 2);
        assert_eq!(
            arith_progression(rat(1), rat(0), half).unwrap(),
            RatSeq::new(vec![rat(1), half, rat(0)]).unwrap()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(seq(&[4, 2, 0]).to_string(), "4,2,0");
        assert_eq!(RatSeq::empty().to_string(), "");
        assert_eq!(
            RatSeq::new(vec![Rat::new(7, 2), rat(1)])
                .unwrap()
                .to_string(),
            "7/2,1"
        );
    }
}
