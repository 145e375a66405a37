use std::fmt;
use std::str::FromStr;

use crate::error::CoreError;
use crate::rational::rat;
use crate::seq::RatSeq;

/// Weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are significant for `==`; `shape_eq` ignores them. The
/// derived order is lexicographic on the part vectors and is used only to
/// make containers deterministic, it is not the dominance order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    /// Invariants checked: weakly decreasing, all parts nonnegative.
    pub fn new(parts: Vec<i64>) -> Result<Self, CoreError> {
        for (i, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(CoreError::NegativePart {
                    value: p,
                    position: i,
                });
            }
            if i > 0 && p > parts[i - 1] {
                return Err(CoreError::NotDecreasing { position: i });
            }
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Part at 0-based `i`; positions past the end read as zero.
    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// First part, zero when empty.
    pub fn first(&self) -> i64 {
        self.get(0)
    }

    /// Sum of the first `k` parts, reading zeros past the end.
    pub fn partial_sum(&self, k: usize) -> i64 {
        self.0.iter().take(k).sum()
    }

    /// Dominance order with zero padding: every partial sum of `self` is at
    /// most the matching partial sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        let k = self.len().max(other.len());
        let mut sa = 0;
        let mut sb = 0;
        for i in 0..k {
            sa += self.get(i);
            sb += other.get(i);
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Strict dominance: `self` below `other` and the shapes differ.
    pub fn dominance_lt(&self, other: &Partition) -> bool {
        self.dominance_leq(other) && !self.shape_eq(other)
    }

    /// Multiset union sorted decreasing; length adds.
    pub fn sorted_union(&self, other: &Partition) -> Partition {
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
        Partition(merged)
    }

    /// Entrywise sum after zero padding to the longer length.
    pub fn pointwise_add(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition((0..k).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// Conjugate partition, trimmed.
    pub fn transpose(&self) -> Partition {
        let cols = self.first();
        let mut t = Vec::with_capacity(cols as usize);
        for i in 1..=cols {
            t.push(self.0.iter().filter(|&&p| p >= i).count() as i64);
        }
        Partition(t)
    }

    /// Conjugate padded with zeros to exactly `len` entries.
    pub fn transpose_padded(&self, len: usize) -> Result<Partition, CoreError> {
        self.transpose().padded(len)
    }

    /// Count of parts equal to `i`.
    pub fn multiplicity(&self, i: i64) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// True iff every odd part occurs an even number of times.
    pub fn is_symplectic(&self) -> bool {
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == p {
                j += 1;
            }
            if p % 2 == 1 && (j - i) % 2 == 1 {
                return false;
            }
            i = j;
        }
        true
    }

    /// Distinct even parts at least 2, in decreasing order.
    pub fn jord_bp(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for &p in &self.0 {
            if p >= 2 && p % 2 == 0 && out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Equality up to trailing zeros.
    pub fn shape_eq(&self, other: &Partition) -> bool {
        let k = self.len().max(other.len());
        (0..k).all(|i| self.get(i) == other.get(i))
    }

    /// Copy with trailing zeros removed.
    pub fn trim(&self) -> Partition {
        let mut parts = self.0.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Copy with trailing zeros adjusted to exactly `len` entries. Fails if
    /// more than `len` parts are nonzero.
    pub fn padded(&self, len: usize) -> Result<Partition, CoreError> {
        let needed = self.0.iter().filter(|&&p| p > 0).count();
        if needed > len {
            return Err(CoreError::PadTooShort {
                requested: len,
                needed,
            });
        }
        let mut parts: Vec<i64> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(len, 0);
        Ok(Partition(parts))
    }

    pub fn to_ratseq(&self) -> RatSeq {
        RatSeq::new(self.0.iter().map(|&p| rat(p)).collect())
            .expect("a partition is weakly decreasing")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = CoreError;

    /// Comma-separated parts, e.g. `4,2,2`; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            parts.push(
                tok.parse::<i64>()
                    .map_err(|_| CoreError::BadInteger(tok.to_string()))?,
            );
        }
        Partition::new(parts)
    }
}

/// Builds a `Partition` from literal parts, panicking on invalid input.
/// Intended for tests and fixtures.
#[macro_export]
macro_rules! ptn {
    ($($p:expr),* $(,)?) => {
        $crate::Partition::new(vec![$($p),*]).expect("valid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, -1]).is_err());
        assert_eq!(ptn![2, 1, 0].parts(), &[2, 1, 0]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("4,2,2".parse::<Partition>().unwrap(), ptn![4, 2, 2]);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(ptn![4, 2, 2].to_string(), "4,2,2");
        assert_eq!(Partition::empty().to_string(), "");
        assert!("2,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn trailing_zeros_matter_for_eq_but_not_shape() {
        assert_ne!(ptn![2, 0], ptn![2]);
        assert!(ptn![2, 0].shape_eq(&ptn![2]));
        assert!(!ptn![2, 0].shape_eq(&ptn![2, 1]));
    }

    #[test]
    fn dominance_pads_with_zeros() {
        assert!(ptn![2, 1, 1].dominance_leq(&ptn![3, 1]));
        assert!(!ptn![3, 1].dominance_leq(&ptn![2, 1, 1]));
        assert!(ptn![2, 2].dominance_lt(&ptn![4]));
        assert!(!ptn![2, 2].dominance_lt(&ptn![2, 2, 0]));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(ptn![2, 2].transpose(), ptn![2, 2]);
        assert_eq!(ptn![3, 1].transpose(), ptn![2, 1, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(ptn![3, 1].transpose_padded(4).unwrap(), ptn![2, 1, 1, 0]);
        assert!(ptn![3, 1].transpose_padded(2).is_err());
    }

    #[test]
    fn multiplicity_and_symplectic() {
        assert_eq!(ptn![2, 2, 1, 1].multiplicity(2), 2);
        assert_eq!(ptn![2, 2].multiplicity(3), 0);
        assert_eq!(ptn![4].multiplicity(4), 1);
        assert!(ptn![2, 2].is_symplectic());
        assert!(ptn![3, 3].is_symplectic());
        assert!(!ptn![3, 1].is_symplectic());
    }

    #[test]
    fn jord_bp_lists_distinct_even_parts() {
        assert_eq!(ptn![4, 2, 2, 1, 1].jord_bp(), vec![4, 2]);
        assert!(ptn![3, 3].jord_bp().is_empty());
        assert_eq!(ptn![2].jord_bp(), vec![2]);
    }

    #[test]
    fn pad_and_trim() {
        assert_eq!(ptn![2, 0, 0].trim(), ptn![2]);
        assert_eq!(ptn![2].padded(3).unwrap(), ptn![2, 0, 0]);
        assert_eq!(ptn![2, 0, 0].padded(1).unwrap(), ptn![2]);
        assert!(ptn![2, 1].padded(1).is_err());
    }
}
