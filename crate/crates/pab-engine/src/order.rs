use std::fmt;
use std::str::FromStr;

use crate::error::EngineError;

/// One of the two rows an index can live on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::A => 'A',
            Side::B => 'B',
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Total order on the disjoint index set {1..n}x{A} ∪ {1..m}x{B}, written as
/// a word: the i-th A from the left is the A-side index i, likewise for B.
/// Word position is rank, so same-side indices always increase left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShuffleOrder(Vec<Side>);

impl ShuffleOrder {
    pub fn new(word: Vec<Side>) -> Self {
        ShuffleOrder(word)
    }

    pub fn empty() -> Self {
        ShuffleOrder(Vec::new())
    }

    pub fn word(&self) -> &[Side] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, side: Side) -> usize {
        self.0.iter().filter(|&&s| s == side).count()
    }

    /// 0-based word position of the 1-based `i`-th letter on `side`.
    pub fn position(&self, side: Side, i: usize) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == side)
            .nth(i - 1)
            .map(|(p, _)| p)
    }

    /// True iff the word begins with `side` (the side-1 index is minimal).
    pub fn starts_with(&self, side: Side) -> bool {
        self.0.first() == Some(&side)
    }

    /// Word with the given 0-based positions removed; this is the induced
    /// order on the remaining indices.
    pub fn remove_positions(&self, positions: &[usize]) -> ShuffleOrder {
        ShuffleOrder(
            self.0
                .iter()
                .enumerate()
                .filter(|(p, _)| !positions.contains(p))
                .map(|(_, &s)| s)
                .collect(),
        )
    }

    /// Word with the first letter on `side` removed.
    pub fn remove_first(&self, side: Side) -> ShuffleOrder {
        match self.position(side, 1) {
            Some(p) => self.remove_positions(&[p]),
            None => self.clone(),
        }
    }

    /// Swaps every letter; relabels the two rows.
    pub fn mirrored(&self) -> ShuffleOrder {
        ShuffleOrder(self.0.iter().map(|s| s.other()).collect())
    }
}

impl fmt::Display for ShuffleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ShuffleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ShuffleOrder {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, EngineError> {
        let mut word = Vec::with_capacity(s.len());
        for c in s.trim().chars() {
            word.push(match c {
                'A' => Side::A,
                'B' => Side::B,
                other => return Err(EngineError::BadOrderChar(other)),
            });
        }
        Ok(ShuffleOrder(word))
    }
}
