use std::collections::BTreeSet;

use partition_core::{enumerate_marked, sign_map_text, Partition, Sign, SignMap};

use crate::error::{CorrError, Result};

/// A symplectic partition with a sign on each distinct even part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedSymplectic {
    lambda: Partition,
    epsilon: SignMap,
}

impl MarkedSymplectic {
    /// `lambda` must be symplectic and `epsilon` keyed by exactly its
    /// distinct even parts.
    pub fn new(lambda: Partition, epsilon: SignMap) -> Result<Self> {
        if !lambda.is_symplectic() {
            return Err(CorrError::NotSymplectic);
        }
        let expected: BTreeSet<i64> = lambda.jord_bp().into_iter().collect();
        let got: BTreeSet<i64> = epsilon.keys().copied().collect();
        if expected != got {
            return Err(CorrError::EpsilonKeys);
        }
        Ok(Self { lambda, epsilon })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn epsilon(&self) -> &SignMap {
        &self.epsilon
    }

    pub fn two_n(&self) -> i64 {
        self.lambda.sum()
    }

    /// The canonical row count: half the total.
    pub fn default_r(&self) -> usize {
        (self.lambda.sum() / 2) as usize
    }

    pub fn lambda_text(&self) -> String {
        self.lambda.to_string()
    }

    pub fn epsilon_text(&self) -> String {
        sign_map_text(&self.epsilon)
    }
}

impl std::fmt::Display for MarkedSymplectic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; {})", self.lambda_text(), self.epsilon_text())
    }
}

/// Every marked couple of the given even total.
pub fn enumerate_couples(two_n: i64) -> Result<Vec<MarkedSymplectic>> {
    enumerate_marked(two_n)?
        .into_iter()
        .map(|(lambda, epsilon)| MarkedSymplectic::new(lambda, epsilon))
        .collect()
}

/// Signs read off the index set {1..2r+1}: the sign of the part standing at
/// each index, with +1 on indices past the last nonzero part. Defined only
/// when every part is even.
pub fn epsilon_on_indices(ms: &MarkedSymplectic, r: usize) -> Result<Vec<Sign>> {
    if !ms.lambda().all_parts_even() {
        return Err(CorrError::OddPartUnsupported);
    }
    let padded = ms
        .lambda()
        .padded(2 * r + 1)
        .map_err(|_| CorrError::RTooSmall { r })?;
    if padded.get(2 * r) != 0 {
        return Err(CorrError::RTooSmall { r });
    }
    Ok((0..2 * r + 1)
        .map(|j| {
            let part = padded.get(j);
            if part == 0 {
                Sign::Plus
            } else {
                ms.epsilon()[&part]
            }
        })
        .collect())
}

/// Alternating sum of signs over the odd-multiplicity even parts, largest
/// part first.
pub fn m_value(ms: &MarkedSymplectic) -> i64 {
    let mut total = 0;
    let mut l = 0i64;
    for part in ms.lambda().jord_bp() {
        if ms.lambda().multiplicity(part) % 2 == 0 {
            continue;
        }
        l += 1;
        if ms.epsilon()[&part] == Sign::Minus {
            total += if l % 2 == 1 { -1 } else { 1 };
        }
    }
    total
}

/// The block index of the couple, folded from the alternating sum.
pub fn k_of(ms: &MarkedSymplectic) -> i64 {
    let m = m_value(ms);
    if m >= 0 {
        2 * m
    } else {
        -2 * m - 1
    }
}
