use std::collections::BTreeMap;

use kostka_mult::{mult_bruteforce_audited, mult_recursive, MultResult};
use pab_engine::IndexedPair;
use springer_corr::{
    enumerate_couples, k_of, order_from_pair, springer_to_pair, MarkedSymplectic, SpringerDatum,
};

use crate::error::{ExtremalError, Result};

/// The block datum of a couple at its canonical row count, together with the
/// indexed pair carrying the order read off its merged symbol.
pub(crate) fn block_pair(ms: &MarkedSymplectic) -> Result<(SpringerDatum, IndexedPair)> {
    let sd = springer_to_pair(ms, ms.default_r())?;
    let order = order_from_pair(&sd)?;
    let pair = IndexedPair::new(sd.alpha().clone(), sd.beta().clone(), order)?;
    Ok((sd, pair))
}

/// Multiplicity of `target` in the decomposition attached to `ms`, through
/// the block rows and the fast recursion. Couples in a different block or of
/// a different total contribute zero. The source must have only even parts.
pub fn mult_pair(ms: &MarkedSymplectic, target: &MarkedSymplectic) -> Result<i64> {
    if !ms.lambda().all_parts_even() {
        return Err(ExtremalError::OddPartUnsupported);
    }
    if ms.two_n() != target.two_n() || k_of(ms) != k_of(target) {
        return Ok(0);
    }
    let (sd, pair) = block_pair(ms)?;
    let td = springer_to_pair(target, sd.r())?;
    Ok(mult_recursive(&pair, td.alpha(), td.beta())?)
}

/// Same value through the signed brute-force count, with the per-twist audit
/// retained.
pub fn mult_pair_audited(ms: &MarkedSymplectic, target: &MarkedSymplectic) -> Result<MultResult> {
    if !ms.lambda().all_parts_even() {
        return Err(ExtremalError::OddPartUnsupported);
    }
    if ms.two_n() != target.two_n() || k_of(ms) != k_of(target) {
        return Ok(MultResult {
            value: 0,
            audit: Some(Vec::new()),
        });
    }
    let (sd, pair) = block_pair(ms)?;
    let td = springer_to_pair(target, sd.r())?;
    Ok(mult_bruteforce_audited(&pair, td.alpha(), td.beta())?)
}

/// Nonzero multiplicities of one source couple over its whole block.
///
/// Invariants: the source appears with value 1; every key shares the
/// source's block index and total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    source: MarkedSymplectic,
    entries: BTreeMap<MarkedSymplectic, i64>,
}

impl MultTable {
    pub fn source(&self) -> &MarkedSymplectic {
        &self.source
    }

    pub fn entries(&self) -> &BTreeMap<MarkedSymplectic, i64> {
        &self.entries
    }

    /// The stored value, zero when absent.
    pub fn get(&self, target: &MarkedSymplectic) -> i64 {
        self.entries.get(target).copied().unwrap_or(0)
    }
}

/// Every nonzero multiplicity of `ms` across the couples of its total and
/// block. Targets are visited largest first in the lexicographic refinement
/// of dominance, so each evaluation extends the memo the later ones hit.
pub fn mult_table(ms: &MarkedSymplectic) -> Result<MultTable> {
    if !ms.lambda().all_parts_even() {
        return Err(ExtremalError::OddPartUnsupported);
    }
    let k = k_of(ms);
    let mut targets: Vec<MarkedSymplectic> = enumerate_couples(ms.two_n())?
        .into_iter()
        .filter(|t| k_of(t) == k)
        .collect();
    targets.sort_by(|x, y| y.lambda().parts().cmp(x.lambda().parts()));
    let mut entries = BTreeMap::new();
    for target in targets {
        let value = mult_pair(ms, &target)?;
        if value != 0 {
            entries.insert(target, value);
        }
    }
    if entries.get(ms) != Some(&1) {
        return Err(ExtremalError::Invariant(format!(
            "self multiplicity of {ms} is {}, not 1",
            entries.get(ms).copied().unwrap_or(0)
        )));
    }
    Ok(MultTable {
        source: ms.clone(),
        entries,
    })
}
