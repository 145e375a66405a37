use std::collections::BTreeMap;

use partition_core::{arith_progression, rat, Partition, RatSeq, Sign, SignMap};

use crate::error::{CorrError, Result};
use crate::marked::{enumerate_couples, k_of, MarkedSymplectic};
use crate::symbols::{marked_symbols, pair_symbols, tagged_entries, to_int, SymbolPair};

/// The image of a marked couple: a block index k and a pair of rows whose
/// lengths are tied to k and to the ambient row count r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpringerDatum {
    k: i64,
    alpha: Partition,
    beta: Partition,
    r: usize,
}

impl SpringerDatum {
    /// Rows are padded to their forced lengths n = r + k/2 + 1 and
    /// m = r - k/2 (integer division).
    pub fn new(k: i64, alpha: Partition, beta: Partition, r: usize) -> Result<Self> {
        if k < 0 {
            return Err(CorrError::BadDatum(
                "block index must be nonnegative".into(),
            ));
        }
        let half = (k / 2) as usize;
        if r < half {
            return Err(CorrError::RTooSmall { r });
        }
        let n = r + half + 1;
        let m = r - half;
        let alpha = alpha.padded(n).map_err(|_| CorrError::RTooSmall { r })?;
        let beta = beta.padded(m).map_err(|_| CorrError::RTooSmall { r })?;
        Ok(Self { k, alpha, beta, r })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn m(&self) -> usize {
        self.beta.len()
    }

    /// Total of the matching couples: 2(S(alpha)+S(beta)) + k(k+1).
    pub fn two_n(&self) -> i64 {
        2 * (self.alpha.sum() + self.beta.sum()) + self.k * (self.k + 1)
    }

    /// Top entry of the step-2 staircase on the alpha row.
    pub fn a_top(&self) -> i64 {
        2 * self.r as i64 + self.k
    }

    /// Top entry of the step-2 staircase on the beta row.
    pub fn b_top(&self) -> i64 {
        2 * self.r as i64 - 1 - self.k
    }
}

/// Row recovered by subtracting a step-2 staircase from a symbol row.
fn subtract_progression(side: &RatSeq, top: i64, bottom: i64, r: usize) -> Result<Partition> {
    let staircase =
        arith_progression(rat(top), rat(bottom), rat(2)).map_err(|_| CorrError::RTooSmall { r })?;
    if staircase.len() != side.len() {
        return Err(CorrError::Invariant(format!(
            "symbol row has {} entries, staircase has {}",
            side.len(),
            staircase.len()
        )));
    }
    let mut parts = Vec::with_capacity(side.len());
    for j in 0..side.len() {
        let diff = side.get(j) - staircase.get(j);
        if diff < rat(0) {
            return Err(CorrError::RTooSmall { r });
        }
        parts.push(to_int(diff));
    }
    Partition::new(parts).map_err(|_| CorrError::RTooSmall { r })
}

/// Forward direction of the correspondence at row count r: the block index
/// from the alternating sum, the rows from the marked symbol minus its
/// staircases. The result is checked to reproduce the symbol.
pub fn springer_to_pair(ms: &MarkedSymplectic, r: usize) -> Result<SpringerDatum> {
    let k = k_of(ms);
    if r < (k / 2) as usize {
        return Err(CorrError::RTooSmall { r });
    }
    let symbols = marked_symbols(ms, r)?;
    let a_top = 2 * r as i64 + k;
    let b_top = 2 * r as i64 - 1 - k;
    let (alpha, beta) = if k % 2 == 0 {
        (
            subtract_progression(symbols.a_side(), a_top, 0, r)?,
            subtract_progression(symbols.b_side(), b_top, 1, r)?,
        )
    } else {
        (
            subtract_progression(symbols.b_side(), a_top, 1, r)?,
            subtract_progression(symbols.a_side(), b_top, 0, r)?,
        )
    };
    let sd = SpringerDatum::new(k, alpha, beta, r)?;
    if sd.two_n() != ms.two_n() {
        return Err(CorrError::Invariant(
            "totals disagree across the correspondence".into(),
        ));
    }
    if pair_symbols(&sd)? != symbols {
        return Err(CorrError::Invariant(
            "row recovery does not reproduce the symbol".into(),
        ));
    }
    Ok(sd)
}

/// Inverse direction: the unique couple whose marked symbol matches.
/// A direct inversion handles the couples with even parts only; everything
/// else falls back to a search through all couples of the right total,
/// which is exact at desk scale.
pub fn pair_to_springer(sd: &SpringerDatum) -> Result<MarkedSymplectic> {
    let target = pair_symbols(sd)?;
    if let Some(ms) = invert_even_case(sd, &target)? {
        return Ok(ms);
    }
    let mut matches = Vec::new();
    for candidate in enumerate_couples(sd.two_n())? {
        if k_of(&candidate) != sd.k() {
            continue;
        }
        match marked_symbols(&candidate, sd.r()) {
            Ok(symbols) if symbols == target => matches.push(candidate),
            Ok(_) | Err(CorrError::RTooSmall { .. }) => {}
            Err(other) => return Err(other),
        }
    }
    match (matches.pop(), matches.pop()) {
        (Some(only), None) => Ok(only),
        (None, _) => Err(CorrError::Invariant("no couple matches the symbol".into())),
        _ => Err(CorrError::Invariant(
            "several couples match the symbol".into(),
        )),
    }
}

/// Attempts the even-part inversion: entry j of the merged symbol equals
/// lambda_j/2 + 2r+1-j, and the side it sits on encodes the sign at j.
/// Returns None when the symbol cannot come from an even-part couple.
fn invert_even_case(sd: &SpringerDatum, target: &SymbolPair) -> Result<Option<MarkedSymplectic>> {
    let tagged = tagged_entries(sd)?;
    let count = tagged.len();
    debug_assert_eq!(count, 2 * sd.r() + 1);
    for window in tagged.windows(2) {
        if window[0].0 == window[1].0 {
            return Ok(None);
        }
    }
    let mut parts = Vec::with_capacity(count);
    let mut signs: Vec<Sign> = Vec::with_capacity(count);
    for (j, &(value, from_a)) in (1..).zip(&tagged) {
        let part = 2 * (value - (count - j) as i64);
        if part < 0 {
            return Ok(None);
        }
        if let Some(&previous) = parts.last() {
            if part > previous {
                return Ok(None);
            }
        }
        let odd_index = j % 2 == 1;
        signs.push(if from_a == odd_index {
            Sign::Plus
        } else {
            Sign::Minus
        });
        parts.push(part);
    }
    let mut epsilon: SignMap = BTreeMap::new();
    for (&part, &sign) in parts.iter().zip(&signs) {
        if part == 0 {
            if sign == Sign::Minus {
                return Ok(None);
            }
            continue;
        }
        if *epsilon.entry(part).or_insert(sign) != sign {
            return Ok(None);
        }
    }
    let lambda = Partition::new(parts).expect("checked decreasing");
    if lambda.sum() != sd.two_n() {
        return Ok(None);
    }
    let Ok(ms) = MarkedSymplectic::new(lambda.trim(), epsilon) else {
        return Ok(None);
    };
    if k_of(&ms) != sd.k() || marked_symbols(&ms, sd.r())? != *target {
        return Ok(None);
    }
    Ok(Some(ms))
}

/// The couple parametrising the sign-tensored representation: transpose and
/// swap the two rows at the canonical row count, then invert.
pub fn sign_twist(ms: &MarkedSymplectic) -> Result<MarkedSymplectic> {
    let r = ms.default_r();
    let sd = springer_to_pair(ms, r)?;
    let twisted = SpringerDatum::new(
        sd.k(),
        sd.beta().trim().transpose(),
        sd.alpha().trim().transpose(),
        r,
    )?;
    pair_to_springer(&twisted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::{parse_sign_map, ptn};

    fn ms(lambda: &str, epsilon: &str) -> MarkedSymplectic {
        MarkedSymplectic::new(lambda.parse().unwrap(), parse_sign_map(epsilon).unwrap()).unwrap()
    }

    #[test]
    fn datum_forces_row_lengths() {
        let sd = SpringerDatum::new(0, ptn![1], ptn![1], 1).unwrap();
        assert_eq!(sd.alpha(), &ptn![1, 0]);
        assert_eq!(sd.beta(), &ptn![1]);
        assert_eq!(sd.two_n(), 4);
        let sd = SpringerDatum::new(3, ptn![], ptn![], 2).unwrap();
        assert_eq!((sd.n(), sd.m()), (4, 1));
        assert_eq!(sd.two_n(), 12);
        assert!(SpringerDatum::new(3, ptn![], ptn![], 0).is_err());
    }

    #[test]
    fn forward_examples() {
        let sd = springer_to_pair(&ms("2,2", "2:+"), 1).unwrap();
        assert_eq!((sd.k(), sd.alpha(), sd.beta()), (0, &ptn![1, 0], &ptn![1]));

        let sd = springer_to_pair(&ms("4", "4:+"), 1).unwrap();
        assert_eq!((sd.k(), sd.alpha(), sd.beta()), (0, &ptn![2, 0], &ptn![0]));

        let sd = springer_to_pair(&ms("1,1", ""), 1).unwrap();
        assert_eq!((sd.k(), sd.alpha(), sd.beta()), (0, &ptn![0, 0], &ptn![1]));

        let sd = springer_to_pair(&ms("2", "2:-"), 1).unwrap();
        assert_eq!((sd.k(), sd.alpha(), sd.beta()), (1, &ptn![0, 0], &ptn![0]));
    }

    #[test]
    fn inverse_examples() {
        let sd = SpringerDatum::new(0, ptn![2, 0], ptn![0], 1).unwrap();
        assert_eq!(pair_to_springer(&sd).unwrap(), ms("4", "4:+"));

        let sd = SpringerDatum::new(0, ptn![0, 0], ptn![1], 1).unwrap();
        assert_eq!(pair_to_springer(&sd).unwrap(), ms("1,1", ""));
    }

    #[test]
    fn round_trips_at_two_radii() {
        for two_n in [0, 2, 4, 6] {
            for couple in enumerate_couples(two_n).unwrap() {
                let base = couple.default_r().max(1);
                for r in [base, base + 1] {
                    let sd = springer_to_pair(&couple, r).unwrap();
                    assert_eq!(pair_to_springer(&sd).unwrap(), couple, "r = {r}");
                }
            }
        }
    }

    #[test]
    fn twist_example_and_involution() {
        assert_eq!(sign_twist(&ms("2", "2:+")).unwrap(), ms("1,1", ""));
        assert_eq!(sign_twist(&ms("1,1", "")).unwrap(), ms("2", "2:+"));
        for couple in enumerate_couples(6).unwrap() {
            let twisted = sign_twist(&couple).unwrap();
            assert_eq!(k_of(&twisted), k_of(&couple));
            assert_eq!(sign_twist(&twisted).unwrap(), couple);
        }
    }
}
