use std::collections::{BTreeSet, HashMap};

use partition_core::{rat, Rat};

use crate::error::EngineError;
use crate::order::Side;
use crate::pair::{step_a, step_b, trim_trailing, BiPartition, IndexedPair};
use crate::sets::{assemble_a, assemble_b};
use crate::symbol::{merged_symbol, symbol_of};

/// Row counts and top offsets for symbols attached to an indexed pair.
///
/// Invariants: `step` > 0; each top offset is at least `step`·(rows−1) when
/// the row count is positive (`top_a` may be negative only with no A rows);
/// when used with a pair, `rows_a` ≥ n and `rows_b` ≥ m.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Params {
    pub rows_a: usize,
    pub rows_b: usize,
    pub top_a: Rat,
    pub top_b: Rat,
    pub step: Rat,
}

impl Params {
    pub fn new(
        rows_a: usize,
        rows_b: usize,
        top_a: Rat,
        top_b: Rat,
        step: Rat,
    ) -> Result<Self, EngineError> {
        let p = Params {
            rows_a,
            rows_b,
            top_a,
            top_b,
            step,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.step <= rat(0) {
            return Err(EngineError::BadParams(format!(
                "step {} not positive",
                self.step
            )));
        }
        if self.rows_a >= 1 && self.top_a < self.step * rat(self.rows_a as i64 - 1) {
            return Err(EngineError::BadParams(format!(
                "top_a {} below step*(rows_a-1) = {}",
                self.top_a,
                self.step * rat(self.rows_a as i64 - 1)
            )));
        }
        if self.rows_b >= 1 && self.top_b < self.step * rat(self.rows_b as i64 - 1) {
            return Err(EngineError::BadParams(format!(
                "top_b {} below step*(rows_b-1) = {}",
                self.top_b,
                self.step * rat(self.rows_b as i64 - 1)
            )));
        }
        Ok(())
    }

    pub fn validate_for(&self, pair: &IndexedPair) -> Result<(), EngineError> {
        self.validate()?;
        if self.rows_a < pair.n() || self.rows_b < pair.m() {
            return Err(EngineError::BadParams(format!(
                "row counts {},{} below pair lengths {},{}",
                self.rows_a,
                self.rows_b,
                pair.n(),
                pair.m()
            )));
        }
        Ok(())
    }

    /// Parameters for the residual pair after an A-side extraction.
    pub fn after_a(&self) -> Params {
        Params {
            rows_a: self.rows_a - 1,
            top_a: self.top_a - self.step,
            ..*self
        }
    }

    /// Parameters for the residual pair after a B-side extraction.
    pub fn after_b(&self) -> Params {
        Params {
            rows_b: self.rows_b - 1,
            top_b: self.top_b - self.step,
            ..*self
        }
    }
}

fn gates(pair: &IndexedPair, top_a: Rat, top_b: Rat) -> (bool, bool) {
    let a1 = rat(pair.alpha().first());
    let b1 = rat(pair.beta().first());
    if pair.order().starts_with(Side::A) {
        (a1 + top_a >= top_b, a1 + top_a <= top_b)
    } else {
        (b1 + top_b <= top_a, b1 + top_b >= top_a)
    }
}

/// Which of the two extractions the offsets allow. At least one side is
/// always allowed; both exactly on the boundary equality.
pub fn allowed_procedures(
    pair: &IndexedPair,
    params: &Params,
) -> Result<(bool, bool), EngineError> {
    if pair.n() == 0 {
        return Err(EngineError::EmptySide { side: 'a' });
    }
    if pair.m() == 0 {
        return Err(EngineError::EmptySide { side: 'b' });
    }
    params.validate_for(pair)?;
    Ok(gates(pair, params.top_a, params.top_b))
}

/// The subset of `p_set` built using only offset-allowed extractions, the
/// offsets shifting down by `step` on the used side at each level. Always
/// nonempty; pairs with an empty side yield only themselves.
pub fn p_constrained_set(
    pair: &IndexedPair,
    params: &Params,
) -> Result<BTreeSet<BiPartition>, EngineError> {
    params.validate_for(pair)?;
    let mut memo = HashMap::new();
    Ok(constrained_rec(
        pair,
        params.top_a,
        params.top_b,
        params.step,
        &mut memo,
    ))
}

fn constrained_rec(
    pair: &IndexedPair,
    top_a: Rat,
    top_b: Rat,
    step: Rat,
    memo: &mut HashMap<(IndexedPair, Rat, Rat), BTreeSet<BiPartition>>,
) -> BTreeSet<BiPartition> {
    let key_pair = trim_trailing(pair);
    let key = (key_pair, top_a, top_b);
    let core = if let Some(hit) = memo.get(&key) {
        hit.clone()
    } else {
        let t = &key.0;
        let mut out = BTreeSet::new();
        if t.n() == 0 || t.m() == 0 {
            out.insert(BiPartition::new(t.alpha().clone(), t.beta().clone()));
        } else {
            let (a_ok, b_ok) = gates(t, top_a, top_b);
            debug_assert!(a_ok || b_ok);
            if a_ok {
                let sa = step_a(t).expect("n >= 1");
                for sub in constrained_rec(&sa.residual, top_a - step, top_b, step, memo) {
                    out.insert(assemble_a(&sa, &sub, t.n(), t.m()));
                }
            }
            if b_ok {
                let sb = step_b(t).expect("m >= 1");
                for sub in constrained_rec(&sb.residual, top_a, top_b - step, step, memo) {
                    out.insert(assemble_b(&sb, &sub, t.n(), t.m()));
                }
            }
        }
        memo.insert(key.clone(), out.clone());
        out
    };
    core.iter()
        .map(|e| {
            BiPartition::new(
                e.nu.padded(pair.n()).expect("padding only grows"),
                e.mu.padded(pair.m()).expect("padding only grows"),
            )
        })
        .collect()
}

/// The element obtained by preferring the extraction on `flavor` whenever it
/// is allowed, falling back to the other side otherwise.
pub fn canonical_element(
    pair: &IndexedPair,
    params: &Params,
    flavor: Side,
) -> Result<BiPartition, EngineError> {
    Ok(canonical_trace(pair, params, flavor)?.0)
}

/// One peeled value of the canonical chain, or a leftover symbol entry from
/// the base pair (side `None`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TraceEntry {
    pub side: Option<Side>,
    pub value: Rat,
}

/// Canonical element plus the sequence of values it contributes to the
/// merged symbol: each extraction yields its sum plus the current top
/// offset; the base pair contributes its own symbol entries.
pub fn canonical_trace(
    pair: &IndexedPair,
    params: &Params,
    flavor: Side,
) -> Result<(BiPartition, Vec<TraceEntry>), EngineError> {
    params.validate_for(pair)?;
    let mut trace = Vec::with_capacity(params.rows_a + params.rows_b);
    let element = trace_rec(pair, *params, flavor, &mut trace)?;
    Ok((element, trace))
}

fn trace_rec(
    pair: &IndexedPair,
    params: Params,
    flavor: Side,
    trace: &mut Vec<TraceEntry>,
) -> Result<BiPartition, EngineError> {
    if pair.n() == 0 || pair.m() == 0 {
        let base = BiPartition::new(pair.alpha().clone(), pair.beta().clone());
        let sym = symbol_of(&base, &params)?;
        for v in merged_symbol(&sym).entries() {
            trace.push(TraceEntry {
                side: None,
                value: *v,
            });
        }
        return Ok(base);
    }
    let (a_ok, b_ok) = gates(pair, params.top_a, params.top_b);
    let use_a = match flavor {
        Side::A => a_ok,
        Side::B => !b_ok,
    };
    if use_a {
        let sa = step_a(pair)?;
        trace.push(TraceEntry {
            side: Some(Side::A),
            value: rat(sa.extracted) + params.top_a,
        });
        let sub = trace_rec(&sa.residual, params.after_a(), flavor, trace)?;
        Ok(assemble_a(&sa, &sub, pair.n(), pair.m()))
    } else {
        let sb = step_b(pair)?;
        trace.push(TraceEntry {
            side: Some(Side::B),
            value: rat(sb.extracted) + params.top_b,
        });
        let sub = trace_rec(&sb.residual, params.after_b(), flavor, trace)?;
        Ok(assemble_b(&sb, &sub, pair.n(), pair.m()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::Partition;

    fn pair(alpha: &[i64], beta: &[i64], word: &str) -> IndexedPair {
        IndexedPair::new(
            Partition::new(alpha.to_vec()).unwrap(),
            Partition::new(beta.to_vec()).unwrap(),
            word.parse().unwrap(),
        )
        .unwrap()
    }

    fn bp(nu: &[i64], mu: &[i64]) -> BiPartition {
        BiPartition::new(
            Partition::new(nu.to_vec()).unwrap(),
            Partition::new(mu.to_vec()).unwrap(),
        )
    }

    fn params(rows_a: usize, rows_b: usize, top_a: i64, top_b: i64, step: i64) -> Params {
        Params::new(rows_a, rows_b, rat(top_a), rat(top_b), rat(step)).unwrap()
    }

    #[test]
    fn params_invariants() {
        assert!(Params::new(2, 1, rat(2), rat(1), rat(2)).is_ok());
        assert!(Params::new(2, 1, rat(1), rat(1), rat(2)).is_err());
        assert!(Params::new(0, 1, rat(-3), rat(0), rat(2)).is_ok());
        assert!(Params::new(1, 1, rat(0), rat(0), rat(0)).is_err());
        let p = params(2, 2, 4, 4, 1);
        assert!(p.validate_for(&pair(&[1, 0], &[1], "ABA")).is_ok());
        assert!(p.validate_for(&pair(&[1, 0, 0], &[1], "ABAA")).is_err());
    }

    #[test]
    fn gate_examples() {
        let p = pair(&[1, 0], &[1], "ABA");
        assert_eq!(
            allowed_procedures(&p, &params(2, 1, 2, 1, 2)).unwrap(),
            (true, false)
        );

        let q = pair(&[0], &[1], "AB");
        assert_eq!(
            allowed_procedures(&q, &params(1, 1, 0, 0, 1)).unwrap(),
            (true, true)
        );

        assert!(allowed_procedures(&pair(&[1], &[], "A"), &params(1, 0, 0, 0, 1)).is_err());
    }

    #[test]
    fn constrained_set_examples() {
        let set = p_constrained_set(&pair(&[1], &[1, 1], "ABB"), &params(1, 2, 2, 2, 1)).unwrap();
        assert_eq!(set, [bp(&[2], &[1, 0])].into());

        let set = p_constrained_set(&pair(&[3, 1], &[], "AA"), &params(2, 0, 4, 0, 2)).unwrap();
        assert_eq!(set, [bp(&[3, 1], &[])].into());

        let set = p_constrained_set(&pair(&[1, 0], &[1], "ABA"), &params(2, 1, 2, 1, 2)).unwrap();
        assert_eq!(set, [bp(&[2, 0], &[0])].into());
    }

    #[test]
    fn canonical_falls_back_when_flavor_blocked() {
        let p = pair(&[1], &[1, 1], "ABB");
        let prm = params(1, 2, 2, 2, 1);
        assert_eq!(
            canonical_element(&p, &prm, Side::B).unwrap(),
            bp(&[2], &[1, 0])
        );
        assert_eq!(
            canonical_element(&p, &prm, Side::A).unwrap(),
            bp(&[2], &[1, 0])
        );

        let base = pair(&[2, 1], &[], "AA");
        let prm0 = params(2, 0, 2, 0, 1);
        assert_eq!(
            canonical_element(&base, &prm0, Side::A).unwrap(),
            bp(&[2, 1], &[])
        );
        assert_eq!(
            canonical_element(&base, &prm0, Side::B).unwrap(),
            bp(&[2, 1], &[])
        );
    }
}
