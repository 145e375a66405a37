use partition_core::{arith_progression, rat, Rat, RatSeq};

use crate::constrained::{canonical_element, p_constrained_set, Params};
use crate::error::EngineError;
use crate::order::Side;
use crate::pair::{BiPartition, IndexedPair};

/// Two rows of nonnegative entries, each decreasing by at least `step`
/// between consecutive entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Symbol {
    row_a: RatSeq,
    row_b: RatSeq,
    step: Rat,
}

impl Symbol {
    pub fn new(row_a: RatSeq, row_b: RatSeq, step: Rat) -> Result<Self, EngineError> {
        if step <= rat(0) {
            return Err(EngineError::BadParams(format!("step {step} not positive")));
        }
        for row in [&row_a, &row_b] {
            for w in row.entries().windows(2) {
                if w[0] < w[1] + step {
                    return Err(EngineError::Invariant(format!(
                        "row ({row}) is not {step}-strictly decreasing"
                    )));
                }
            }
            if let Some(last) = row.entries().last() {
                if *last < rat(0) {
                    return Err(EngineError::Invariant(format!(
                        "row ({row}) has a negative entry"
                    )));
                }
            }
        }
        Ok(Symbol { row_a, row_b, step })
    }

    pub fn row_a(&self) -> &RatSeq {
        &self.row_a
    }

    pub fn row_b(&self) -> &RatSeq {
        &self.row_b
    }

    pub fn step(&self) -> Rat {
        self.step
    }
}

/// The symbol of a pair: each row is the zero-padded partition plus the
/// decreasing offset progression of its side.
pub fn symbol_of(bp: &BiPartition, params: &Params) -> Result<Symbol, EngineError> {
    params.validate()?;
    if bp.nu.len() > params.rows_a || bp.mu.len() > params.rows_b {
        return Err(EngineError::BadParams(format!(
            "pair lengths {},{} exceed row counts {},{}",
            bp.nu.len(),
            bp.mu.len(),
            params.rows_a,
            params.rows_b
        )));
    }
    let row =
        |p: &partition_core::Partition, rows: usize, top: Rat| -> Result<RatSeq, EngineError> {
            let prog = arith_progression(
                top,
                top + params.step - params.step * rat(rows as i64),
                params.step,
            )?;
            Ok(p.padded(rows)?.to_ratseq().pointwise_add(&prog)?)
        };
    Symbol::new(
        row(&bp.nu, params.rows_a, params.top_a)?,
        row(&bp.mu, params.rows_b, params.top_b)?,
        params.step,
    )
}

/// Sorted merge of the two rows.
pub fn merged_symbol(sym: &Symbol) -> RatSeq {
    sym.row_a().sorted_union(sym.row_b())
}

/// The merged symbol shared by every element of the constrained set.
/// Well-definedness is asserted by evaluating all elements.
pub fn p_bracket(pair: &IndexedPair, params: &Params) -> Result<RatSeq, EngineError> {
    params.validate_for(pair)?;
    if pair.n() == 0 || pair.m() == 0 {
        let base = BiPartition::new(pair.alpha().clone(), pair.beta().clone());
        return Ok(merged_symbol(&symbol_of(&base, params)?));
    }
    let set = p_constrained_set(pair, params)?;
    let mut common: Option<RatSeq> = None;
    for e in &set {
        let merged = merged_symbol(&symbol_of(e, params)?);
        match &common {
            None => common = Some(merged),
            Some(seen) if *seen == merged => {}
            Some(seen) => {
                return Err(EngineError::Invariant(format!(
                    "constrained elements disagree on the merged symbol: ({seen}) vs ({merged})"
                )))
            }
        }
    }
    common.ok_or_else(|| EngineError::Invariant("constrained set is empty".into()))
}

/// Number of B-row values among the k largest entries of the merged symbol
/// of the canonical B-flavored element, ties resolved toward the B row (the
/// maximal split).
pub fn b_count(pair: &IndexedPair, params: &Params, k: usize) -> Result<usize, EngineError> {
    params.validate_for(pair)?;
    let max = params.rows_a + params.rows_b;
    if k < 1 || k > max {
        return Err(EngineError::KOutOfRange { k, max });
    }
    let canon = canonical_element(pair, params, Side::B)?;
    let sym = symbol_of(&canon, params)?;
    let mut tagged: Vec<(Rat, Side)> = sym
        .row_a()
        .entries()
        .iter()
        .map(|&v| (v, Side::A))
        .chain(sym.row_b().entries().iter().map(|&v| (v, Side::B)))
        .collect();
    // Decreasing by value; B ahead of A on equal values.
    tagged.sort_by(|(v1, s1), (v2, s2)| v2.cmp(v1).then(s2.cmp(s1)));
    Ok(tagged[..k].iter().filter(|(_, s)| *s == Side::B).count())
}
