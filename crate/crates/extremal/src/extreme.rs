use pab_engine::{p_constrained_set, Params};
use partition_core::rat;
use springer_corr::{k_of, pair_to_springer, sign_twist, MarkedSymplectic, SpringerDatum};

use crate::bar::bar;
use crate::error::{ExtremalError, Result};
use crate::table::block_pair;

/// Offsets placing the step-2 staircase tops of a block datum on its rows.
pub(crate) fn block_params(sd: &SpringerDatum) -> Result<Params> {
    Ok(Params::new(
        sd.n(),
        sd.m(),
        rat(sd.a_top()),
        rat(sd.b_top()),
        rat(2),
    )?)
}

/// The same staircase offsets halved, with the step halved to match.
pub(crate) fn half_params(sd: &SpringerDatum) -> Result<Params> {
    Ok(Params::new(
        sd.n(),
        sd.m(),
        rat(sd.a_top()) / rat(2),
        rat(sd.b_top()) / rat(2),
        rat(1) / rat(2),
    )?)
}

/// The couple read back from the constrained extraction set of the block
/// rows, which must be a singleton.
pub(crate) fn max_via_extraction(ms: &MarkedSymplectic) -> Result<MarkedSymplectic> {
    let (sd, pair) = block_pair(ms)?;
    let set = p_constrained_set(&pair, &block_params(&sd)?)?;
    if set.len() != 1 {
        return Err(ExtremalError::Invariant(format!(
            "constrained set of {ms} has {} elements, expected one",
            set.len()
        )));
    }
    let element = set
        .into_iter()
        .next()
        .expect("nonempty by the length check");
    let datum = SpringerDatum::new(sd.k(), element.nu.trim(), element.mu.trim(), sd.r())?;
    Ok(pair_to_springer(&datum)?)
}

/// The unique dominance-greatest couple with nonzero multiplicity under
/// `ms`, whose parts must all be even. Checked against the peeling recursion
/// and for block preservation on every call.
pub fn lambda_max(ms: &MarkedSymplectic) -> Result<MarkedSymplectic> {
    if !ms.lambda().all_parts_even() {
        return Err(ExtremalError::OddPartUnsupported);
    }
    let maximum = max_via_extraction(ms)?;
    if k_of(&maximum) != k_of(ms) {
        return Err(ExtremalError::Invariant(format!(
            "block index changes from {} to {} across the maximum",
            k_of(ms),
            k_of(&maximum)
        )));
    }
    let peeled = bar(ms)?;
    if peeled != maximum {
        return Err(ExtremalError::Invariant(format!(
            "peeling gives {peeled} but extraction gives {maximum}"
        )));
    }
    Ok(maximum)
}

/// The unique dominance-least couple with nonzero multiplicity under `ms`,
/// reached by twisting the maximum. The halved-offset extraction at step 1/2
/// must reproduce the step-2 set, and twisting back must return the maximum.
pub fn lambda_min(ms: &MarkedSymplectic) -> Result<MarkedSymplectic> {
    let maximum = lambda_max(ms)?;
    let minimum = sign_twist(&maximum)?;

    let (sd, pair) = block_pair(ms)?;
    let whole = block_params(&sd)?;
    let half = half_params(&sd)?;
    if p_constrained_set(&pair, &half)? != p_constrained_set(&pair, &whole)? {
        return Err(ExtremalError::Invariant(format!(
            "halved-offset extraction set differs at {ms}"
        )));
    }
    if sign_twist(&minimum)? != maximum {
        return Err(ExtremalError::Invariant(format!(
            "twist fails to return to the maximum at {ms}"
        )));
    }
    Ok(minimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_core::{parse_sign_map, Partition, SignMap};

    fn ms(lambda: &str, epsilon: &str) -> MarkedSymplectic {
        MarkedSymplectic::new(lambda.parse().unwrap(), parse_sign_map(epsilon).unwrap()).unwrap()
    }

    fn empty() -> MarkedSymplectic {
        MarkedSymplectic::new(Partition::new(vec![]).unwrap(), SignMap::new()).unwrap()
    }

    #[test]
    fn maximum_examples() {
        assert_eq!(lambda_max(&ms("2,2", "2:+")).unwrap(), ms("4", "4:+"));
        assert_eq!(lambda_max(&ms("2", "2:+")).unwrap(), ms("2", "2:+"));
        assert_eq!(lambda_max(&ms("2,2", "2:-")).unwrap(), ms("2,2", "2:-"));
        assert_eq!(lambda_max(&empty()).unwrap(), empty());
    }

    #[test]
    fn minimum_examples() {
        assert_eq!(lambda_min(&ms("2", "2:+")).unwrap(), ms("1,1", ""));
        let minimum = lambda_min(&ms("2,2", "2:+")).unwrap();
        assert_eq!(minimum, ms("1,1,1,1", ""));
        assert_eq!(
            sign_twist(&minimum).unwrap(),
            lambda_max(&ms("2,2", "2:+")).unwrap()
        );
    }

    #[test]
    fn odd_parts_are_rejected() {
        assert_eq!(
            lambda_max(&ms("1,1", "")),
            Err(ExtremalError::OddPartUnsupported)
        );
        assert_eq!(
            lambda_min(&ms("3,3", "")),
            Err(ExtremalError::OddPartUnsupported)
        );
    }
}
