use partition_core::Partition;

use crate::error::EngineError;
use crate::order::{ShuffleOrder, Side};

/// A pair of partitions of fixed lengths together with a total order on
/// their joint index set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IndexedPair {
    alpha: Partition,
    beta: Partition,
    order: ShuffleOrder,
}

impl IndexedPair {
    /// Invariant checked: the word has exactly `alpha.len()` A's and
    /// `beta.len()` B's.
    pub fn new(
        alpha: Partition,
        beta: Partition,
        order: ShuffleOrder,
    ) -> Result<Self, EngineError> {
        let (wa, wb) = (order.count(Side::A), order.count(Side::B));
        if wa != alpha.len() || wb != beta.len() {
            return Err(EngineError::OrderMismatch {
                word_a: wa,
                word_b: wb,
                len_a: alpha.len(),
                len_b: beta.len(),
            });
        }
        Ok(IndexedPair { alpha, beta, order })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn order(&self) -> &ShuffleOrder {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn m(&self) -> usize {
        self.beta.len()
    }

    pub fn side(&self, side: Side) -> &Partition {
        match side {
            Side::A => &self.alpha,
            Side::B => &self.beta,
        }
    }

    /// The same pair with the two rows relabeled.
    pub fn swapped_sides(&self) -> IndexedPair {
        IndexedPair {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            order: self.order.mirrored(),
        }
    }
}

/// An extracted pair (ν, μ); lengths track the ambient (n, m).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BiPartition {
    pub nu: Partition,
    pub mu: Partition,
}

impl BiPartition {
    pub fn new(nu: Partition, mu: Partition) -> Self {
        BiPartition { nu, mu }
    }
}

/// Result of one extraction step: the removed alternating chain, its sum,
/// and the pair left on the complementary indices with the induced order.
#[derive(Clone, Debug)]
pub struct StepOutcome {
    pub extracted: i64,
    pub residual: IndexedPair,
    /// 1-based A-side indices of the chain, increasing.
    pub chain_a: Vec<usize>,
    /// 1-based B-side indices of the chain, increasing.
    pub chain_b: Vec<usize>,
}

fn walk(pair: &IndexedPair, start: Side) -> StepOutcome {
    let positions = |side: Side| -> Vec<usize> {
        pair.order()
            .word()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == side)
            .map(|(p, _)| p)
            .collect()
    };
    let pos_a = positions(Side::A);
    let pos_b = positions(Side::B);

    let mut chain_a = Vec::new();
    let mut chain_b = Vec::new();
    let mut used = Vec::new();
    let mut extracted = 0i64;

    let mut side = start;
    let mut cursor: Option<usize> = None;
    loop {
        let pos = match side {
            Side::A => &pos_a,
            Side::B => &pos_b,
        };
        // Smallest index on `side` strictly after the cursor.
        let next = match cursor {
            None => {
                if pos.is_empty() {
                    None
                } else {
                    Some(0)
                }
            }
            Some(c) => pos.iter().position(|&p| p > c),
        };
        let Some(i) = next else { break };
        match side {
            Side::A => {
                chain_a.push(i + 1);
                extracted += pair.alpha().get(i);
            }
            Side::B => {
                chain_b.push(i + 1);
                extracted += pair.beta().get(i);
            }
        }
        cursor = Some(pos[i]);
        used.push(pos[i]);
        side = side.other();
    }

    let keep = |p: &Partition, chain: &[usize]| {
        Partition::new(
            p.parts()
                .iter()
                .enumerate()
                .filter(|(i, _)| !chain.contains(&(i + 1)))
                .map(|(_, &v)| v)
                .collect(),
        )
        .expect("subsequence of a partition is a partition")
    };
    let residual = IndexedPair::new(
        keep(pair.alpha(), &chain_a),
        keep(pair.beta(), &chain_b),
        pair.order().remove_positions(&used),
    )
    .expect("counts match by construction");

    StepOutcome {
        extracted,
        residual,
        chain_a,
        chain_b,
    }
}

/// Extraction starting on the A side: indices a1=1, b1 the least B above
/// (a1,A), a2 the least A above (b1,B), and so on; the extracted value is the
/// alternating sum α_{a1}+β_{b1}+α_{a2}+...
pub fn step_a(pair: &IndexedPair) -> Result<StepOutcome, EngineError> {
    if pair.n() == 0 {
        return Err(EngineError::EmptySide { side: 'a' });
    }
    Ok(walk(pair, Side::A))
}

/// Mirror of `step_a`, starting on the B side.
pub fn step_b(pair: &IndexedPair) -> Result<StepOutcome, EngineError> {
    if pair.m() == 0 {
        return Err(EngineError::EmptySide { side: 'b' });
    }
    Ok(walk(pair, Side::B))
}

/// Removes the first entry of the chosen side and its letter from the word.
/// For side A the first A must precede every B (the context in which the
/// shortened pair is used), so that the induced order is the plain shift.
pub fn drop_first(pair: &IndexedPair, side: Side) -> Result<IndexedPair, EngineError> {
    match side {
        Side::A => {
            if pair.n() == 0 {
                return Err(EngineError::EmptySide { side: 'a' });
            }
            if pair.m() >= 1 && !pair.order().starts_with(Side::A) {
                return Err(EngineError::LeadingANotMinimal);
            }
            let alpha =
                Partition::new(pair.alpha().parts()[1..].to_vec()).expect("tail of a partition");
            IndexedPair::new(
                alpha,
                pair.beta().clone(),
                pair.order().remove_first(Side::A),
            )
        }
        Side::B => {
            if pair.m() == 0 {
                return Err(EngineError::EmptySide { side: 'b' });
            }
            let beta =
                Partition::new(pair.beta().parts()[1..].to_vec()).expect("tail of a partition");
            IndexedPair::new(
                pair.alpha().clone(),
                beta,
                pair.order().remove_first(Side::B),
            )
        }
    }
}

/// Extends a pair by zero entries under a larger order word.
///
/// Checks that the new word restricted to the first n A's and first m B's is
/// the old word, and that every added A-index sits above the last old
/// B-index and vice versa. Under those hypotheses the recursive pair sets of
/// the padded pair are exactly the zero-padded sets of the original.
pub fn pad_pair(
    pair: &IndexedPair,
    n_new: usize,
    m_new: usize,
    order_ext: &ShuffleOrder,
) -> Result<IndexedPair, EngineError> {
    let (n, m) = (pair.n(), pair.m());
    if n_new < n || m_new < m {
        return Err(EngineError::BadPad(format!(
            "target lengths {n_new},{m_new} smaller than {n},{m}"
        )));
    }
    if order_ext.count(Side::A) != n_new || order_ext.count(Side::B) != m_new {
        return Err(EngineError::BadPad(format!(
            "extended word {order_ext} does not have {n_new} A's and {m_new} B's"
        )));
    }
    let mut drop = Vec::new();
    for i in (n + 1)..=n_new {
        drop.push(order_ext.position(Side::A, i).expect("counted above"));
    }
    for j in (m + 1)..=m_new {
        drop.push(order_ext.position(Side::B, j).expect("counted above"));
    }
    if &order_ext.remove_positions(&drop) != pair.order() {
        return Err(EngineError::BadPad(format!(
            "extended word {order_ext} does not restrict to {}",
            pair.order()
        )));
    }
    if n_new > n && m >= 1 {
        let added_a = order_ext.position(Side::A, n + 1).expect("counted above");
        let last_b = order_ext.position(Side::B, m).expect("counted above");
        if added_a < last_b {
            return Err(EngineError::BadPad(
                "an added A-index sits below an original B-index".into(),
            ));
        }
    }
    if m_new > m && n >= 1 {
        let added_b = order_ext.position(Side::B, m + 1).expect("counted above");
        let last_a = order_ext.position(Side::A, n).expect("counted above");
        if added_b < last_a {
            return Err(EngineError::BadPad(
                "an added B-index sits below an original A-index".into(),
            ));
        }
    }
    let alpha = pair.alpha().padded(n_new)?;
    let beta = pair.beta().padded(m_new)?;
    IndexedPair::new(alpha, beta, order_ext.clone())
}

/// Normal form for memoisation: repeatedly strip a trailing word letter
/// whose entry is zero. Each strip is an inverse `pad_pair`, so the
/// recursive sets of the stripped pair are the originals with the padding
/// removed.
pub(crate) fn trim_trailing(pair: &IndexedPair) -> IndexedPair {
    let mut alpha = pair.alpha().parts().to_vec();
    let mut beta = pair.beta().parts().to_vec();
    let mut word = pair.order().word().to_vec();
    loop {
        match word.last() {
            Some(Side::A) if alpha.last() == Some(&0) => {
                alpha.pop();
                word.pop();
            }
            Some(Side::B) if beta.last() == Some(&0) => {
                beta.pop();
                word.pop();
            }
            _ => break,
        }
    }
    IndexedPair::new(
        Partition::new(alpha).expect("prefix of a partition"),
        Partition::new(beta).expect("prefix of a partition"),
        ShuffleOrder::new(word),
    )
    .expect("letters removed together with entries")
}
