//! Finite fragments of the pointed-set machinery: monoid actions with a
//! distinguished point whose orbit is everything, block sequences of
//! partial functions, and the bounded subspace they generate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// A finite set with a monoid action and a basepoint whose orbit is the
/// whole set. The action law matches the crate's products:
/// `act(mul(m, n), x) = act(n, act(m, x))`.
#[derive(Debug, Clone)]
pub struct PointedMSet {
    carrier: usize,
    action: Vec<Vec<usize>>,
    basepoint: usize,
}

impl PointedMSet {
    pub fn new(
        monoid: &FiniteMonoid,
        carrier: usize,
        action: Vec<Vec<usize>>,
        basepoint: usize,
    ) -> Result<Self> {
        if action.len() != monoid.size() {
            return Err(Error::PointedSet(format!(
                "action has {} rows, monoid has {} elements",
                action.len(),
                monoid.size()
            )));
        }
        for (m, row) in action.iter().enumerate() {
            if row.len() != carrier {
                return Err(Error::PointedSet(format!("action row {m} is not length {carrier}")));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= carrier) {
                return Err(Error::PointedSet(format!("action value {v} out of range")));
            }
        }
        if basepoint >= carrier {
            return Err(Error::PointedSet(format!("basepoint {basepoint} out of range")));
        }
        for x in 0..carrier {
            if action[monoid.identity()][x] != x {
                return Err(Error::PointedSet(format!("identity must fix {x}")));
            }
        }
        for m in 0..monoid.size() {
            for n in 0..monoid.size() {
                for x in 0..carrier {
                    if action[monoid.mul(m, n)][x] != action[n][action[m][x]] {
                        return Err(Error::PointedSet(format!(
                            "action law fails at m={m}, n={n}, x={x}"
                        )));
                    }
                }
            }
        }
        let orbit: BTreeSet<usize> = (0..monoid.size()).map(|m| action[m][basepoint]).collect();
        if orbit.len() != carrier {
            return Err(Error::PointedSet(
                "the orbit of the basepoint must be the whole carrier".into(),
            ));
        }
        Ok(PointedMSet { carrier, action, basepoint })
    }

    /// The monoid acting on itself by right multiplication, based at the
    /// identity.
    pub fn regular(monoid: &FiniteMonoid) -> Self {
        let size = monoid.size();
        let action = (0..size)
            .map(|m| (0..size).map(|x| monoid.mul(x, m)).collect())
            .collect();
        PointedMSet::new(monoid, size, action, monoid.identity())
            .expect("right multiplication is a valid pointed action")
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn act(&self, m: usize, x: usize) -> usize {
        self.action[m][x]
    }
}

/// A finite partial function: sorted, disjoint `(coordinate, value)` pairs.
pub type Block = Vec<(usize, usize)>;

/// A finite list of blocks, consecutive ones separated:
/// `max(dom(f_i)) < min(dom(f_{i+1}))`.
#[derive(Debug, Clone)]
pub struct BlockSequence {
    blocks: Vec<Block>,
}

impl BlockSequence {
    /// Validates block shape against a sequence of pointed sets: the value
    /// at coordinate n must live in the carrier of `sets[n]`.
    pub fn new(blocks: Vec<Block>, sets: &[PointedMSet]) -> Result<Self> {
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Blocks(format!("block {i} is empty")));
            }
            for w in block.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::Blocks(format!("block {i} is not sorted by coordinate")));
                }
            }
            for &(coord, value) in block {
                let set = sets.get(coord).ok_or_else(|| {
                    Error::Blocks(format!("block {i} uses coordinate {coord} beyond the sets"))
                })?;
                if value >= set.carrier() {
                    return Err(Error::Blocks(format!(
                        "block {i} value {value} outside carrier at coordinate {coord}"
                    )));
                }
            }
        }
        for w in blocks.windows(2) {
            let max_prev = w[0].last().expect("nonempty").0;
            let min_next = w[1].first().expect("nonempty").0;
            if max_prev >= min_next {
                return Err(Error::Blocks(
                    "blocks must be strictly separated by domain".into(),
                ));
            }
        }
        Ok(BlockSequence { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

fn act_on_block(block: &Block, m: usize, sets: &[PointedMSet]) -> Block {
    block
        .iter()
        .map(|&(coord, value)| (coord, sets[coord].act(m, value)))
        .collect()
}

/// The depth-bounded fragment of the subspace generated by a block
/// sequence: unions of at most `depth + 1` selected blocks, each acted on
/// coordinatewise by a monoid element, with the identity used at least
/// once.
pub fn subspace_of_blocks(
    sequence: &BlockSequence,
    sets: &[PointedMSet],
    monoid: &FiniteMonoid,
    depth: usize,
) -> Result<BTreeSet<Block>> {
    for set in sets {
        if set.action.len() != monoid.size() {
            return Err(Error::PointedSet("pointed set does not match the monoid".into()));
        }
    }
    let mut out = BTreeSet::new();
    let blocks = sequence.blocks();
    // choice: (selected block index, acting element) per selected block.
    fn extend(
        blocks: &[Block],
        sets: &[PointedMSet],
        monoid: &FiniteMonoid,
        depth: usize,
        start: usize,
        used_identity: bool,
        current: &Block,
        picked: usize,
        out: &mut BTreeSet<Block>,
    ) {
        if picked > 0 && used_identity {
            out.insert(current.clone());
        }
        if picked == depth + 1 {
            return;
        }
        for i in start..blocks.len() {
            for m in 0..monoid.size() {
                let mut next = current.clone();
                next.extend(act_on_block(&blocks[i], m, sets));
                extend(
                    blocks,
                    sets,
                    monoid,
                    depth,
                    i + 1,
                    used_identity || m == monoid.identity(),
                    &next,
                    picked + 1,
                    out,
                );
            }
        }
    }
    extend(blocks, sets, monoid, depth, 0, false, &Vec::new(), 0, &mut out);
    Ok(out)
}
