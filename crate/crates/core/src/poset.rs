//! Finite posets and lattices.
//!
//! A poset is stored as the full reflexive-transitive `leq` matrix over
//! indices `0..n`. Levels follow the cardinality convention: the level of an
//! element is the maximal number of elements in a chain ending at it, so
//! minimal elements sit on level 1 and a "chain of length k" has k elements.

use crate::error::{Error, Result};
use crate::transform::Transformation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>,
}

/// A lattice refinement of a poset: meet and join tables indexed pairwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    base: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
}

/// A linearly ordered subset, stored ascending in the poset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    elements: Vec<usize>,
}

impl FinitePoset {
    /// The poset whose order is the reflexive-transitive closure of the
    /// given cover pairs `(lo, hi)`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        for &(lo, hi) in covers {
            for index in [lo, hi] {
                if index >= n {
                    return Err(Error::CoverIndex { index, n });
                }
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(lo, hi) in covers {
            leq[lo * n + hi] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        // A cycle shows up as a violation of antisymmetry.
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    let cycle: Vec<usize> =
                        (0..n).filter(|&k| leq[i * n + k] && leq[k * n + i]).collect();
                    return Err(Error::CoverCycle(cycle));
                }
            }
        }
        Ok(FinitePoset { n, leq })
    }

    /// Wraps a full relation matrix, validating the poset axioms.
    pub fn from_leq(n: usize, leq: Vec<bool>) -> Result<Self> {
        assert_eq!(leq.len(), n * n, "relation matrix must be n*n");
        let p = FinitePoset { n, leq };
        for i in 0..n {
            if !p.leq(i, i) {
                return Err(Error::InvalidSpec(format!("relation not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && p.leq(i, j) && p.leq(j, i) {
                    return Err(Error::InvalidSpec(format!(
                        "relation not antisymmetric at ({i}, {j})"
                    )));
                }
                for k in 0..n {
                    if p.leq(i, j) && p.leq(j, k) && !p.leq(i, k) {
                        return Err(Error::InvalidSpec(format!(
                            "relation not transitive at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_covers(n, &covers).expect("chain covers are acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        FinitePoset::from_covers(n, &[]).expect("no covers")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Cover pairs `(lo, hi)`: `lo < hi` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for lo in 0..self.n {
            for hi in 0..self.n {
                if self.lt(lo, hi)
                    && !(0..self.n).any(|k| self.lt(lo, k) && self.lt(k, hi))
                {
                    out.push((lo, hi));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.leq(y, x)).collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.n).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| !(0..self.n).any(|y| self.lt(y, x)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| !(0..self.n).any(|y| self.lt(x, y)))
            .collect()
    }

    /// Levels of all elements: `level(x)` is the maximal cardinality of a
    /// chain with maximal element x, so minimal elements have level 1.
    pub fn levels(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| self.down_set(x).len());
        let mut level = vec![1usize; self.n];
        for &x in &order {
            for y in 0..self.n {
                if self.lt(y, x) {
                    level[x] = level[x].max(level[y] + 1);
                }
            }
        }
        level
    }

    pub fn level(&self, x: usize) -> Result<usize> {
        if x >= self.n {
            return Err(Error::Index { index: x, n: self.n });
        }
        Ok(self.levels()[x])
    }

    /// Height: the maximal level, i.e. the cardinality of a longest chain.
    pub fn height(&self) -> usize {
        self.levels().into_iter().max().unwrap_or(0)
    }

    /// All inclusion-maximal chains. Each is a saturated chain from a
    /// minimal element to a maximal element.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let covers = self.covers();
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(lo, hi) in &covers {
            above[lo].push(hi);
        }
        let maximal = self.maximal_elements();
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        fn walk(
            x: usize,
            above: &[Vec<usize>],
            maximal: &[usize],
            stack: &mut Vec<usize>,
            out: &mut Vec<Chain>,
        ) {
            stack.push(x);
            if maximal.contains(&x) {
                out.push(Chain { elements: stack.clone() });
            }
            for &y in &above[x] {
                walk(y, above, maximal, stack, out);
            }
            stack.pop();
        }
        for x in self.minimal_elements() {
            walk(x, &above, &maximal, &mut stack, &mut out);
        }
        out
    }

    /// Some incomparable pair, if one exists.
    pub fn incomparable_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.comparable(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// True iff every two elements are comparable. The empty poset counts
    /// as linear.
    pub fn is_linear(&self) -> bool {
        self.incomparable_pair().is_none()
    }

    /// Number of strictly comparable unordered pairs.
    pub fn comparable_pair_count(&self) -> usize {
        let mut count = 0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.comparable(i, j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// One maximum-length chain ending at `z`, ascending.
    fn maximum_chain_to(&self, z: usize, levels: &[usize]) -> Vec<usize> {
        let mut chain = vec![z];
        let mut cur = z;
        while levels[cur] > 1 {
            let pred = (0..self.n)
                .find(|&p| self.lt(p, cur) && levels[p] == levels[cur] - 1)
                .expect("an element of level m > 1 has a predecessor of level m - 1");
            chain.push(pred);
            cur = pred;
        }
        chain.reverse();
        chain
    }

    /// Given incomparable `y, z` below `x`, produces incomparable `y' <= y`
    /// and `z' <= z` with equal levels. The constructed pair is taken from a
    /// maximum chain under the deeper element and verified; if verification
    /// ever failed we would fall back to exhaustive search.
    pub fn equal_level_refinement(&self, x: usize, y: usize, z: usize) -> Result<(usize, usize)> {
        for index in [x, y, z] {
            if index >= self.n {
                return Err(Error::Index { index, n: self.n });
            }
        }
        if !self.leq(y, x) || !self.leq(z, x) || self.comparable(y, z) {
            return Err(Error::RefinementPrecondition { x, y, z });
        }
        let levels = self.levels();
        if levels[y] == levels[z] {
            return Ok((y, z));
        }
        let (shallow, deep, swapped) = if levels[y] < levels[z] {
            (y, z, false)
        } else {
            (z, y, true)
        };
        let chain = self.maximum_chain_to(deep, &levels);
        let candidate = chain[levels[shallow] - 1];
        debug_assert_eq!(levels[candidate], levels[shallow]);
        if !self.comparable(shallow, candidate) {
            return Ok(if swapped { (candidate, shallow) } else { (shallow, candidate) });
        }
        // Exhaustive fallback; not expected to be reachable.
        for a in self.down_set(y) {
            for &b in &self.down_set(z) {
                if levels[a] == levels[b] && !self.comparable(a, b) {
                    return Ok((a, b));
                }
            }
        }
        Err(Error::RefinementPrecondition { x, y, z })
    }

    /// Lattice refinement, or the first pair lacking a meet or join.
    pub fn lattice(&self) -> Result<FiniteLattice> {
        if self.n == 0 {
            return Err(Error::NotALattice { witness: None });
        }
        let n = self.n;
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let lower: Vec<usize> =
                    (0..n).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&k| self.leq(k, m)));
                let upper: Vec<usize> =
                    (0..n).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&m| upper.iter().all(|&k| self.leq(m, k)));
                match (glb, lub) {
                    (Some(m), Some(u)) => {
                        meet[i * n + j] = m;
                        join[i * n + j] = u;
                    }
                    _ => return Err(Error::NotALattice { witness: Some((i, j)) }),
                }
            }
        }
        Ok(FiniteLattice { base: self.clone(), meet, join })
    }

    pub fn is_lattice(&self) -> bool {
        self.lattice().is_ok()
    }
}

impl FiniteLattice {
    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.n
    }

    pub fn is_empty(&self) -> bool {
        self.base.n == 0
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.base.n + j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.base.n + j]
    }

    pub fn minimum(&self) -> usize {
        (0..self.base.n).fold(0, |acc, i| self.meet(acc, i))
    }

    pub fn maximum(&self) -> usize {
        (0..self.base.n).fold(0, |acc, i| self.join(acc, i))
    }

    /// The retraction onto a maximal chain C: `x -> max { c in C : c <= x }`.
    ///
    /// Well defined because a maximal chain contains the minimum. The result
    /// is regressive, order-preserving, fixes C pointwise and maps onto C.
    pub fn chain_retraction(&self, chain: &Chain) -> Result<Transformation> {
        chain.validate_maximal(&self.base)?;
        let mut map = Vec::with_capacity(self.base.n);
        for x in 0..self.base.n {
            let c = chain
                .elements
                .iter()
                .rev()
                .copied()
                .find(|&c| self.base.leq(c, x))
                .expect("maximal chain contains the minimum");
            map.push(c);
        }
        Ok(Transformation::new(map))
    }
}

impl Chain {
    /// Builds a chain from a set of pairwise comparable elements; sorts them
    /// ascending in the poset order.
    pub fn new(poset: &FinitePoset, mut elements: Vec<usize>) -> Result<Self> {
        for &x in &elements {
            if x >= poset.len() {
                return Err(Error::Index { index: x, n: poset.len() });
            }
        }
        elements.sort_unstable();
        elements.dedup();
        for i in 0..elements.len() {
            for j in (i + 1)..elements.len() {
                if !poset.comparable(elements[i], elements[j]) {
                    return Err(Error::NotAChain);
                }
            }
        }
        elements.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if poset.leq(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(Chain { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn validate_maximal(&self, poset: &FinitePoset) -> Result<()> {
        for &x in &self.elements {
            if x >= poset.len() {
                return Err(Error::Index { index: x, n: poset.len() });
            }
        }
        for p in 0..poset.len() {
            if self.elements.contains(&p) {
                continue;
            }
            if self.elements.iter().all(|&c| poset.comparable(p, c)) {
                return Err(Error::ChainNotMaximal(p));
            }
        }
        if self.elements.is_empty() && !poset.is_empty() {
            return Err(Error::NotAChain);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FinitePoset {
        FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn single_point() {
        let p = FinitePoset::from_covers(1, &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.is_linear());
        assert_eq!(p.level(0).unwrap(), 1);
    }

    #[test]
    fn chain_closure_forces_transitivity() {
        let p = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.level(2).unwrap(), 3);
        assert_eq!(p.maximal_chains().len(), 1);
        assert!(p.is_linear());
    }

    #[test]
    fn diamond_is_a_lattice() {
        let p = diamond();
        // Invariants by direct matrix check.
        for i in 0..4 {
            assert!(p.leq(i, i));
            for j in 0..4 {
                for k in 0..4 {
                    if p.leq(i, j) && p.leq(j, k) {
                        assert!(p.leq(i, k));
                    }
                }
                if i != j {
                    assert!(!(p.leq(i, j) && p.leq(j, i)));
                }
            }
        }
        let l = p.lattice().unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(p.level(3).unwrap(), 3);
        let chains = p.maximal_chains();
        let sets: Vec<&[usize]> = chains.iter().map(|c| c.elements()).collect();
        assert_eq!(sets, vec![&[0, 1, 3][..], &[0, 2, 3][..]]);
        assert_eq!(p.incomparable_pair(), Some((1, 2)));
    }

    #[test]
    fn cycle_is_rejected() {
        let err = FinitePoset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        match err {
            Error::CoverCycle(cycle) => assert!(!cycle.is_empty()),
            other => panic!("expected cycle error, got {other}"),
        }
    }

    #[test]
    fn out_of_range_cover_is_rejected() {
        assert!(FinitePoset::from_covers(2, &[(0, 5)]).is_err());
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        let p = FinitePoset::antichain(2);
        match p.lattice() {
            Err(Error::NotALattice { witness: Some((0, 1)) }) => {}
            other => panic!("expected witness (0,1), got {other:?}"),
        }
        let chains = p.maximal_chains();
        assert_eq!(chains.len(), 2);
        assert!(!p.is_linear());
    }

    #[test]
    fn chain_poset_is_a_lattice_with_min_max() {
        let p = FinitePoset::chain(4);
        let l = p.lattice().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(l.meet(i, j), i.min(j));
                assert_eq!(l.join(i, j), i.max(j));
            }
        }
        assert!(p.is_linear());
        assert_eq!(l.minimum(), 0);
        assert_eq!(l.maximum(), 3);
    }

    #[test]
    fn empty_poset_is_linear() {
        let p = FinitePoset::from_covers(0, &[]).unwrap();
        assert!(p.is_linear());
        assert!(p.lattice().is_err());
    }

    #[test]
    fn equal_level_refinement_diamond() {
        let p = diamond();
        assert_eq!(p.equal_level_refinement(3, 1, 2).unwrap(), (1, 2));
    }

    #[test]
    fn equal_level_refinement_unequal_levels() {
        // 0 < 1 < 3 and 2 < 3: elements 1 and 2 are incomparable below 3
        // with levels 2 and 1.
        let p = FinitePoset::from_covers(4, &[(0, 1), (1, 3), (2, 3)]).unwrap();
        let (a, b) = p.equal_level_refinement(3, 1, 2).unwrap();
        let levels = p.levels();
        assert_eq!(levels[a], levels[b]);
        assert!(!p.comparable(a, b));
        assert!(p.leq(a, 1) && p.leq(b, 2));
    }

    #[test]
    fn equal_level_refinement_rejects_bad_input() {
        let p = diamond();
        // 1 and 3 are comparable.
        assert!(p.equal_level_refinement(3, 1, 3).is_err());
    }

    #[test]
    fn chain_retraction_on_diamond() {
        let p = diamond();
        let l = p.lattice().unwrap();
        let c = Chain::new(&p, vec![0, 1, 3]).unwrap();
        let phi = l.chain_retraction(&c).unwrap();
        assert_eq!(phi.images(), &[0, 1, 0, 3]);
        assert!(phi.is_regressive(&p));
        assert!(phi.is_order_preserving(&p));
        // Identity on the chain itself.
        for &cx in c.elements() {
            assert_eq!(phi.apply(cx), cx);
        }
    }

    #[test]
    fn chain_retraction_identity_on_full_chain() {
        let p = FinitePoset::chain(3);
        let l = p.lattice().unwrap();
        let c = Chain::new(&p, vec![0, 1, 2]).unwrap();
        let phi = l.chain_retraction(&c).unwrap();
        assert!(phi.is_identity());
    }

    #[test]
    fn chain_retraction_rejects_non_maximal_chain() {
        let p = diamond();
        let l = p.lattice().unwrap();
        let c = Chain::new(&p, vec![0, 1]).unwrap();
        assert!(l.chain_retraction(&c).is_err());
    }

    #[test]
    fn levels_of_mixed_poset() {
        // 0 < 1 < 3, 2 < 3.
        let p = FinitePoset::from_covers(4, &[(0, 1), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.levels(), vec![1, 2, 1, 3]);
        assert_eq!(p.minimal_elements(), vec![0, 2]);
        assert_eq!(p.maximal_elements(), vec![3]);
    }
}
