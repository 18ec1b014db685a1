//! Finite Coxeter groups from permutation realizations, and their 0-Hecke
//! monoids.
//!
//! A realization carries involutive permutation generators whose pairwise
//! product orders are validated against the Coxeter matrix at build time.
//! The 0-Hecke generator acts on the group by length-increasing right
//! multiplication: `pi_i(w) = w s_i` when that is longer, else `w`. With
//! this crate's left-to-right products, the word labels of the closure
//! agree with the usual word calculus, e.g. `mul(pi_a, pi_b)` is the
//! element labelled "ab".

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::transform::Transformation;

pub const DEFAULT_GROUP_BUDGET: usize = 200_000;

/// Supported named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterType {
    /// Symmetric group on n+1 points, adjacent transpositions.
    A(usize),
    /// Signed permutations of n coordinates.
    B(usize),
    /// Dihedral group of the m-gon.
    I2(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let n = entries.len();
        let mut flat = vec![0usize; n * n];
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::CoxeterMatrix(format!("row {i} is not length {n}")));
            }
            for (j, &m) in row.iter().enumerate() {
                flat[i * n + j] = m;
            }
        }
        for i in 0..n {
            if flat[i * n + i] != 1 {
                return Err(Error::CoxeterMatrix(format!("diagonal entry {i} must be 1")));
            }
            for j in 0..n {
                if flat[i * n + j] != flat[j * n + i] {
                    return Err(Error::CoxeterMatrix(format!("not symmetric at ({i}, {j})")));
                }
                if i != j && flat[i * n + j] < 2 {
                    return Err(Error::CoxeterMatrix(format!(
                        "off-diagonal entry ({i}, {j}) must be at least 2"
                    )));
                }
            }
        }
        Ok(CoxeterMatrix { n, entries: flat })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }
}

/// Involutive permutation generators realizing a Coxeter matrix.
#[derive(Debug, Clone)]
pub struct CoxeterRealization {
    degree: usize,
    gens: Vec<Transformation>,
    matrix: CoxeterMatrix,
}

impl CoxeterRealization {
    /// Validates involutivity and all pairwise product orders.
    pub fn new(degree: usize, gens: Vec<Transformation>, matrix: CoxeterMatrix) -> Result<Self> {
        if gens.len() != matrix.rank() {
            return Err(Error::CoxeterMatrix(format!(
                "{} generators for a rank-{} matrix",
                gens.len(),
                matrix.rank()
            )));
        }
        for (index, g) in gens.iter().enumerate() {
            if g.degree() != degree || !g.is_permutation() {
                return Err(Error::UnsupportedCoxeter(format!(
                    "generator {index} is not a permutation of {degree} points"
                )));
            }
            if !g.then(g).is_identity() {
                return Err(Error::NotInvolution { index });
            }
        }
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                let product = gens[i].then(&gens[j]);
                let expected = matrix.entry(i, j);
                let actual = permutation_order(&product, 4 * expected);
                if actual != expected {
                    return Err(Error::CoxeterOrder { i, j, expected, actual });
                }
            }
        }
        Ok(CoxeterRealization { degree, gens, matrix })
    }

    /// The bundled realization of a named family.
    pub fn standard(kind: CoxeterType) -> Result<Self> {
        match kind {
            CoxeterType::A(n) => {
                if n < 1 {
                    return Err(Error::UnsupportedCoxeter("type A needs n >= 1".into()));
                }
                let degree = n + 1;
                let gens: Vec<Transformation> =
                    (0..n).map(|i| swap(degree, i, i + 1)).collect();
                let matrix = banded_matrix(n, |i, j| if j == i + 1 { 3 } else { 2 });
                CoxeterRealization::new(degree, gens, CoxeterMatrix::new(matrix)?)
            }
            CoxeterType::B(n) => {
                if n < 2 {
                    return Err(Error::UnsupportedCoxeter("type B needs n >= 2".into()));
                }
                // Points 0..n are +1..+n, points n..2n are -1..-n.
                let degree = 2 * n;
                let mut gens = vec![swap(degree, 0, n)];
                for i in 1..n {
                    let mut map: Vec<usize> = (0..degree).collect();
                    map.swap(i - 1, i);
                    map.swap(n + i - 1, n + i);
                    gens.push(Transformation::new(map));
                }
                let matrix = banded_matrix(n, |i, j| {
                    if i == 0 && j == 1 {
                        4
                    } else if j == i + 1 {
                        3
                    } else {
                        2
                    }
                });
                CoxeterRealization::new(degree, gens, CoxeterMatrix::new(matrix)?)
            }
            CoxeterType::I2(m) => {
                if m < 3 {
                    return Err(Error::UnsupportedCoxeter("type I2 needs m >= 3".into()));
                }
                let r1 = Transformation::new((0..m).map(|i| (m - i) % m).collect());
                let r2 = Transformation::new((0..m).map(|i| (m + 1 - i) % m).collect());
                let matrix = CoxeterMatrix::new(vec![vec![1, m], vec![m, 1]])?;
                CoxeterRealization::new(m, vec![r1, r2], matrix)
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Transformation] {
        &self.gens
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    /// Enumerates the group with word lengths, within an element budget.
    pub fn group(&self) -> Result<CoxeterGroupTable> {
        self.group_with_budget(DEFAULT_GROUP_BUDGET)
    }

    pub fn group_with_budget(&self, budget: usize) -> Result<CoxeterGroupTable> {
        let identity = Transformation::identity(self.degree);
        let mut elements = vec![identity.clone()];
        let mut length = vec![0usize];
        let mut index: HashMap<Transformation, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in &self.gens {
                let next = elements[cursor].then(g);
                if !index.contains_key(&next) {
                    if elements.len() >= budget {
                        return Err(Error::ClosureBudget { budget, reached: elements.len() });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    length.push(length[cursor] + 1);
                }
            }
            cursor += 1;
        }
        // Multiplying by a generator changes the length by exactly one.
        for w in 0..elements.len() {
            for g in &self.gens {
                let l = length[index[&elements[w].then(g)]];
                assert!(
                    l == length[w] + 1 || l + 1 == length[w],
                    "length must change by one under a generator"
                );
            }
        }
        Ok(CoxeterGroupTable {
            realization: self.clone(),
            elements,
            length,
            index,
        })
    }
}

fn swap(degree: usize, a: usize, b: usize) -> Transformation {
    let mut map: Vec<usize> = (0..degree).collect();
    map.swap(a, b);
    Transformation::new(map)
}

fn banded_matrix(n: usize, entry: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        1
                    } else if i < j {
                        entry(i, j)
                    } else {
                        entry(j, i)
                    }
                })
                .collect()
        })
        .collect()
}

fn permutation_order(p: &Transformation, cap: usize) -> usize {
    let mut power = p.clone();
    let mut order = 1;
    while !power.is_identity() && order <= cap {
        power = power.then(p);
        order += 1;
    }
    order
}

/// A finite Coxeter group: elements as permutations, with word lengths.
#[derive(Debug, Clone)]
pub struct CoxeterGroupTable {
    realization: CoxeterRealization,
    elements: Vec<Transformation>,
    length: Vec<usize>,
    index: HashMap<Transformation, usize>,
}

impl CoxeterGroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.realization.gens.len()
    }

    pub fn length(&self, w: usize) -> usize {
        self.length[w]
    }

    pub fn longest_length(&self) -> usize {
        self.length.iter().copied().max().unwrap_or(0)
    }

    pub fn realization(&self) -> &CoxeterRealization {
        &self.realization
    }

    /// The 0-Hecke monoid: closure of the length-sensitive generator
    /// actions `w -> w s_i` (when longer). Asserts idempotence, the braid
    /// relations as map equalities, |H| = |W|, and R- and J-triviality.
    pub fn hecke_monoid(&self) -> Result<FiniteMonoid> {
        let size = self.order();
        let mut pis = Vec::with_capacity(self.rank());
        for g in &self.realization.gens {
            let map: Vec<usize> = (0..size)
                .map(|w| {
                    let moved = self.index[&self.elements[w].then(g)];
                    if self.length[moved] > self.length[w] {
                        moved
                    } else {
                        w
                    }
                })
                .collect();
            pis.push(Transformation::new(map));
        }
        let (monoid, _) = FiniteMonoid::closure_from_generators(
            size,
            &pis,
            crate::monoid::DEFAULT_CLOSURE_BUDGET,
        )?;
        assert_eq!(monoid.size(), size, "|H0(W)| must equal |W|");
        let gens = monoid.generators().to_vec();
        for (i, &gi) in gens.iter().enumerate() {
            assert_eq!(monoid.mul(gi, gi), gi, "hecke generators are idempotent");
            for (j, &gj) in gens.iter().enumerate().skip(i + 1) {
                let m = self.realization.matrix.entry(i, j);
                let left = alternating_product(&monoid, gi, gj, m);
                let right = alternating_product(&monoid, gj, gi, m);
                assert_eq!(left, right, "braid relation of order {m} must hold");
            }
        }
        assert!(monoid.is_r_trivial(), "0-Hecke monoids are R-trivial");
        assert!(monoid.is_j_trivial(), "0-Hecke monoids are J-trivial");
        Ok(monoid)
    }
}

fn alternating_product(m: &FiniteMonoid, a: usize, b: usize, count: usize) -> usize {
    let mut acc = m.identity();
    for step in 0..count {
        acc = m.mul(acc, if step % 2 == 0 { a } else { b });
    }
    acc
}

/// Consistency report for the word-extension description of coset
/// containment in a 0-Hecke monoid: `uM` contains `vM` owners exactly when
/// some word for v extends a word for u on the right.
#[derive(Debug, Clone)]
pub struct InitialSubwordReport {
    pub words_checked: usize,
    pub pairs_checked: usize,
    pub counterexamples: Vec<(usize, usize)>,
}

/// Brute-forces all generator words up to `max_len` over the monoid's
/// generators and compares coset containment `x M <= y M` with "y is an
/// initial subword of x".
pub fn initial_subword_report(
    monoid: &FiniteMonoid,
    max_len: usize,
) -> Result<InitialSubwordReport> {
    let gens = monoid.generators();
    let word_count: u128 = {
        let g = gens.len() as u128;
        let mut total: u128 = 0;
        let mut level: u128 = 1;
        for _ in 0..=max_len {
            total += level;
            level = level.saturating_mul(g);
        }
        total
    };
    if word_count > 1_000_000 {
        return Err(Error::WordBudget { words: word_count });
    }
    let size = monoid.size();
    let mut prefix_related = vec![false; size * size];
    // Walk the word tree; every ancestor of a word is one of its prefixes.
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut evals: Vec<usize> = vec![monoid.identity()];
    let mut words_checked = 0usize;
    while let Some(word) = words.pop() {
        let value = evals.pop().expect("parallel stacks");
        words_checked += 1;
        // Mark (word, prefix) pairs via the chain of ancestors.
        let mut prefix_value = monoid.identity();
        prefix_related[value * size + prefix_value] = true;
        for &g in &word {
            prefix_value = monoid.mul(prefix_value, g);
            prefix_related[value * size + prefix_value] = true;
        }
        if word.len() < max_len {
            for &g in gens {
                let mut next = word.clone();
                next.push(g);
                words.push(next);
                evals.push(monoid.mul(value, g));
            }
        }
    }
    let mut counterexamples = Vec::new();
    let mut pairs_checked = 0usize;
    for x in 0..size {
        let xm = monoid.left_coset(x)?;
        for y in 0..size {
            let ym = monoid.left_coset(y)?;
            pairs_checked += 1;
            let subset = xm.iter().all(|e| ym.contains(e));
            if subset != prefix_related[x * size + y] {
                counterexamples.push((x, y));
            }
        }
    }
    Ok(InitialSubwordReport { words_checked, pairs_checked, counterexamples })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_is_order_two() {
        let r = CoxeterRealization::standard(CoxeterType::A(1)).unwrap();
        let w = r.group().unwrap();
        assert_eq!(w.order(), 2);
        let h = w.hecke_monoid().unwrap();
        assert_eq!(h.size(), 2);
        assert!(h.is_coset_order_linear());
    }

    #[test]
    fn group_orders() {
        let cases = [
            (CoxeterType::A(2), 6),
            (CoxeterType::A(3), 24),
            (CoxeterType::B(2), 8),
            (CoxeterType::B(3), 48),
            (CoxeterType::I2(4), 8),
            (CoxeterType::I2(6), 12),
        ];
        for (kind, expected) in cases {
            let w = CoxeterRealization::standard(kind).unwrap().group().unwrap();
            assert_eq!(w.order(), expected, "{kind:?}");
        }
    }

    #[test]
    fn b2_matches_i2_4() {
        let b2 = CoxeterRealization::standard(CoxeterType::B(2)).unwrap();
        let i24 = CoxeterRealization::standard(CoxeterType::I2(4)).unwrap();
        assert_eq!(b2.group().unwrap().order(), i24.group().unwrap().order());
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(CoxeterRealization::standard(CoxeterType::A(0)).is_err());
        assert!(CoxeterRealization::standard(CoxeterType::B(1)).is_err());
        assert!(CoxeterRealization::standard(CoxeterType::I2(2)).is_err());
    }

    #[test]
    fn custom_realization_validates_orders() {
        // Two commuting transpositions but a matrix demanding order 3.
        let gens = vec![
            Transformation::new(vec![1, 0, 2, 3]),
            Transformation::new(vec![0, 1, 3, 2]),
        ];
        let matrix = CoxeterMatrix::new(vec![vec![1, 3], vec![3, 1]]).unwrap();
        let err = CoxeterRealization::new(4, gens, matrix).unwrap_err();
        assert!(matches!(err, Error::CoxeterOrder { expected: 3, actual: 2, .. }));
    }

    #[test]
    fn non_involution_is_rejected() {
        let gens = vec![Transformation::new(vec![1, 2, 0])];
        let matrix = CoxeterMatrix::new(vec![vec![1]]).unwrap();
        let err = CoxeterRealization::new(3, gens, matrix).unwrap_err();
        assert!(matches!(err, Error::NotInvolution { index: 0 }));
    }

    #[test]
    fn a2_hecke_has_the_expected_coset_table() {
        let w = CoxeterRealization::standard(CoxeterType::A(2))
            .unwrap()
            .group()
            .unwrap();
        assert_eq!(w.longest_length(), 3);
        let h = w.hecke_monoid().unwrap();
        assert_eq!(h.size(), 6);
        let by_label = |label: &str| -> usize {
            (0..h.size()).find(|&e| h.label(e) == label).expect(label)
        };
        let coset_labels = |m: usize| -> Vec<String> {
            h.left_coset(m)
                .unwrap()
                .into_iter()
                .map(|e| h.display_label(e))
                .collect()
        };
        assert_eq!(coset_labels(by_label("")), vec!["id", "a", "b", "ab", "ba", "aba"]);
        assert_eq!(coset_labels(by_label("a")), vec!["a", "ab", "aba"]);
        assert_eq!(coset_labels(by_label("b")), vec!["b", "ba", "aba"]);
        assert_eq!(coset_labels(by_label("ab")), vec!["ab", "aba"]);
        assert_eq!(coset_labels(by_label("ba")), vec!["ba", "aba"]);
        assert_eq!(coset_labels(by_label("aba")), vec!["aba"]);
        assert!(!h.is_coset_order_linear());
    }

    #[test]
    fn a2_representation_poset_has_the_diagram_shape() {
        let h = CoxeterRealization::standard(CoxeterType::A(2))
            .unwrap()
            .group()
            .unwrap()
            .hecke_monoid()
            .unwrap();
        let (poset, _) = h.regressive_representation().unwrap();
        // Element order: id, a, b, ab, ba, aba. Covers run upward from the
        // longest word to the identity in two incomparable branches.
        let expected = vec![(1, 0), (2, 0), (3, 1), (4, 2), (5, 3), (5, 4)];
        assert_eq!(poset.covers(), expected);
    }

    #[test]
    fn a2_initial_subword_consistency() {
        let h = CoxeterRealization::standard(CoxeterType::A(2))
            .unwrap()
            .group()
            .unwrap()
            .hecke_monoid()
            .unwrap();
        let report = initial_subword_report(&h, 3).unwrap();
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.pairs_checked, 36);
    }

    #[test]
    fn a3_initial_subword_consistency() {
        let h = CoxeterRealization::standard(CoxeterType::A(3))
            .unwrap()
            .group()
            .unwrap()
            .hecke_monoid()
            .unwrap();
        assert_eq!(h.size(), 24);
        let report = initial_subword_report(&h, 6).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(!h.is_coset_order_linear());
    }
}
