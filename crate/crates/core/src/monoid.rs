//! Finite monoids as Cayley tables, and their left-coset orders.
//!
//! `mul(a, b)` always means "a first, then b"; when elements are
//! transformations, `mul(a, b)` is the map `x -> b(a(x))`. The left coset
//! of `m` is `mM = { mul(m, x) : x in M }` and X(M) is the set of distinct
//! left cosets ordered by inclusion.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::transform::Transformation;

/// Default cap on closure size when building from generators.
pub const DEFAULT_CLOSURE_BUDGET: usize = 200_000;

/// Above this size, associativity of an imported table is validated on a
/// deterministic sample of triples instead of all of them.
const FULL_ASSOCIATIVITY_LIMIT: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    mul: Vec<usize>,
    identity: usize,
    gens: Vec<usize>,
    labels: Vec<String>,
}

/// The distinct left cosets of a monoid, ordered by inclusion.
///
/// Cosets are sorted by descending size and then by their smallest owner,
/// so the full coset `1M` comes first. `owners[c]` lists the elements `m`
/// with `mM` equal to coset `c`; owners partition the monoid into
/// R-classes.
#[derive(Debug, Clone)]
pub struct CosetPoset {
    cosets: Vec<Vec<usize>>,
    owners: Vec<Vec<usize>>,
    element_coset: Vec<usize>,
    order: FinitePoset,
}

impl FiniteMonoid {
    /// Breadth-first closure of transformation generators under
    /// composition, starting from the identity map. Elements are
    /// deduplicated by map equality and labelled by shortlex-minimal
    /// generator words.
    pub fn closure_from_generators(
        domain_size: usize,
        generators: &[Transformation],
        budget: usize,
    ) -> Result<(FiniteMonoid, Vec<Transformation>)> {
        for g in generators {
            assert_eq!(g.degree(), domain_size, "generator degree mismatch");
        }
        let mut elements: Vec<Transformation> = vec![Transformation::identity(domain_size)];
        let mut index: HashMap<Transformation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut cursor = 0;
        while cursor < elements.len() {
            for g in generators {
                let image = elements[cursor].then(g);
                if !index.contains_key(&image) {
                    if elements.len() >= budget {
                        return Err(Error::ClosureBudget { budget, reached: elements.len() });
                    }
                    index.insert(image.clone(), elements.len());
                    elements.push(image);
                }
            }
            cursor += 1;
        }
        let size = elements.len();
        let mut mul = vec![0usize; size * size];
        for a in 0..size {
            for b in 0..size {
                mul[a * size + b] = index[&elements[a].then(&elements[b])];
            }
        }
        // Keep the given generators (dedup by element, first occurrence).
        let mut gens: Vec<usize> = Vec::new();
        for g in generators {
            let e = index[g];
            if !gens.contains(&e) {
                gens.push(e);
            }
        }
        let labels = word_labels(size, &mul, 0, &gens)
            .ok_or(Error::GeneratorsIncomplete { missing: 0 })
            .map(|words| render_labels(&words, gens.len()))?;
        let monoid = FiniteMonoid { size, mul, identity: 0, gens, labels };
        Ok((monoid, elements))
    }

    /// Monoid on an explicit, composition-closed list of transformations.
    /// The list is sorted for a canonical element order; generators are the
    /// irreducible elements, topped up if they do not generate.
    pub fn from_transformation_list(
        maps: &[Transformation],
    ) -> Result<(FiniteMonoid, Vec<Transformation>)> {
        let mut elements: Vec<Transformation> = maps.to_vec();
        elements.sort();
        elements.dedup();
        let size = elements.len();
        let identity = elements
            .iter()
            .position(|t| t.is_identity())
            .ok_or(Error::NoIdentity)?;
        let mut index: HashMap<&Transformation, usize> = HashMap::new();
        for (i, t) in elements.iter().enumerate() {
            index.insert(t, i);
        }
        let mut mul = vec![0usize; size * size];
        for a in 0..size {
            for b in 0..size {
                let product = elements[a].then(&elements[b]);
                match index.get(&product) {
                    Some(&p) => mul[a * size + b] = p,
                    None => return Err(Error::NotClosed { a, b }),
                }
            }
        }
        let (gens, labels) = derive_generators(size, &mul, identity);
        let monoid = FiniteMonoid { size, mul, identity, gens, labels };
        Ok((monoid, elements))
    }

    /// Monoid from an explicit Cayley table. Associativity is validated in
    /// full up to 300 elements and on a deterministic sample above that.
    /// When `gens` is given it must generate; otherwise generators are
    /// derived from the irreducible elements.
    pub fn from_cayley(
        table: &[Vec<usize>],
        identity: usize,
        gens: Option<Vec<usize>>,
    ) -> Result<FiniteMonoid> {
        let size = table.len();
        if identity >= size {
            return Err(Error::Index { index: identity, n: size });
        }
        let mut mul = vec![0usize; size * size];
        for (i, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::TableShape(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(Error::Index { index: v, n: size });
                }
                mul[i * size + j] = v;
            }
        }
        for a in 0..size {
            if mul[identity * size + a] != a || mul[a * size + identity] != a {
                return Err(Error::IdentityLaw { element: a });
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let left = mul[mul[a * size + b] * size + c];
            let right = mul[a * size + mul[b * size + c]];
            if left != right {
                return Err(Error::NotAssociative { a, b, c });
            }
            Ok(())
        };
        if size <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..size {
                for b in 0..size {
                    for c in 0..size {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // Deterministic LCG sample.
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..100_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % size;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = (state >> 33) as usize % size;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let c = (state >> 33) as usize % size;
                check(a, b, c)?;
            }
        }
        let (gens, labels) = match gens {
            Some(gens) => {
                for &g in &gens {
                    if g >= size {
                        return Err(Error::Index { index: g, n: size });
                    }
                }
                let words = word_labels(size, &mul, identity, &gens).ok_or_else(|| {
                    let reachable = reachable(size, &mul, identity, &gens);
                    let missing = (0..size).find(|&e| !reachable[e]).unwrap_or(0);
                    Error::GeneratorsIncomplete { missing }
                })?;
                let labels = render_labels(&words, gens.len());
                (gens, labels)
            }
            None => derive_generators(size, &mul, identity),
        };
        Ok(FiniteMonoid { size, mul, identity, gens, labels })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    /// Label for display; the identity's empty word prints as "id".
    pub fn display_label(&self, e: usize) -> String {
        if self.labels[e].is_empty() {
            "id".to_string()
        } else {
            self.labels[e].clone()
        }
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// The left coset `mM`, sorted.
    pub fn left_coset(&self, m: usize) -> Result<Vec<usize>> {
        if m >= self.size {
            return Err(Error::Index { index: m, n: self.size });
        }
        let mut coset: Vec<usize> = (0..self.size).map(|x| self.mul(m, x)).collect();
        coset.sort_unstable();
        coset.dedup();
        Ok(coset)
    }

    /// The inclusion order on the distinct left cosets.
    pub fn coset_poset(&self) -> CosetPoset {
        let mut coset_ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        let mut owners: Vec<Vec<usize>> = Vec::new();
        let mut element_coset = vec![0usize; self.size];
        for m in 0..self.size {
            let coset = self.left_coset(m).expect("m in range");
            let id = *coset_ids.entry(coset.clone()).or_insert_with(|| {
                cosets.push(coset);
                owners.push(Vec::new());
                cosets.len() - 1
            });
            owners[id].push(m);
            element_coset[m] = id;
        }
        // Canonical coset order: larger cosets first, ties by least owner.
        let mut perm: Vec<usize> = (0..cosets.len()).collect();
        perm.sort_by_key(|&c| (usize::MAX - cosets[c].len(), owners[c][0]));
        let mut rank = vec![0usize; cosets.len()];
        for (new, &old) in perm.iter().enumerate() {
            rank[old] = new;
        }
        let cosets: Vec<Vec<usize>> = perm.iter().map(|&old| cosets[old].clone()).collect();
        let owners: Vec<Vec<usize>> = perm.iter().map(|&old| owners[old].clone()).collect();
        for slot in element_coset.iter_mut() {
            *slot = rank[*slot];
        }
        let k = cosets.len();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            for j in 0..k {
                leq[i * k + j] = subset(&cosets[i], &cosets[j]);
            }
        }
        let order = FinitePoset::from_leq(k, leq)
            .expect("inclusion on distinct sets is a partial order");
        CosetPoset { cosets, owners, element_coset, order }
    }

    /// True iff X(M) is linear; otherwise a witness pair of elements whose
    /// cosets are incomparable.
    pub fn coset_order_witness(&self) -> Option<(usize, usize)> {
        let x = self.coset_poset();
        x.incomparable_cosets().map(|(i, j)| (x.owners[i][0], x.owners[j][0]))
    }

    pub fn is_coset_order_linear(&self) -> bool {
        self.coset_order_witness().is_none()
    }

    /// R-classes: blocks of elements with equal left cosets, sorted by
    /// least member.
    pub fn r_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = self.coset_poset().owners;
        classes.sort_by_key(|c| c[0]);
        classes
    }

    pub fn is_r_trivial(&self) -> bool {
        self.r_classes().iter().all(|c| c.len() == 1)
    }

    /// Almost R-trivial: every element of a non-singleton R-class is a
    /// right zero (`xm = m` for all `x`).
    pub fn is_almost_r_trivial(&self) -> bool {
        for class in self.r_classes() {
            if class.len() > 1 {
                for &m in &class {
                    if (0..self.size).any(|x| self.mul(x, m) != m) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// J-trivial: MxM = MyM implies x = y. Two-sided cosets are computed by
    /// closing {x} under one-sided multiplication by generators.
    pub fn is_j_trivial(&self) -> bool {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for x in 0..self.size {
            let coset = self.two_sided_coset(x);
            if let Some(&other) = seen.get(&coset) {
                if other != x {
                    return false;
                }
            }
            seen.insert(coset, x);
        }
        true
    }

    fn two_sided_coset(&self, x: usize) -> Vec<usize> {
        let mut member = vec![false; self.size];
        member[x] = true;
        let mut queue = vec![x];
        while let Some(e) = queue.pop() {
            for &g in &self.gens {
                for product in [self.mul(g, e), self.mul(e, g)] {
                    if !member[product] {
                        member[product] = true;
                        queue.push(product);
                    }
                }
            }
        }
        (0..self.size).filter(|&e| member[e]).collect()
    }

    /// Faithful representation of an R-trivial monoid by regressive maps on
    /// the poset of its elements under coset inclusion: `m` acts as
    /// `x -> xm`. The action is a homomorphism for this crate's left-to-
    /// right products, is faithful (the identity is sent to `m`), and each
    /// map is regressive because `(xm)M` is contained in `xM`.
    pub fn regressive_representation(&self) -> Result<(FinitePoset, Vec<Transformation>)> {
        if !self.is_r_trivial() {
            return Err(Error::NotRTrivial);
        }
        let cosets: Vec<Vec<usize>> = (0..self.size)
            .map(|m| self.left_coset(m).expect("in range"))
            .collect();
        let n = self.size;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = subset(&cosets[x], &cosets[y]);
            }
        }
        let poset = FinitePoset::from_leq(n, leq).expect("antisymmetric by R-triviality");
        let maps: Vec<Transformation> = (0..n)
            .map(|m| Transformation::new((0..n).map(|x| self.mul(x, m)).collect()))
            .collect();
        Ok((poset, maps))
    }
}

impl CosetPoset {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn owners(&self) -> &[Vec<usize>] {
        &self.owners
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.element_coset[element]
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn is_linear(&self) -> bool {
        self.order.is_linear()
    }

    pub fn incomparable_cosets(&self) -> Option<(usize, usize)> {
        self.order.incomparable_pair()
    }
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let mut it = b.iter();
    'outer: for &x in a {
        for &y in it.by_ref() {
            match y.cmp(&x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn reachable(size: usize, mul: &[usize], identity: usize, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; size];
    seen[identity] = true;
    let mut queue = vec![identity];
    while let Some(e) = queue.pop() {
        for &g in gens {
            let next = mul[e * size + g];
            if !seen[next] {
                seen[next] = true;
                queue.push(next);
            }
        }
    }
    seen
}

/// Shortlex-minimal generator word per element, as generator positions;
/// None if the generators do not reach every element.
fn word_labels(
    size: usize,
    mul: &[usize],
    identity: usize,
    gens: &[usize],
) -> Option<Vec<Vec<usize>>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; size];
    words[identity] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(identity);
    while let Some(e) = queue.pop_front() {
        let base = words[e].clone().expect("queued elements are labelled");
        for (pos, &g) in gens.iter().enumerate() {
            let next = mul[e * size + g];
            if words[next].is_none() {
                let mut w = base.clone();
                w.push(pos);
                words[next] = Some(w);
                queue.push_back(next);
            }
        }
    }
    words.into_iter().collect()
}

fn generator_letter(pos: usize, gen_count: usize) -> String {
    if gen_count <= 26 {
        ((b'a' + pos as u8) as char).to_string()
    } else {
        format!("g{pos}")
    }
}

fn render_labels(words: &[Vec<usize>], gen_count: usize) -> Vec<String> {
    words
        .iter()
        .map(|w| {
            let letters: Vec<String> =
                w.iter().map(|&p| generator_letter(p, gen_count)).collect();
            if gen_count <= 26 {
                letters.concat()
            } else {
                letters.join(".")
            }
        })
        .collect()
}

/// Irreducible elements (not a product of two elements other than
/// themselves), topped up with least-index uncovered elements until they
/// generate. Returns the generators and the word labels they induce.
fn derive_generators(size: usize, mul: &[usize], identity: usize) -> (Vec<usize>, Vec<String>) {
    let mut reducible = vec![false; size];
    for a in 0..size {
        for b in 0..size {
            let p = mul[a * size + b];
            if a != p && b != p {
                reducible[p] = true;
            }
        }
    }
    let mut gens: Vec<usize> =
        (0..size).filter(|&e| e != identity && !reducible[e]).collect();
    loop {
        let seen = reachable(size, mul, identity, &gens);
        match (0..size).find(|&e| !seen[e]) {
            Some(missing) => {
                gens.push(missing);
                gens.sort_unstable();
            }
            None => break,
        }
    }
    let words = word_labels(size, mul, identity, &gens).expect("generators cover by construction");
    let labels = render_labels(&words, gens.len());
    (gens, labels)
}
