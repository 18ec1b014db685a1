//! Enumeration of finite posets up to isomorphism.
//!
//! Posets are generated by repeatedly adjoining a new maximal element above
//! an order ideal of a smaller poset; every isomorphism class arises this
//! way because removing a maximal element leaves a poset and its strict
//! down-set is an ideal. Classes are deduplicated by a canonical form: the
//! minimal relation-matrix encoding over all vertex orderings compatible
//! with the (level, down-degree, up-degree) partition.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Default cap on the enumeration size; canonicalization is exponential in
/// the worst case and sizes beyond this are not desk scale.
pub const DEFAULT_SIZE_BOUND: usize = 7;

/// Canonical key of a poset under isomorphism; equal keys iff isomorphic.
/// Supports n <= 11 (bit matrix packed into u128).
pub fn canonical_key(poset: &FinitePoset) -> u128 {
    let n = poset.len();
    assert!(n * n <= 128, "canonical_key supports n <= 11");
    if n == 0 {
        return 0;
    }
    let levels = poset.levels();
    let invariant: Vec<(usize, usize, usize)> = (0..n)
        .map(|x| (levels[x], poset.down_set(x).len(), poset.up_set(x).len()))
        .collect();

    // Group vertices by invariant; orderings permute only within groups.
    let mut classes: Vec<(usize, usize, usize)> = invariant.clone();
    classes.sort_unstable();
    classes.dedup();
    let groups: Vec<Vec<usize>> = classes
        .iter()
        .map(|inv| (0..n).filter(|&x| invariant[x] == *inv).collect())
        .collect();

    let mut best: Option<u128> = None;
    let mut order: Vec<usize> = Vec::with_capacity(n);
    permute_groups(poset, &groups, 0, &mut order, &mut best);
    best.expect("at least one ordering")
}

fn permute_groups(
    poset: &FinitePoset,
    groups: &[Vec<usize>],
    depth: usize,
    order: &mut Vec<usize>,
    best: &mut Option<u128>,
) {
    if depth == groups.len() {
        let n = poset.len();
        let mut key: u128 = 0;
        for i in 0..n {
            for j in 0..n {
                key <<= 1;
                if poset.leq(order[i], order[j]) {
                    key |= 1;
                }
            }
        }
        if best.is_none_or(|b| key < b) {
            *best = Some(key);
        }
        return;
    }
    let group = groups[depth].clone();
    permutations(&group, &mut Vec::new(), &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_groups(poset, groups, depth + 1, order, best);
        order.truncate(len);
    });
}

fn permutations(items: &[usize], prefix: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if prefix.len() == items.len() {
        f(prefix);
        return;
    }
    for &x in items {
        if !prefix.contains(&x) {
            prefix.push(x);
            permutations(items, prefix, f);
            prefix.pop();
        }
    }
}

/// Order ideals (down-closed subsets) of a poset, as bit masks.
fn ideals(poset: &FinitePoset) -> Vec<u32> {
    let n = poset.len();
    let mut out = Vec::new();
    'mask: for mask in 0..(1u32 << n) {
        for x in 0..n {
            if mask & (1 << x) != 0 {
                for y in 0..n {
                    if poset.lt(y, x) && mask & (1 << y) == 0 {
                        continue 'mask;
                    }
                }
            }
        }
        out.push(mask);
    }
    out
}

/// Extends a poset by a new maximal element above the ideal `mask`.
fn extend(poset: &FinitePoset, mask: u32) -> FinitePoset {
    let n = poset.len();
    let m = n + 1;
    let mut leq = vec![false; m * m];
    for i in 0..n {
        for j in 0..n {
            leq[i * m + j] = poset.leq(i, j);
        }
    }
    leq[n * m + n] = true;
    for x in 0..n {
        if mask & (1 << x) != 0 {
            leq[x * m + n] = true;
        }
    }
    FinitePoset::from_leq(m, leq).expect("extension preserves the axioms")
}

/// One representative per isomorphism class of posets on `n` points,
/// optionally restricted to lattices, using the default size bound.
pub fn enumerate_posets(n: usize, lattices_only: bool) -> Result<Vec<FinitePoset>> {
    enumerate_posets_bounded(n, lattices_only, DEFAULT_SIZE_BOUND)
}

/// As [`enumerate_posets`] with an explicit size bound.
pub fn enumerate_posets_bounded(
    n: usize,
    lattices_only: bool,
    bound: usize,
) -> Result<Vec<FinitePoset>> {
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    if n == 0 {
        let empty = FinitePoset::from_covers(0, &[])?;
        return Ok(if lattices_only { Vec::new() } else { vec![empty] });
    }
    let mut current = vec![FinitePoset::from_covers(1, &[])?];
    for _ in 1..n {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next = Vec::new();
        for p in &current {
            for mask in ideals(p) {
                let q = extend(p, mask);
                if seen.insert(canonical_key(&q)) {
                    next.push(q);
                }
            }
        }
        current = next;
    }
    let mut keyed: Vec<(u128, FinitePoset)> = current
        .into_iter()
        .filter(|p| !lattices_only || p.is_lattice())
        .map(|p| (canonical_key(&p), p))
        .collect();
    keyed.sort_by_key(|(k, _)| *k);
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: brute-force every relation matrix on n labelled
    /// points, keep the posets, and count orbits under all n! relabelings.
    fn brute_force_class_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .collect();
        let mut reps: HashSet<Vec<bool>> = HashSet::new();
        for mask in 0..(1u64 << pairs.len()) {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                leq[i * n + i] = true;
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    leq[i * n + j] = true;
                }
            }
            if !is_poset(n, &leq) {
                continue;
            }
            let mut canon: Option<Vec<bool>> = None;
            let mut perm: Vec<usize> = Vec::new();
            all_perms(n, &mut perm, &mut |p| {
                let mut relabeled = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        relabeled[i * n + j] = leq[p[i] * n + p[j]];
                    }
                }
                if canon.as_ref().is_none_or(|c| relabeled < *c) {
                    canon = Some(relabeled);
                }
            });
            reps.insert(canon.unwrap());
        }
        reps.len()
    }

    fn is_poset(n: usize, leq: &[bool]) -> bool {
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return false;
                }
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn all_perms(n: usize, prefix: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if prefix.len() == n {
            f(prefix);
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                all_perms(n, prefix, f);
                prefix.pop();
            }
        }
    }

    #[test]
    fn counts_match_brute_force_oracle() {
        for n in 1..=4 {
            let ours = enumerate_posets(n, false).unwrap().len();
            assert_eq!(ours, brute_force_class_count(n), "n = {n}");
        }
    }

    #[test]
    fn counts_match_published_sequence() {
        let expected = [1usize, 2, 5, 16, 63, 318];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_posets(n, false).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn lattice_counts_match_published_sequence() {
        let expected = [1usize, 1, 1, 2, 5, 15];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_posets(n, true).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_posets(8, false),
            Err(Error::EnumerationBound { .. })
        ));
        assert!(enumerate_posets_bounded(3, false, 3).is_ok());
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        // The diamond with two different labelings.
        let a = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let b = FinitePoset::from_covers(4, &[(3, 1), (3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        let chain = FinitePoset::chain(4);
        assert_ne!(canonical_key(&a), canonical_key(&chain));
    }

    #[test]
    fn enumerated_posets_satisfy_axioms_and_level_facts() {
        for n in 1..=5 {
            for p in enumerate_posets(n, false).unwrap() {
                let levels = p.levels();
                for x in 0..n {
                    assert_eq!(levels[x] == 1, p.minimal_elements().contains(&x));
                    for y in 0..n {
                        if x != y && levels[x] == levels[y] {
                            assert!(!p.comparable(x, y), "equal levels must be incomparable");
                        }
                    }
                }
            }
        }
    }
}
