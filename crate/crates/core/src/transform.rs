//! Self-maps of a finite indexed set.
//!
//! Transformations are the element representation for every function monoid
//! in this crate. Products read left to right: `f.then(g)` is the map
//! `x -> g(f(x))`, and all Cayley tables are filled with that orientation.

use crate::poset::FinitePoset;

/// A total map from `{0, .., n-1}` to itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    map: Vec<usize>,
}

impl Transformation {
    /// Builds a transformation from its image list.
    ///
    /// Panics if an image is out of range; callers construct these from
    /// trusted enumerations or explicit literals.
    pub fn new(map: Vec<usize>) -> Self {
        let n = map.len();
        assert!(map.iter().all(|&v| v < n), "image out of range");
        Transformation { map }
    }

    pub fn identity(n: usize) -> Self {
        Transformation { map: (0..n).collect() }
    }

    /// The constant map onto `value`.
    pub fn constant(n: usize, value: usize) -> Self {
        assert!(value < n);
        Transformation { map: vec![value; n] }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// `self` followed by `next`: the map `x -> next(self(x))`.
    pub fn then(&self, next: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), next.degree());
        Transformation {
            map: self.map.iter().map(|&v| next.map[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// f(x) <= x for all x.
    pub fn is_regressive(&self, poset: &FinitePoset) -> bool {
        self.map.iter().enumerate().all(|(x, &fx)| poset.leq(fx, x))
    }

    /// x <= y implies f(x) <= f(y).
    pub fn is_order_preserving(&self, poset: &FinitePoset) -> bool {
        let n = poset.len();
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) && !poset.leq(self.map[x], self.map[y]) {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Display for Transformation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
