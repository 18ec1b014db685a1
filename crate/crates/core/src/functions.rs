//! Monoids of regressive functions on posets: the full regressive and
//! order-preserving classes, level-Lipschitz refinements, Catalan and
//! tetris monoids on chains, and the constant augmentation that realizes
//! almost-R-trivial monoids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::poset::FinitePoset;
use crate::transform::Transformation;

/// Reject function-space enumerations larger than this.
pub const DEFAULT_FUNCTION_BUDGET: u128 = 100_000;

/// A class of self-maps of a poset, all regressive, with optional extra
/// conditions. The 1-Lipschitz condition is the tetris condition on chains:
/// consecutive images differ by at most one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionClassSpec {
    pub poset: crate::json::PosetSpec,
    #[serde(default)]
    pub order_preserving: bool,
    #[serde(default)]
    pub k_level_lipschitz: Option<usize>,
    #[serde(default)]
    pub chain_1_lipschitz: bool,
}

/// All regressive maps on `poset`: exactly the maps with `f(x) <= x`.
/// Their number is the product of the down-set sizes.
pub fn all_regressive(poset: &FinitePoset) -> Result<Vec<Transformation>> {
    all_regressive_with_budget(poset, DEFAULT_FUNCTION_BUDGET)
}

pub fn all_regressive_with_budget(
    poset: &FinitePoset,
    budget: u128,
) -> Result<Vec<Transformation>> {
    let n = poset.len();
    let down_sets: Vec<Vec<usize>> = (0..n).map(|x| poset.down_set(x)).collect();
    let required: u128 = down_sets.iter().map(|d| d.len() as u128).product();
    if required > budget {
        return Err(Error::FunctionBudget { required, budget });
    }
    let mut out = Vec::with_capacity(required as usize);
    let mut image = vec![0usize; n];
    fn fill(
        pos: usize,
        n: usize,
        down_sets: &[Vec<usize>],
        image: &mut Vec<usize>,
        out: &mut Vec<Transformation>,
    ) {
        if pos == n {
            out.push(Transformation::new(image.clone()));
            return;
        }
        for &v in &down_sets[pos] {
            image[pos] = v;
            fill(pos + 1, n, down_sets, image, out);
        }
    }
    fill(0, n, &down_sets, &mut image, &mut out);
    Ok(out)
}

/// The order-preserving subset of all regressive maps.
pub fn all_op_regressive(poset: &FinitePoset) -> Result<Vec<Transformation>> {
    all_op_regressive_with_budget(poset, DEFAULT_FUNCTION_BUDGET)
}

pub fn all_op_regressive_with_budget(
    poset: &FinitePoset,
    budget: u128,
) -> Result<Vec<Transformation>> {
    Ok(all_regressive_with_budget(poset, budget)?
        .into_iter()
        .filter(|t| t.is_order_preserving(poset))
        .collect())
}

/// Keeps the maps whose images move at most `k` levels apart across each
/// pair `x > y` on adjacent levels.
pub fn k_level_lipschitz_filter(
    poset: &FinitePoset,
    maps: &[Transformation],
    k: usize,
) -> Vec<Transformation> {
    let levels = poset.levels();
    let mut adjacent: Vec<(usize, usize)> = Vec::new();
    for x in 0..poset.len() {
        for y in 0..poset.len() {
            if poset.lt(y, x) && levels[x] == levels[y] + 1 {
                adjacent.push((x, y));
            }
        }
    }
    maps.iter()
        .filter(|t| {
            adjacent.iter().all(|&(x, y)| {
                let lx = levels[t.apply(x)] as isize;
                let ly = levels[t.apply(y)] as isize;
                (lx - ly).abs() <= k as isize
            })
        })
        .cloned()
        .collect()
}

/// The tetris condition on a chain: images of consecutive points differ by
/// at most one. Rejects non-chain posets.
pub fn chain_1_lipschitz_filter(
    poset: &FinitePoset,
    maps: &[Transformation],
) -> Result<Vec<Transformation>> {
    if !poset.is_linear() {
        return Err(Error::NotAChainPoset);
    }
    Ok(maps
        .iter()
        .filter(|t| {
            (1..poset.len()).all(|i| {
                let a = t.apply(i) as isize;
                let b = t.apply(i - 1) as isize;
                (a - b).abs() <= 1
            })
        })
        .cloned()
        .collect())
}

/// The usual tetris map `k -> max(k - 1, 0)` on the n-chain.
pub fn tetris_map(n: usize) -> Transformation {
    Transformation::new((0..n).map(|k| k.saturating_sub(1)).collect())
}

/// The Catalan monoid: all order-preserving regressive maps on the
/// n-chain.
pub fn catalan_monoid(n: usize) -> Result<FiniteMonoid> {
    catalan_monoid_with_budget(n, DEFAULT_FUNCTION_BUDGET)
}

pub fn catalan_monoid_with_budget(n: usize, budget: u128) -> Result<FiniteMonoid> {
    assert!(n >= 1, "catalan monoid needs n >= 1");
    let chain = FinitePoset::chain(n);
    let maps = all_op_regressive_with_budget(&chain, budget)?;
    let (monoid, _) = FiniteMonoid::from_transformation_list(&maps)?;
    Ok(monoid)
}

/// The tetris monoid: the 1-Lipschitz members of the Catalan monoid. Its
/// closure under composition is checked by the monoid builder.
pub fn tetris_monoid(n: usize) -> Result<FiniteMonoid> {
    tetris_monoid_with_budget(n, DEFAULT_FUNCTION_BUDGET)
}

pub fn tetris_monoid_with_budget(n: usize, budget: u128) -> Result<FiniteMonoid> {
    assert!(n >= 1, "tetris monoid needs n >= 1");
    let chain = FinitePoset::chain(n);
    let maps = chain_1_lipschitz_filter(&chain, &all_op_regressive_with_budget(&chain, budget)?)?;
    let (monoid, _) = FiniteMonoid::from_transformation_list(&maps)?;
    Ok(monoid)
}

/// Searches a family of order-preserving regressive maps for a pair
/// `f, g` and points `x, y` with `f(x) <= g(x)` false and `g(y) <= f(y)`
/// false. Such a pair certifies that the coset order of the generated
/// monoid is not linear; absence of a witness certifies nothing.
///
/// Returns indices `(f, g, x, y)` in lexicographic search order.
pub fn comparability_witness(
    maps: &[Transformation],
    poset: &FinitePoset,
) -> Result<Option<(usize, usize, usize, usize)>> {
    for (i, t) in maps.iter().enumerate() {
        if !t.is_regressive(poset) {
            return Err(Error::NotRegressive { index: i });
        }
        if !t.is_order_preserving(poset) {
            return Err(Error::NotOrderPreserving { index: i });
        }
    }
    let n = poset.len();
    for f in 0..maps.len() {
        for g in 0..maps.len() {
            for x in 0..n {
                if poset.leq(maps[f].apply(x), maps[g].apply(x)) {
                    continue;
                }
                for y in 0..n {
                    if !poset.leq(maps[g].apply(y), maps[f].apply(y)) {
                        return Ok(Some((f, g, x, y)));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// One constant map per minimal element.
pub fn minimal_constants(poset: &FinitePoset) -> Vec<Transformation> {
    poset
        .minimal_elements()
        .into_iter()
        .map(|v| Transformation::constant(poset.len(), v))
        .collect()
}

/// Closes a set of maps under composition (adding the identity), within a
/// budget on the element count.
pub fn compose_closure(
    domain_size: usize,
    seed: &[Transformation],
    budget: usize,
) -> Result<Vec<Transformation>> {
    let mut elements: Vec<Transformation> = vec![Transformation::identity(domain_size)];
    let mut index: std::collections::HashSet<Transformation> =
        elements.iter().cloned().collect();
    for t in seed {
        if index.insert(t.clone()) {
            elements.push(t.clone());
        }
    }
    // Pairs with elements appended during a pass are reached once the new
    // element's own cursor comes up, in both multiplication orders.
    let mut cursor = 0;
    while cursor < elements.len() {
        let snapshot = elements.len();
        for other in 0..snapshot {
            for product in [
                elements[cursor].then(&elements[other]),
                elements[other].then(&elements[cursor]),
            ] {
                if !index.contains(&product) {
                    if elements.len() >= budget {
                        return Err(Error::ClosureBudget { budget, reached: elements.len() });
                    }
                    index.insert(product.clone());
                    elements.push(product);
                }
            }
        }
        cursor += 1;
    }
    elements.sort();
    Ok(elements)
}

/// The monoid generated by a family of regressive maps together with the
/// constants onto minimal elements. The result is always almost R-trivial:
/// the constants form the only possible non-singleton R-class and every
/// element fixes them on the right.
pub fn augment_with_constants(
    maps: &[Transformation],
    poset: &FinitePoset,
) -> Result<FiniteMonoid> {
    for (i, t) in maps.iter().enumerate() {
        if !t.is_regressive(poset) {
            return Err(Error::NotRegressive { index: i });
        }
    }
    let mut seed = maps.to_vec();
    seed.extend(minimal_constants(poset));
    let closed = compose_closure(poset.len(), &seed, crate::monoid::DEFAULT_CLOSURE_BUDGET)?;
    let (monoid, _) = FiniteMonoid::from_transformation_list(&closed)?;
    assert!(
        monoid.is_almost_r_trivial(),
        "constants-augmented regressive monoid must be almost R-trivial"
    );
    Ok(monoid)
}

/// Materializes the function class described by a spec.
pub fn function_class(spec: &FunctionClassSpec) -> Result<(FinitePoset, Vec<Transformation>)> {
    let poset = spec.poset.build()?;
    if spec.chain_1_lipschitz && !poset.is_linear() {
        return Err(Error::NotAChainPoset);
    }
    let mut maps = all_regressive(&poset)?;
    if spec.order_preserving {
        maps.retain(|t| t.is_order_preserving(&poset));
    }
    if let Some(k) = spec.k_level_lipschitz {
        maps = k_level_lipschitz_filter(&poset, &maps, k);
    }
    if spec.chain_1_lipschitz {
        maps = chain_1_lipschitz_filter(&poset, &maps)?;
    }
    Ok((poset, maps))
}
