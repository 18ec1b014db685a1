//! The classification harness: combinatorial predictions of coset-order
//! linearity for whole families of function monoids, checked instance by
//! instance against the computed order.

use serde::Serialize;

use crate::enumerate::enumerate_posets;
use crate::error::{Error, Result};
use crate::functions;
use crate::monoid::FiniteMonoid;
use crate::poset::FinitePoset;

/// Which function class is classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All regressive maps, over all posets.
    AllRegressive,
    /// All order-preserving regressive maps, over all lattices.
    OpLattice,
    /// Order-preserving regressive maps that are k-level-Lipschitz, over
    /// all lattices; the monoid is the closure of the filtered set.
    KLip(usize),
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::AllRegressive => "all-regressive".into(),
            Family::OpLattice => "op-lattice".into(),
            Family::KLip(k) => format!("lip{k}"),
        }
    }

    pub fn max_size(&self) -> usize {
        match self {
            Family::AllRegressive => 5,
            _ => 6,
        }
    }

    fn lattices_only(&self) -> bool {
        !matches!(self, Family::AllRegressive)
    }
}

/// Predicted linearity for the full regressive class: the poset must be
/// mutually incomparable points plus at most one two-element chain, i.e.
/// at most one strictly comparable pair.
pub fn predict_all_regressive(poset: &FinitePoset) -> bool {
    poset.comparable_pair_count() <= 1
}

/// Predicted linearity for the order-preserving class on a lattice: a
/// chain of at most two elements.
pub fn predict_op_lattice(poset: &FinitePoset) -> bool {
    poset.is_linear() && poset.len() <= 2
}

/// Predicted linearity for the k-level-Lipschitz class on a lattice: for
/// k >= 2 a chain of at most two elements, for k = 1 a chain of at most
/// three.
pub fn predict_k_lip(poset: &FinitePoset, k: usize) -> bool {
    assert!(k >= 1);
    let bound = if k == 1 { 3 } else { 2 };
    poset.is_linear() && poset.len() <= bound
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceResult {
    pub id: String,
    pub n: usize,
    pub predicted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl InstanceResult {
    pub fn disagrees(&self) -> bool {
        matches!(self.observed, Some(observed) if observed != self.predicted)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub family: String,
    pub n_max: usize,
    pub instances: Vec<InstanceResult>,
}

impl ClassificationReport {
    pub fn disagreements(&self) -> usize {
        self.instances.iter().filter(|i| i.disagrees()).count()
    }

    pub fn skipped(&self) -> usize {
        self.instances.iter().filter(|i| i.skipped.is_some()).count()
    }
}

fn family_monoid(family: Family, poset: &FinitePoset, budget: u128) -> Result<FiniteMonoid> {
    match family {
        Family::AllRegressive => {
            let maps = functions::all_regressive_with_budget(poset, budget)?;
            Ok(FiniteMonoid::from_transformation_list(&maps)?.0)
        }
        Family::OpLattice => {
            let maps = functions::all_op_regressive_with_budget(poset, budget)?;
            Ok(FiniteMonoid::from_transformation_list(&maps)?.0)
        }
        Family::KLip(k) => {
            let maps = functions::k_level_lipschitz_filter(
                poset,
                &functions::all_op_regressive_with_budget(poset, budget)?,
                k,
            );
            let closed = functions::compose_closure(
                poset.len(),
                &maps,
                crate::monoid::DEFAULT_CLOSURE_BUDGET,
            )?;
            Ok(FiniteMonoid::from_transformation_list(&closed)?.0)
        }
    }
}

/// Runs one family over every enumerated instance of size 1..=n_max.
/// Budget overruns are recorded per instance, never fatal.
pub fn run_classification(family: Family, n_max: usize) -> Result<ClassificationReport> {
    run_classification_with_budget(family, n_max, functions::DEFAULT_FUNCTION_BUDGET)
}

pub fn run_classification_with_budget(
    family: Family,
    n_max: usize,
    budget: u128,
) -> Result<ClassificationReport> {
    if n_max > family.max_size() {
        return Err(Error::EnumerationBound { n: n_max, bound: family.max_size() });
    }
    let mut instances = Vec::new();
    for n in 1..=n_max {
        let posets = enumerate_posets(n, family.lattices_only())?;
        for (index, poset) in posets.iter().enumerate() {
            let id = format!("{}-n{}-{}", family.name(), n, index);
            let predicted = match family {
                Family::AllRegressive => predict_all_regressive(poset),
                Family::OpLattice => predict_op_lattice(poset),
                Family::KLip(k) => predict_k_lip(poset, k),
            };
            match family_monoid(family, poset, budget) {
                Ok(monoid) => {
                    let witness = monoid.coset_order_witness().map(|(a, b)| {
                        (monoid.display_label(a), monoid.display_label(b))
                    });
                    instances.push(InstanceResult {
                        id,
                        n,
                        predicted,
                        observed: Some(witness.is_none()),
                        witness,
                        skipped: None,
                    });
                }
                Err(err @ (Error::FunctionBudget { .. } | Error::ClosureBudget { .. })) => {
                    instances.push(InstanceResult {
                        id,
                        n,
                        predicted,
                        observed: None,
                        witness: None,
                        skipped: Some(err.to_string()),
                    });
                }
                Err(other) => return Err(other),
            }
        }
    }
    Ok(ClassificationReport { family: family.name(), n_max, instances })
}

/// Linearity of the tetris monoid coset order for n = 1..=n_max.
pub fn tetris_linearity_table(n_max: usize) -> Result<Vec<(usize, bool)>> {
    assert!(n_max <= 8, "tetris table capped at n = 8");
    let mut out = Vec::new();
    for n in 1..=n_max {
        let monoid = functions::tetris_monoid(n)?;
        out.push((n, monoid.is_coset_order_linear()));
    }
    Ok(out)
}

/// First pair of distinct generators whose cosets are incomparable, if
/// any. With fewer than two distinct generators there is nothing to
/// report.
pub fn generator_incomparability(monoid: &FiniteMonoid) -> Option<(usize, usize)> {
    let gens = monoid.generators();
    for (i, &a) in gens.iter().enumerate() {
        for &b in gens.iter().skip(i + 1) {
            if a == b {
                continue;
            }
            let am = monoid.left_coset(a).expect("generator in range");
            let bm = monoid.left_coset(b).expect("generator in range");
            let a_in_b = am.iter().all(|e| bm.contains(e));
            let b_in_a = bm.iter().all(|e| am.contains(e));
            if !a_in_b && !b_in_a {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predictions_on_small_shapes() {
        let antichain = FinitePoset::antichain(3);
        assert!(predict_all_regressive(&antichain));
        let chain3 = FinitePoset::chain(3);
        assert!(!predict_all_regressive(&chain3));
        // One 2-chain plus an isolated point.
        let mixed = FinitePoset::from_covers(3, &[(0, 1)]).unwrap();
        assert!(predict_all_regressive(&mixed));

        assert!(predict_op_lattice(&FinitePoset::chain(2)));
        assert!(!predict_op_lattice(&chain3));
        let diamond = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!predict_op_lattice(&diamond));

        assert!(predict_k_lip(&FinitePoset::chain(2), 1));
        assert!(predict_k_lip(&FinitePoset::chain(2), 2));
        assert!(predict_k_lip(&chain3, 1));
        assert!(!predict_k_lip(&chain3, 2));
        assert!(!predict_k_lip(&diamond, 1));
        assert!(!predict_k_lip(&diamond, 7));
    }

    #[test]
    fn all_regressive_classification_holds_up_to_four() {
        let report = run_classification(Family::AllRegressive, 4).unwrap();
        assert_eq!(report.instances.len(), 1 + 2 + 5 + 16);
        assert_eq!(report.disagreements(), 0);
        assert_eq!(report.skipped(), 0);
    }

    #[test]
    fn op_lattice_classification_holds_up_to_five() {
        let report = run_classification(Family::OpLattice, 5).unwrap();
        assert_eq!(report.instances.len(), 1 + 1 + 1 + 2 + 5);
        assert_eq!(report.disagreements(), 0);
    }

    #[test]
    fn nmax_is_bounded_per_family() {
        assert!(run_classification(Family::AllRegressive, 6).is_err());
        assert!(run_classification(Family::OpLattice, 7).is_err());
    }

    #[test]
    fn tight_budgets_skip_instead_of_failing() {
        let report = run_classification_with_budget(Family::AllRegressive, 4, 10).unwrap();
        assert!(report.skipped() > 0);
        assert_eq!(report.disagreements(), 0);
        // Small instances still complete.
        assert!(report.instances.iter().any(|i| i.observed.is_some()));
    }

    #[test]
    fn tetris_table_small() {
        let table = tetris_linearity_table(2).unwrap();
        assert_eq!(table, vec![(1, true), (2, true)]);
    }

    #[test]
    fn hecke_generators_are_incomparable() {
        let h = crate::coxeter::CoxeterRealization::standard(crate::coxeter::CoxeterType::A(2))
            .unwrap()
            .group()
            .unwrap()
            .hecke_monoid()
            .unwrap();
        let (a, b) = generator_incomparability(&h).expect("two generators");
        assert_eq!(h.label(a), "a");
        assert_eq!(h.label(b), "b");
    }

    #[test]
    fn single_generator_reports_nothing() {
        let m = crate::functions::tetris_monoid(2).unwrap();
        assert!(m.generators().len() < 2 || generator_incomparability(&m).is_none());
        let h = crate::coxeter::CoxeterRealization::standard(crate::coxeter::CoxeterType::A(1))
            .unwrap()
            .group()
            .unwrap()
            .hecke_monoid()
            .unwrap();
        assert_eq!(generator_incomparability(&h), None);
    }
}
