//! The JSON monoid spec accepted by every subcommand.

use serde::Deserialize;

use monoid_cosets::coxeter::{CoxeterMatrix, CoxeterRealization, CoxeterType};
use monoid_cosets::json::{ArrangementSpec, MonoidJson, PosetSpec};
use monoid_cosets::transform::Transformation;
use monoid_cosets::{functions, Error, FiniteMonoid, Result};

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MonoidSpec {
    /// All order-preserving regressive maps on the n-chain.
    Catalan { n: usize },
    /// The 1-Lipschitz members of the Catalan monoid.
    Tetris { n: usize },
    /// All regressive maps on a poset.
    Regressive { poset: PosetSpec },
    /// All order-preserving regressive maps on a poset.
    OpRegressive { poset: PosetSpec },
    /// Closure of the k-level-Lipschitz order-preserving regressive maps.
    KLevelLipschitz { k: usize, poset: PosetSpec },
    /// The 0-Hecke monoid of a Coxeter group.
    Hecke {
        #[serde(rename = "type", default)]
        family: Option<String>,
        #[serde(default)]
        n: Option<usize>,
        #[serde(default)]
        custom_gens: Option<Vec<Vec<usize>>>,
        #[serde(default)]
        matrix: Option<Vec<Vec<usize>>>,
    },
    /// The face monoid of a central hyperplane arrangement.
    Faces {
        dim: usize,
        normals: Vec<Vec<String>>,
    },
    /// An explicit Cayley table.
    Cayley {
        size: usize,
        identity: usize,
        mul: Vec<Vec<usize>>,
        #[serde(default)]
        gens: Option<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

pub struct BuiltMonoid {
    pub monoid: FiniteMonoid,
    pub description: String,
}

fn positive(n: usize, what: &str) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidSpec(format!("{what} must be at least 1")));
    }
    Ok(n)
}

impl MonoidSpec {
    /// Builds the monoid; `budget` overrides the default enumeration and
    /// closure limits where the kind has one.
    pub fn build(&self, budget: Option<usize>) -> Result<BuiltMonoid> {
        let fn_budget = budget.map_or(functions::DEFAULT_FUNCTION_BUDGET, |b| b as u128);
        let closure_budget = budget.unwrap_or(monoid_cosets::monoid::DEFAULT_CLOSURE_BUDGET);
        match self {
            MonoidSpec::Catalan { n } => {
                let n = positive(*n, "n")?;
                Ok(BuiltMonoid {
                    monoid: functions::catalan_monoid_with_budget(n, fn_budget)?,
                    description: format!("catalan n={n}"),
                })
            }
            MonoidSpec::Tetris { n } => {
                let n = positive(*n, "n")?;
                Ok(BuiltMonoid {
                    monoid: functions::tetris_monoid_with_budget(n, fn_budget)?,
                    description: format!("tetris n={n}"),
                })
            }
            MonoidSpec::Regressive { poset } => {
                let p = poset.build()?;
                let maps = functions::all_regressive_with_budget(&p, fn_budget)?;
                Ok(BuiltMonoid {
                    monoid: FiniteMonoid::from_transformation_list(&maps)?.0,
                    description: format!("all regressive maps on {} points", p.len()),
                })
            }
            MonoidSpec::OpRegressive { poset } => {
                let p = poset.build()?;
                let maps = functions::all_op_regressive_with_budget(&p, fn_budget)?;
                Ok(BuiltMonoid {
                    monoid: FiniteMonoid::from_transformation_list(&maps)?.0,
                    description: format!(
                        "order-preserving regressive maps on {} points",
                        p.len()
                    ),
                })
            }
            MonoidSpec::KLevelLipschitz { k, poset } => {
                let k = positive(*k, "k")?;
                let p = poset.build()?;
                let maps = functions::k_level_lipschitz_filter(
                    &p,
                    &functions::all_op_regressive_with_budget(&p, fn_budget)?,
                    k,
                );
                let closed = functions::compose_closure(p.len(), &maps, closure_budget)?;
                Ok(BuiltMonoid {
                    monoid: FiniteMonoid::from_transformation_list(&closed)?.0,
                    description: format!("{k}-level-Lipschitz closure on {} points", p.len()),
                })
            }
            MonoidSpec::Hecke { family, n, custom_gens, matrix } => {
                let realization = build_realization(family, n, custom_gens, matrix)?;
                let group = realization.group_with_budget(closure_budget)?;
                Ok(BuiltMonoid {
                    monoid: group.hecke_monoid()?,
                    description: format!("0-Hecke monoid of a group of order {}", group.order()),
                })
            }
            MonoidSpec::Faces { dim, normals } => {
                let spec = ArrangementSpec { dim: *dim, normals: normals.clone() };
                let arrangement = spec.build()?;
                let (monoid, faces) = arrangement.face_monoid()?;
                Ok(BuiltMonoid {
                    monoid,
                    description: format!(
                        "face monoid of {} hyperplanes in dimension {} ({} faces)",
                        arrangement.hyperplane_count(),
                        arrangement.dim(),
                        faces.len()
                    ),
                })
            }
            MonoidSpec::Cayley { size, identity, mul, gens, labels } => {
                let json = MonoidJson {
                    size: *size,
                    identity: *identity,
                    gens: gens.clone(),
                    mul: mul.clone(),
                    labels: labels.clone(),
                };
                Ok(BuiltMonoid {
                    monoid: json.build()?,
                    description: format!("cayley table of size {size}"),
                })
            }
        }
    }
}

pub fn build_realization(
    family: &Option<String>,
    n: &Option<usize>,
    custom_gens: &Option<Vec<Vec<usize>>>,
    matrix: &Option<Vec<Vec<usize>>>,
) -> Result<CoxeterRealization> {
    if let Some(gens) = custom_gens {
        let matrix = matrix
            .clone()
            .ok_or_else(|| Error::InvalidSpec("custom_gens requires a matrix".into()))?;
        let degree = gens
            .first()
            .map(|g| g.len())
            .ok_or_else(|| Error::InvalidSpec("custom_gens must be nonempty".into()))?;
        let gens: Vec<Transformation> = gens
            .iter()
            .map(|g| {
                if g.len() != degree || g.iter().any(|&v| v >= degree) {
                    return Err(Error::InvalidSpec("bad permutation in custom_gens".into()));
                }
                Ok(Transformation::new(g.clone()))
            })
            .collect::<Result<_>>()?;
        return CoxeterRealization::new(degree, gens, CoxeterMatrix::new(matrix)?);
    }
    let family = family
        .as_deref()
        .ok_or_else(|| Error::InvalidSpec("hecke spec needs \"type\" or custom_gens".into()))?;
    let n = n.ok_or_else(|| Error::InvalidSpec("hecke spec needs \"n\"".into()))?;
    let kind = match family {
        "A" => CoxeterType::A(n),
        "B" => CoxeterType::B(n),
        "I2" => CoxeterType::I2(n),
        other => {
            return Err(Error::InvalidSpec(format!(
                "unsupported coxeter type '{other}' (expected A, B or I2)"
            )))
        }
    };
    CoxeterRealization::standard(kind)
}
