//! Serde mirrors of the crate's wire formats.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::faces::Arrangement;
use crate::monoid::FiniteMonoid;
use crate::poset::FinitePoset;

/// `{"n": 4, "covers": [[0,1],[1,2]]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetSpec {
    pub n: usize,
    #[serde(default)]
    pub covers: Vec<(usize, usize)>,
}

impl PosetSpec {
    pub fn build(&self) -> Result<FinitePoset> {
        FinitePoset::from_covers(self.n, &self.covers)
    }

    pub fn from_poset(poset: &FinitePoset) -> Self {
        PosetSpec { n: poset.len(), covers: poset.covers() }
    }
}

/// Export/import shape of a monoid. `gens` and `labels` are optional on
/// import; generators are re-derived when absent and labels are always
/// recomputed from the generators.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidJson {
    pub size: usize,
    pub identity: usize,
    #[serde(default)]
    pub gens: Option<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl MonoidJson {
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidJson {
            size: m.size(),
            identity: m.identity(),
            gens: Some(m.generators().to_vec()),
            mul: m.mul_rows(),
            labels: Some(m.labels().to_vec()),
        }
    }

    pub fn build(&self) -> Result<FiniteMonoid> {
        if self.mul.len() != self.size {
            return Err(Error::TableShape(format!(
                "table has {} rows, expected {}",
                self.mul.len(),
                self.size
            )));
        }
        FiniteMonoid::from_cayley(&self.mul, self.identity, self.gens.clone())
    }
}

/// `{"dim": 2, "normals": [["1","0"],["0","1"],["1","-1"]]}` with entries
/// as integer or `p/q` strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementSpec {
    pub dim: usize,
    pub normals: Vec<Vec<String>>,
}

impl ArrangementSpec {
    pub fn build(&self) -> Result<Arrangement> {
        let mut normals = Vec::with_capacity(self.normals.len());
        for (i, row) in self.normals.iter().enumerate() {
            if row.len() != self.dim {
                return Err(Error::InvalidSpec(format!(
                    "normal {i} has {} entries for dimension {}",
                    row.len(),
                    self.dim
                )));
            }
            let mut v = Vec::with_capacity(row.len());
            for entry in row {
                v.push(parse_rational(entry).ok_or_else(|| {
                    Error::InvalidSpec(format!("normal {i}: bad rational '{entry}'"))
                })?);
            }
            normals.push(v);
        }
        Arrangement::from_normals(self.dim, normals)
    }
}

pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = text.parse().ok()?;
            Some(BigRational::from_integer(num))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_spec_round_trip() {
        let spec = PosetSpec { n: 4, covers: vec![(0, 1), (0, 2), (1, 3), (2, 3)] };
        let poset = spec.build().unwrap();
        let back = PosetSpec::from_poset(&poset);
        assert_eq!(back.n, 4);
        assert_eq!(back.covers, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        let text = serde_json::to_string(&spec).unwrap();
        let parsed: PosetSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.build().unwrap(), poset);
    }

    #[test]
    fn monoid_json_round_trip() {
        let m = crate::functions::tetris_monoid(3).unwrap();
        let json = MonoidJson::from_monoid(&m);
        let rebuilt = json.build().unwrap();
        assert_eq!(rebuilt, m);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(
            parse_rational("-1/2").unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
