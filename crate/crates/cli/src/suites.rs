//! Verification suites: classification families, the tetris threshold,
//! the Hecke family, and the worked face arrangement. Reports are JSON
//! lines, one per instance, followed by a summary line.

use serde_json::json;

use monoid_cosets::coxeter::{CoxeterRealization, CoxeterType};
use monoid_cosets::json::ArrangementSpec;
use monoid_cosets::verify::{self, Family};
use monoid_cosets::Result;

use crate::Suite;

pub struct SuiteReport {
    pub text: String,
    pub disagreements: usize,
    pub skipped: usize,
}

impl SuiteReport {
    fn empty() -> Self {
        SuiteReport { text: String::new(), disagreements: 0, skipped: 0 }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.text.push_str(&other.text);
        self.disagreements += other.disagreements;
        self.skipped += other.skipped;
    }

    fn record(&mut self, id: &str, predicted: bool, observed: bool, witness: Option<String>) {
        let mut value = json!({
            "id": id,
            "predicted": predicted,
            "observed": observed,
        });
        if let Some(w) = witness {
            value["witness"] = json!(w);
        }
        self.text.push_str(&format!("{value}\n"));
        if predicted != observed {
            self.disagreements += 1;
        }
    }

    fn finish(mut self, suite: &str) -> SuiteReport {
        let summary = json!({
            "suite": suite,
            "disagreements": self.disagreements,
            "skipped": self.skipped,
        });
        self.text.push_str(&format!("{summary}\n"));
        self
    }
}

pub fn run(suite: Suite, nmax: Option<usize>, budget: Option<usize>) -> Result<SuiteReport> {
    match suite {
        Suite::S33 => classification(Family::AllRegressive, nmax, budget, "s33"),
        Suite::S34 => classification(Family::OpLattice, nmax, budget, "s34"),
        Suite::S35k1 => classification(Family::KLip(1), nmax, budget, "s35k1"),
        Suite::S35k2 => classification(Family::KLip(2), nmax, budget, "s35k2"),
        Suite::Tetris => tetris(nmax.unwrap_or(6)),
        Suite::Hecke => hecke(),
        Suite::Faces => faces(),
        Suite::All => {
            let mut total = SuiteReport::empty();
            total.absorb(classification(Family::AllRegressive, nmax, budget, "s33")?);
            total.absorb(classification(Family::OpLattice, nmax, budget, "s34")?);
            total.absorb(classification(Family::KLip(1), nmax, budget, "s35k1")?);
            total.absorb(classification(Family::KLip(2), nmax, budget, "s35k2")?);
            total.absorb(tetris(nmax.unwrap_or(6))?);
            total.absorb(hecke()?);
            total.absorb(faces()?);
            Ok(total)
        }
    }
}

fn classification(
    family: Family,
    nmax: Option<usize>,
    budget: Option<usize>,
    name: &str,
) -> Result<SuiteReport> {
    let nmax = nmax.unwrap_or(family.max_size());
    let budget = budget.map_or(monoid_cosets::functions::DEFAULT_FUNCTION_BUDGET, |b| b as u128);
    let report = verify::run_classification_with_budget(family, nmax, budget)?;
    let mut out = SuiteReport::empty();
    for instance in &report.instances {
        match instance.observed {
            Some(observed) => out.record(
                &instance.id,
                instance.predicted,
                observed,
                instance.witness.as_ref().map(|(a, b)| format!("{a}M vs {b}M")),
            ),
            None => {
                let value = json!({
                    "id": instance.id,
                    "predicted": instance.predicted,
                    "skipped": instance.skipped,
                });
                out.text.push_str(&format!("{value}\n"));
                out.skipped += 1;
            }
        }
    }
    Ok(out.finish(name))
}

fn tetris(nmax: usize) -> Result<SuiteReport> {
    let mut out = SuiteReport::empty();
    for (n, linear) in verify::tetris_linearity_table(nmax.min(8))? {
        out.record(&format!("tetris-n{n}"), n < 4, linear, None);
    }
    Ok(out.finish("tetris"))
}

fn hecke() -> Result<SuiteReport> {
    let mut out = SuiteReport::empty();
    let cases: Vec<(&str, CoxeterType, usize)> = vec![
        ("A1", CoxeterType::A(1), 2),
        ("A2", CoxeterType::A(2), 6),
        ("A3", CoxeterType::A(3), 24),
        ("B2", CoxeterType::B(2), 8),
        ("B3", CoxeterType::B(3), 48),
        ("I2(3)", CoxeterType::I2(3), 6),
        ("I2(4)", CoxeterType::I2(4), 8),
        ("I2(5)", CoxeterType::I2(5), 10),
        ("I2(6)", CoxeterType::I2(6), 12),
    ];
    for (name, kind, order) in cases {
        let group = CoxeterRealization::standard(kind)?.group()?;
        let monoid = group.hecke_monoid()?;
        out.record(&format!("hecke-{name}-size"), true, monoid.size() == order, None);
        out.record(
            &format!("hecke-{name}-trivialities"),
            true,
            monoid.is_r_trivial() && monoid.is_j_trivial(),
            None,
        );
        let expect_linear = group.rank() < 2;
        let witness = monoid
            .coset_order_witness()
            .map(|(a, b)| format!("{}M vs {}M", monoid.display_label(a), monoid.display_label(b)));
        out.record(
            &format!("hecke-{name}-linearity"),
            expect_linear,
            monoid.is_coset_order_linear(),
            witness,
        );
    }
    Ok(out.finish("hecke"))
}

fn faces() -> Result<SuiteReport> {
    let mut out = SuiteReport::empty();
    let spec = ArrangementSpec {
        dim: 2,
        normals: vec![
            vec!["1".into(), "0".into()],
            vec!["0".into(), "1".into()],
            vec!["1".into(), "-1".into()],
        ],
    };
    let arrangement = spec.build()?;
    // face_monoid validates the product laws internally.
    let (monoid, faces) = arrangement.face_monoid()?;
    out.record("faces-three-lines-count", true, faces.len() == 13, None);
    let chambers = faces.iter().filter(|f| f.sign.is_chamber()).count();
    out.record("faces-three-lines-chambers", true, chambers == 6, None);
    out.record("faces-three-lines-r-trivial", true, monoid.is_r_trivial(), None);
    let witness = monoid
        .coset_order_witness()
        .map(|(a, b)| format!("{}M vs {}M", monoid.display_label(a), monoid.display_label(b)));
    out.record(
        "faces-three-lines-linearity",
        false,
        monoid.is_coset_order_linear(),
        witness,
    );
    Ok(out.finish("faces"))
}
