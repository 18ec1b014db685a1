//! DOT export of Hasse diagrams: cover edges only, drawn low to high.

use crate::monoid::{CosetPoset, FiniteMonoid};
use crate::poset::FinitePoset;

/// Renders a poset as a DOT digraph with one node per element.
pub fn hasse_dot(poset: &FinitePoset, labels: &[String]) -> String {
    assert_eq!(labels.len(), poset.len());
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape(label)));
    }
    for (lo, hi) in poset.covers() {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a poset with index labels.
pub fn poset_dot(poset: &FinitePoset) -> String {
    let labels: Vec<String> = (0..poset.len()).map(|i| i.to_string()).collect();
    hasse_dot(poset, &labels)
}

/// Hasse diagram of a coset order; each coset is labelled by the shortest
/// word among its owners.
pub fn coset_dot(cosets: &CosetPoset, monoid: &FiniteMonoid) -> String {
    let labels: Vec<String> = cosets
        .owners()
        .iter()
        .map(|owners| monoid.display_label(owners[0]))
        .collect();
    hasse_dot(cosets.order(), &labels)
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}
