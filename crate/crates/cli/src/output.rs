//! Text renderings of build summaries, coset tables and verdicts.

use serde_json::json;

use crate::spec::BuiltMonoid;

pub fn summary(built: &BuiltMonoid) -> String {
    let m = &built.monoid;
    let gens: Vec<String> = m
        .generators()
        .iter()
        .map(|&g| m.display_label(g))
        .collect();
    let mut out = String::new();
    out.push_str(&format!("monoid: {}\n", built.description));
    out.push_str(&format!("size: {}\n", m.size()));
    out.push_str(&format!("generators: {}\n", gens.join(", ")));
    out.push_str(&format!("r_trivial: {}\n", m.is_r_trivial()));
    out.push_str(&format!("almost_r_trivial: {}\n", m.is_almost_r_trivial()));
    out.push_str(&format!("j_trivial: {}\n", m.is_j_trivial()));
    out
}

pub fn xm_table(built: &BuiltMonoid) -> String {
    let m = &built.monoid;
    let x = m.coset_poset();
    let mut out = String::new();
    let width = x
        .owners()
        .iter()
        .map(|o| m.display_label(o[0]).len())
        .max()
        .unwrap_or(2);
    for (coset, owners) in x.cosets().iter().zip(x.owners()) {
        let members: Vec<String> = coset.iter().map(|&e| m.display_label(e)).collect();
        out.push_str(&format!(
            "{:>width$} | {{{}}}\n",
            m.display_label(owners[0]),
            members.join(", "),
            width = width
        ));
    }
    out
}

pub fn xm_json(built: &BuiltMonoid) -> String {
    let m = &built.monoid;
    let x = m.coset_poset();
    let cosets: Vec<serde_json::Value> = x
        .cosets()
        .iter()
        .zip(x.owners())
        .map(|(coset, owners)| {
            json!({
                "owner": m.display_label(owners[0]),
                "owners": owners.iter().map(|&e| m.display_label(e)).collect::<Vec<_>>(),
                "members": coset.iter().map(|&e| m.display_label(e)).collect::<Vec<_>>(),
                "size": coset.len(),
            })
        })
        .collect();
    let value = json!({
        "cosets": cosets,
        "count": x.len(),
        "linear": x.is_linear(),
    });
    format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
}

pub fn check(built: &BuiltMonoid) -> String {
    let m = &built.monoid;
    match m.coset_order_witness() {
        None => "linear\n".to_string(),
        Some((a, b)) => format!(
            "nonlinear: cosets {}M and {}M are incomparable\n",
            m.display_label(a),
            m.display_label(b)
        ),
    }
}
