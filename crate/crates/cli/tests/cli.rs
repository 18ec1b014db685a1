//! End-to-end tests of the binary: spec parsing, output shapes, exit
//! codes.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcoset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn spec_file(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn build_tetris_four() {
    let spec = spec_file(r#"{"kind":"tetris","n":4}"#);
    let out = run(&["build", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("size: 8"));
    assert!(text.contains("r_trivial: true"));
}

#[test]
fn build_hecke_a2() {
    let spec = spec_file(r#"{"kind":"hecke","type":"A","n":2}"#);
    let out = run(&["build", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("size: 6"));
}

#[test]
fn malformed_json_exits_two() {
    let spec = spec_file("{not json");
    let out = run(&["build", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["build", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_violation_exits_three() {
    // A 12-chain has far more than 100000 regressive maps.
    let spec = spec_file(
        r#"{"kind":"regressive","poset":{"n":12,"covers":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8],[8,9],[9,10],[10,11]]}}"#,
    );
    let out = run(&["build", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn xm_table_matches_the_a2_rows() {
    let spec = spec_file(r#"{"kind":"hecke","type":"A","n":2}"#);
    let out = run(&["xm", spec.path().to_str().unwrap(), "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            " id | {id, a, b, ab, ba, aba}",
            "  a | {a, ab, aba}",
            "  b | {b, ba, aba}",
            " ab | {ab, aba}",
            " ba | {ba, aba}",
            "aba | {aba}",
        ]
    );
}

#[test]
fn xm_json_reports_coset_count() {
    let spec = spec_file(r#"{"kind":"faces","dim":2,"normals":[["1","0"],["0","1"],["1","-1"]]}"#);
    let out = run(&["xm", spec.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["count"], 13);
    assert_eq!(value["linear"], false);
}

#[test]
fn xm_dot_is_deterministic() {
    let spec = spec_file(r#"{"kind":"tetris","n":3}"#);
    let path = spec.path().to_str().unwrap().to_owned();
    let a = run(&["xm", &path, "--format", "dot"]);
    let b = run(&["xm", &path, "--format", "dot"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("digraph hasse {"));
}

#[test]
fn xm_out_writes_a_file() {
    let spec = spec_file(r#"{"kind":"tetris","n":3}"#);
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("xm.dot");
    let out = run(&[
        "xm",
        spec.path().to_str().unwrap(),
        "--format",
        "dot",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(out_path).unwrap().contains("digraph"));
}

#[test]
fn check_reports_witness_for_tetris_four() {
    let spec = spec_file(r#"{"kind":"tetris","n":4}"#);
    let out = run(&["check", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("nonlinear"));
    assert!(text.contains("incomparable"));
}

#[test]
fn check_reports_linear_for_catalan_two() {
    let spec = spec_file(r#"{"kind":"catalan","n":2}"#);
    let out = run(&["check", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "linear\n");
}

#[test]
fn check_hecke_a1_is_linear() {
    let spec = spec_file(r#"{"kind":"hecke","type":"A","n":1}"#);
    let out = run(&["check", spec.path().to_str().unwrap()]);
    assert_eq!(stdout(&out), "linear\n");
}

#[test]
fn cayley_spec_round_trips() {
    let spec = spec_file(
        r#"{"kind":"cayley","size":3,"identity":0,"mul":[[0,1,2],[1,1,2],[2,1,2]]}"#,
    );
    let out = run(&["build", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("r_trivial: false"));
    assert!(text.contains("almost_r_trivial: true"));
}

#[test]
fn custom_coxeter_realization_is_accepted() {
    // Two commuting transpositions: the rank-2 matrix with m = 2.
    let spec = spec_file(
        r#"{"kind":"hecke","custom_gens":[[1,0,2,3],[0,1,3,2]],"matrix":[[1,2],[2,1]]}"#,
    );
    let out = run(&["build", spec.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("size: 4"));
}

#[test]
fn verify_s33_small_is_clean() {
    let out = run(&["verify", "--suite", "s33", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().count() > 3);
    assert!(text.contains(r#""suite":"s33""#));
}

#[test]
fn verify_faces_is_clean() {
    let out = run(&["verify", "--suite", "faces"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_hecke_is_clean() {
    let out = run(&["verify", "--suite", "hecke"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_tetris_reports_the_threshold_disagreement() {
    // Faithful behaviour: the n = 3 instance disagrees with the n < 4
    // prediction under this crate's product orientation, so the suite
    // exits 1.
    let out = run(&["verify", "--suite", "tetris"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains(r#""id":"tetris-n3","observed":false,"predicted":true"#));
}

#[test]
fn verify_over_budget_exits_three() {
    let out = run(&["verify", "--suite", "s33", "--nmax", "7"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_with_tiny_budget_records_skips() {
    let out = run(&["verify", "--suite", "s33", "--nmax", "4", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains(r#""skipped""#));
}

#[test]
fn build_with_raised_budget_succeeds() {
    let spec = spec_file(r#"{"kind":"tetris","n":9}"#);
    let path = spec.path().to_str().unwrap().to_owned();
    // 9! regressive maps exceed the default enumeration budget, but the
    // 1-Lipschitz subset is only 2^8 maps.
    let default = run(&["build", &path]);
    assert_eq!(default.status.code(), Some(3));
    let raised = run(&["build", &path, "--budget", "400000"]);
    assert_eq!(raised.status.code(), Some(0));
    assert!(stdout(&raised).contains("size: 256"));
}

#[test]
fn verify_out_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let out = run(&["verify", "--suite", "s34", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(path).unwrap();
    for line in text.lines() {
        serde_json::from_str::<serde_json::Value>(line).expect("every line is JSON");
    }
}
