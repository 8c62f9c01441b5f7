//! End-to-end runs of the `plaid` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn plaid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plaid"))
        .args(args)
        .output()
        .expect("spawn plaid")
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn mesh_suite_passes() {
    let out = plaid(&["verify", "--suite", "mesh", "--params", "3/8,4/11"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(rec["ok"], true, "{line}");
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = plaid(&["verify", "--suite", "bogus", "--params", "2/5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn render_is_deterministic() {
    let args = ["render", "--p", "2", "--q", "5", "--layers", "grid-lines,light-points,polygons", "--oriented"];
    let a = plaid(&args);
    let b = plaid(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("<?xml"));
}

#[test]
fn orbit_traces_the_big_polygon() {
    let v = json(&plaid(&["orbit", "--p", "2", "--q", "5", "--c", "1/2,1/2", "--oriented"]));
    assert_eq!(v["length"], 26);
    assert_eq!(v["polygon"].as_array().unwrap().len(), 26);
    assert_eq!(v["labels"].as_array().unwrap().len(), 26);
    assert_eq!(v["labels"][0], "EN");
}

#[test]
fn empty_tile_is_a_fixed_point() {
    let v = json(&plaid(&["orbit", "--p", "2", "--q", "5", "--c", "3/2,3/2"]));
    assert_eq!(v["length"], 1);
}

#[test]
fn orbit_rejects_off_center_points() {
    assert_eq!(plaid(&["orbit", "--p", "2", "--q", "5", "--c", "1/3,1/2"]).status.code(), Some(2));
}

#[test]
fn zero_offset_is_rejected_with_a_suggestion() {
    let out = plaid(&["irrational", "--P", "3/10", "--window", "0,0,5,5"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("--offset"), "{err}");
}

#[test]
fn generic_offset_is_coherent() {
    let v = json(&plaid(&[
        "irrational", "--P", "3/10", "--offset", "1/1000,1/999,1/997", "--window", "0,0,20,20",
    ]));
    assert_eq!(v["coherent"], true);
    assert_eq!(v["mismatches"], 0);
}

#[test]
fn stats_of_two_fifths() {
    let v = json(&plaid(&["stats", "--p", "2", "--q", "5"]));
    assert_eq!(v["count"], 3);
    assert_eq!(v["max_diameter"], 6);
}

#[test]
fn golden_corpus_check() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    for (p, q) in [("1", "2"), ("2", "5")] {
        let out = Command::new(env!("CARGO_BIN_EXE_plaid"))
            .args(["stats", "--p", p, "--q", q, "--check-golden"])
            .env("PLAID_GOLDEN_DIR", &dir)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
