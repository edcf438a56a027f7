//! Behavior of the census binary: exit codes, error JSON, determinism.

use std::process::Command;

fn census() -> Command {
    Command::new(env!("CARGO_BIN_EXE_census"))
}

#[test]
fn success_exit_code_and_json_shape() {
    let out = census().args(["invariants", "10", "12", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "census/1");
    assert_eq!(v["alpha"], 5);
    assert_eq!(v["rho"], -8);
    assert_eq!(v["lambda"], 25);
    assert_eq!(v["chi_min"], 40);
    assert_eq!(v["pi"], 16);
    assert_eq!(v["pi1_r3"], 12);
}

#[test]
fn precondition_errors_exit_2() {
    // genus of a non-curve bidegree
    let out = census().args(["genus", "--class", "(0,4)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    // mismatched lattice ranks
    let out = census()
        .args(["intersect", "--x", "(1;1,1)", "--y", "(1;1,1,0)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // verdict outside the census range
    let out = census().args(["verdict", "5", "3", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_errors_are_machine_readable() {
    let out = census()
        .args(["--json", "genus", "--class", "(0,4)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "invalid-class");
    assert!(err["error"]["message"].as_str().unwrap().contains("(0,4)"));

    let out = census()
        .args(["--json", "compounded", "--e", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "precondition");
}

#[test]
fn usage_errors_exit_2() {
    let out = census().args(["cubic-classify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = census().args(["table", "--family", "r+17"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_are_byte_deterministic() {
    for family in ["r+8", "r+9", "gg4"] {
        let md1 = census().args(["table", "--family", family]).output().unwrap();
        let md2 = census().args(["table", "--family", family]).output().unwrap();
        assert_eq!(md1.stdout, md2.stdout, "markdown for {family}");
        assert!(md1.status.success());
        let js1 = census().args(["table", "--family", family, "--json"]).output().unwrap();
        let js2 = census().args(["table", "--family", family, "--json"]).output().unwrap();
        assert_eq!(js1.stdout, js2.stdout, "json for {family}");
        let doc: serde_json::Value = serde_json::from_slice(&js1.stdout).unwrap();
        assert_eq!(doc["schema"], "census/1");
    }
}

#[test]
fn class_grammar_round_trips_through_the_cli() {
    let out = census()
        .args(["--json", "genus", "--class", "(8;3^2,2^2)"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["class"], "(8;3,3,2,2)");
    assert_eq!(v["genus"], 13);

    let out = census()
        .args(["--json", "intersect", "--x", "(4,6)", "--y", "(1,3)"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["product"], 18);
}

#[test]
fn very_ample_flags_high_rank_lattices() {
    let out = census()
        .args(["--json", "very-ample", "--class", "(3;1,1,1,1,1,1,1)"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["very_ample"], true);
    assert_eq!(v["criterion_only"], true);

    let out = census()
        .args(["--json", "very-ample", "--class", "(3;1,1,1,1)"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["criterion_only"], false);
}

#[test]
fn verdict_json_has_citations_and_components() {
    let out = census().args(["--json", "verdict", "18", "15", "7"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exists"], "yes");
    assert_eq!(v["irreducible"], "no");
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert!(!v["citations"].as_array().unwrap().is_empty());
}
