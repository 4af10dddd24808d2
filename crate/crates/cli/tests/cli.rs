use std::process::Command;

use dnull_cli::{CatalogReport, DeltaReport, IdealReport, Null2Report};

fn dnull(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dnull"))
        .args(args)
        .env_remove("DNULL_SEED")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn worked_delta_instance() {
    let (code, out, _) = dnull(&["delta", "--r", "3", "--spectrum", "1,2,3,6"]);
    assert_eq!(code, 0);
    let rep: DeltaReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.delta, 36.0);
    assert_eq!(rep.bound, 36.0);
    assert!(rep.ideal);
}

#[test]
fn assert_ideal_fails_off_the_pattern() {
    let (code, out, _) = dnull(&[
        "delta",
        "--r",
        "3",
        "--spectrum",
        "1,1,1,1",
        "--assert-ideal",
    ]);
    assert_eq!(code, 1);
    assert!(!serde_json::from_str::<DeltaReport>(&out).unwrap().ideal);
    assert_eq!(dnull(&["delta", "--r", "3", "--spectrum", "1,1,1,1"]).0, 0);
}

#[test]
fn replay_below_four_is_a_usage_error() {
    let (code, out, err) = dnull(&["replay", "--n", "3"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("n >= 4"), "{err}");
}

#[test]
fn replay_at_four_is_positive() {
    let (code, out, _) = dnull(&["replay", "--n", "4", "--a", "1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["format"], "dnull-elimination-report");
    assert_eq!(v["verdict"], "H-locally-constant");
}

#[test]
fn replay_rejects_zero_eigenvalue() {
    let (code, _, err) = dnull(&["replay", "--n", "5", "--a", "0"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn negative_spectra_parse() {
    let (code, out, _) = dnull(&["ideal", "--spectrum", "-1,-2,-3,-6"]);
    assert_eq!(code, 0);
    let rep: IdealReport = serde_json::from_str(&out).unwrap();
    assert!(rep.pattern.is_some());
    assert_eq!(rep.bound, 36.0);
}

#[test]
fn null2_verdicts_map_to_exit_codes() {
    let (code, out, _) = dnull(&["null2", "--spectrum", "0.25,0.25,0,0,0"]);
    assert_eq!(code, 0);
    let rep: Null2Report = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.check.a, Some(0.125));
    assert_eq!(dnull(&["null2", "--spectrum", "2,2,2,2"]).0, 1);
    assert_eq!(dnull(&["null2", "--spectrum", "0,0,0,0"]).0, 1);
    assert_eq!(
        dnull(&["null2", "--spectrum", "1,0,0,0", "--no-constant-h"]).0,
        2
    );
}

#[test]
fn malformed_inputs_exit_two() {
    assert_eq!(
        dnull(&["delta", "--r", "3", "--matrix", "[[1,2],[3,4]]"]).0,
        2
    );
    assert_eq!(dnull(&["delta", "--r", "5", "--spectrum", "1,2,3,4"]).0, 2);
    assert_eq!(dnull(&["delta", "--spectrum", "1,2,3,4"]).0, 2);
    assert_eq!(dnull(&["delta", "--r", "2", "--spectrum", "1,x,3"]).0, 2);
    assert_eq!(
        dnull(&["catalog", "--kind", "spherical-cylinder", "--n", "4"]).0,
        2
    );
    assert_eq!(dnull(&["nonsense"]).0, 2);
}

#[test]
fn input_files_are_validated() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("cyl.json");
    std::fs::write(
        &good,
        r#"{"kind": "spherical-cylinder", "p": 2, "n": 5, "radius": 2.0}"#,
    )
    .unwrap();
    let (code, out, _) = dnull(&["null2", "--input", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        serde_json::from_str::<Null2Report>(&out).unwrap().check.a,
        Some(0.5)
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\"kind\": \"round-sphere\",\n \"n\": 4, \"radius\": 1.0, \"colour\": 1}",
    )
    .unwrap();
    let (code, _, err) = dnull(&["catalog", "--input", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("colour") && err.contains("line 2"), "{err}");
}

#[test]
fn catalog_reports_round_trip() {
    let (code, out, _) = dnull(&[
        "catalog",
        "--kind",
        "round-sphere",
        "--n",
        "4",
        "--radius",
        "0.5",
    ]);
    assert_eq!(code, 0);
    let rep: CatalogReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.spectrum.principal_curvatures, vec![2.0; 4]);
    assert_eq!(rep.spectrum.h, 2.0);
}

#[test]
fn same_seed_same_bytes() {
    let args = [
        "delta",
        "--r",
        "3",
        "--matrix",
        "[[1,0.3,0,0,0],[0.3,2,0.1,0,0],[0,0.1,-1,0.4,0],[0,0,0.4,5,0],[0,0,0,0,0.5]]",
    ];
    let (_, a, _) = dnull(&[&args[..], &["--seed", "9"]].concat());
    let (_, b, _) = dnull(&[&args[..], &["--seed", "9"]].concat());
    assert_eq!(a, b);
    let out = Command::new(env!("CARGO_BIN_EXE_dnull"))
        .args(args)
        .env("DNULL_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), a);
}

#[test]
fn text_format_is_plain() {
    let (code, out, _) = dnull(&[
        "--format",
        "text",
        "delta",
        "--r",
        "3",
        "--spectrum",
        "1,2,3,6,6",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.contains("delta: 108") && out.contains("bound: 108"),
        "{out}"
    );
}
