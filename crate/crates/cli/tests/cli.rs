//! End-to-end tests of the command-line interface: every subcommand,
//! exit-code semantics, and the documented determinism examples.


use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sparsehull"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn generate_cube_has_six_halfspaces_and_eight_vertices() {
    let v = stdout_json(&run(&["generate", "--kind", "cube", "--dim", "3"]));
    assert_eq!(v["dim"], 3);
    assert_eq!(v["hrep"].as_array().unwrap().len(), 6);
    assert_eq!(v["vrep"].as_array().unwrap().len(), 8);
}

#[test]
fn generate_cross_d4_has_eight_vertices() {
    let v = stdout_json(&run(&["generate", "--kind", "cross", "--dim", "4"]));
    assert_eq!(v["vrep"].as_array().unwrap().len(), 8);
}

#[test]
fn generate_is_deterministic_across_runs() {
    let args = [
        "generate",
        "--kind",
        "tangent-halfspaces",
        "--dim",
        "3",
        "-n",
        "30",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn unknown_kind_is_an_operational_error() {
    let out = run(&["generate", "--kind", "frustum", "--dim", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown body kind"));
}

#[test]
fn select_then_verify_accepts_and_tampering_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("body.json");
    let cert = dir.path().join("cert.json");

    let out = run(&[
        "generate",
        "--kind",
        "random-symmetric-vpoly",
        "--dim",
        "2",
        "-n",
        "8",
        "--seed",
        "3",
        "--output",
        body.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&[
        "select",
        "--input",
        body.to_str().unwrap(),
        "--mode",
        "swap",
        "--lambda",
        "1.0",
        "--output",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&[
        "verify",
        "--input",
        body.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "genuine certificate must verify");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["checks"].as_array().unwrap().len(), 7);

    // Shrink the claimed factor below the universal floor of 1: the
    // verifier must reject and the exit code must say so.
    let mut tampered: Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let factor = tampered["factor"].as_f64().unwrap();
    tampered["factor"] = Value::from(factor * 0.05);
    std::fs::write(&cert, serde_json::to_string(&tampered).unwrap()).unwrap();

    let out = run(&[
        "verify",
        "--input",
        body.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "tampered certificate must fail");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], false);
}

#[test]
fn select_requires_a_vertex_representation() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("family.json");
    assert!(run(&[
        "generate",
        "--kind",
        "tangent-halfspaces",
        "--dim",
        "2",
        "-n",
        "8",
        "--output",
        body.to_str().unwrap(),
    ])
    .status
    .success());
    let out = run(&["select", "--input", body.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex representation"));
}

#[test]
fn john_on_cube_reports_unit_ball_and_quality() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("cube.json");
    assert!(run(&[
        "generate",
        "--kind",
        "cube",
        "--dim",
        "3",
        "--output",
        body.to_str().unwrap(),
    ])
    .status
    .success());
    let v = stdout_json(&run(&["john", "--input", body.to_str().unwrap()]));
    for c in v["ellipsoid"]["center"].as_array().unwrap() {
        assert!(c.as_f64().unwrap().abs() < 1e-6);
    }
    assert!((v["quality"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    let outer = v["outer_radius"].as_f64().unwrap();
    assert!(outer <= 3.0 + 1e-6);
}

#[test]
fn helly_emits_report_and_oracle_scores_subsets() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("family.json");
    assert!(run(&[
        "generate",
        "--kind",
        "tangent-halfspaces",
        "--dim",
        "2",
        "-n",
        "12",
        "--seed",
        "5",
        "--output",
        body.to_str().unwrap(),
    ])
    .status
    .success());
    let v = stdout_json(&run(&["helly", "--input", body.to_str().unwrap()]));
    assert!(v["sigma"].as_array().unwrap().len() <= 4);
    assert!(v["containment_transfer_ok"].as_bool().unwrap());

    let o = stdout_json(&run(&[
        "oracle",
        "--input",
        body.to_str().unwrap(),
        "--objective",
        "diam",
        "-k",
        "4",
    ]));
    assert_eq!(o["indices"].as_array().unwrap().len(), 4);

    let cross = dir.path().join("cross.json");
    assert!(run(&[
        "generate",
        "--kind",
        "cross",
        "--dim",
        "2",
        "--output",
        cross.to_str().unwrap(),
    ])
    .status
    .success());
    let o = stdout_json(&run(&[
        "oracle",
        "--input",
        cross.to_str().unwrap(),
        "--objective",
        "factor",
        "-k",
        "4",
    ]));
    assert!((o["score"].as_f64().unwrap() - 1.0).abs() < 1e-7);
}

#[test]
fn oracle_budget_is_an_operational_error_when_exceeded() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("family.json");
    assert!(run(&[
        "generate",
        "--kind",
        "tangent-halfspaces",
        "--dim",
        "3",
        "-n",
        "40",
        "--output",
        body.to_str().unwrap(),
    ])
    .status
    .success());
    let out = run(&[
        "oracle",
        "--input",
        body.to_str().unwrap(),
        "--objective",
        "diam",
        "-k",
        "20",
        "--budget",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn suite_passes_on_a_small_corpus_and_empty_corpus_is_trivial() {
    let out = run(&["suite", "--dim", "2", "--count", "3", "--seed", "1"]);
    assert!(
        out.status.success(),
        "suite failed: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    let table = String::from_utf8_lossy(&out.stdout);
    assert!(table.contains("all bounds hold"));

    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("empty.json");
    let out = run(&[
        "suite",
        "--dim",
        "3",
        "--count",
        "0",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "empty corpus must exit 0");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["symmetric"].as_array().unwrap().len(), 0);
    assert_eq!(v["general"].as_array().unwrap().len(), 0);
    assert_eq!(v["families"].as_array().unwrap().len(), 0);
    assert_eq!(v["all_bounds_hold"], true);
}

#[test]
fn suite_report_floats_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    assert!(run(&[
        "suite",
        "--dim",
        "2",
        "--count",
        "2",
        "--output",
        report.to_str().unwrap(),
    ])
    .status
    .success());
    let text = std::fs::read_to_string(&report).unwrap();
    // Full-precision serialization: every float carries an exponent
    // and 16 fractional digits.
    let v: Value = serde_json::from_str(&text).unwrap();
    let factor = v["symmetric"][0]["factor"].as_f64().unwrap();
    assert!(factor > 0.0);
    assert!(text.contains("e0") || text.contains("e-") || text.contains("e1"));
}

#[test]
fn outputs_land_in_requested_files() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("b.json");
    let cert = dir.path().join("c.json");
    let report = dir.path().join("r.json");
    assert!(run(&[
        "generate",
        "--kind",
        "random-vpoly",
        "--dim",
        "2",
        "-n",
        "8",
        "--seed",
        "2",
        "--output",
        body.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(run(&[
        "select",
        "--input",
        body.to_str().unwrap(),
        "--output",
        cert.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(run(&[
        "verify",
        "--input",
        body.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(body.exists() && cert.exists() && report.exists());
}
