//! Acceptance gate for the batch front end: the suite must be
//! deterministic to the byte.  Prints one PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::process::Command;

/// Pinned suite configuration for the determinism check.
const DIM: &str = "3";
const COUNT: &str = "25";
const SEED: &str = "1";

#[test]
fn criterion_9_suite_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for name in ["first.json", "second.json"] {
        let path = dir.path().join(name);
        let out = Command::new(env!("CARGO_BIN_EXE_sparsehull"))
            .args([
                "suite", "--dim", DIM, "--count", COUNT, "--seed", SEED, "--output",
            ])
            .arg(&path)
            .output()
            .expect("binary runs");
        if !out.status.success() {
            println!("[acceptance] criterion 9 (suite determinism): FAIL — suite exited nonzero");
            panic!(
                "suite run failed: {}",
                String::from_utf8_lossy(&out.stdout)
            );
        }
        outputs.push((std::fs::read(&path).unwrap(), out.stdout));
    }
    let identical = outputs[0] == outputs[1];
    let bytes = outputs[0].0.len();
    if identical {
        println!(
            "[acceptance] criterion 9 (suite determinism): PASS — two runs, {bytes} report bytes identical, tables identical"
        );
    } else {
        println!("[acceptance] criterion 9 (suite determinism): FAIL — consecutive runs differ");
        panic!("suite output differs between consecutive runs");
    }
}
