//! Runs every example binary (built by `cargo test`) and spot-checks its output.

use std::path::PathBuf;
use std::process::Command;

fn run(name: &str, args: &[&str]) -> String {
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_detsurf"));
    let path = bin.parent().unwrap().join("examples").join(name);
    let out = Command::new(&path).args(args).output().unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_pairs() {
    assert!(run("enumerate_pairs", &["6"]).ends_with("degree 6: 16 classes, 26 normalized pairs\n"));
}

#[test]
fn component_report() {
    let out = run("component_report", &["0 1", "2 5"]);
    assert!(out.contains("dim 78 in P^83, codim 5"), "{out}");
}

#[test]
fn codim_table() {
    let out = run("codim_table", &["6"]);
    assert!(out.contains("  5      8  2, 3, 6:4\n"));
}

#[test]
fn quartic_degrees() {
    let out = run("quartic_degrees", &[]);
    assert!(out.contains("degree 38475"));
    assert!(out.contains("2 x P(disc 16, coset 0)"));
}

#[test]
fn conjecture_sweep() {
    let out = run("conjecture_sweep", &["10"]);
    assert!(out.contains(" 0 failing cells"));
}

#[test]
fn jacobian_oracle() {
    assert!(!run("jacobian_oracle", &[]).contains("MISMATCH"));
}

#[test]
fn fermat_surface() {
    assert!(run("fermat_surface", &[]).ends_with("det = x^6 + y^6 + z^6 + w^6\n"));
}
