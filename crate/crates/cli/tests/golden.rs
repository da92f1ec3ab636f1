//! Golden-file tests for the CLI. Every file under `tests/golden/` is
//! produced by the invocation named next to its assertion, so regenerating
//! after an intentional change is a matter of re-running that command with
//! `--output tests/golden/<file>`.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hecke-center"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file exists")
}

fn assert_golden(args: &[&str], file: &str) {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        golden(file),
        "output of {args:?} drifted from {file}"
    );
}

#[test]
fn basis_n3_text() {
    assert_golden(&["basis", "--n", "3", "--format", "text"], "basis_n3.txt");
}

#[test]
fn basis_n4_json() {
    assert_golden(&["basis", "--n", "4", "--format", "json"], "basis_n4.json");
}

#[test]
fn matrix_k2_n_json() {
    assert_golden(&["matrix", "--k", "2", "--which", "N"], "matrix_k2_N.json");
}

#[test]
fn matrix_k3_m_json() {
    assert_golden(&["matrix", "--k", "3", "--which", "M"], "matrix_k3_M.json");
}

#[test]
fn matrix_k3_a_text() {
    assert_golden(
        &["matrix", "--k", "3", "--which", "A", "--format", "text"],
        "matrix_k3_A.txt",
    );
}

#[test]
fn s3_table_csv_and_json() {
    assert_golden(&["s3-table", "--max-size", "7"], "s3_table_max7.csv");
    assert_golden(
        &["s3-table", "--max-size", "5", "--format", "json"],
        "s3_table_max5.json",
    );
}

#[test]
fn s3_enumerate_bound8() {
    assert_golden(&["s3-enumerate", "--bound", "8"], "s3_enumerate_bound8.txt");
}

#[test]
fn output_is_stable_across_runs() {
    let a = run(&["basis", "--n", "4", "--format", "json"]);
    let b = run(&["basis", "--n", "4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_all_passed() {
    let out = run(&["verify", "--n", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("all passed"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn check_set_exit_codes() {
    let good = run(&["check-set", "--n", "3", "--set", "[[],[1],[1,1]]"]);
    assert!(good.status.success());
    let bad = run(&["check-set", "--n", "3", "--set", "[[],[1],[2]]"]);
    assert_eq!(bad.status.code(), Some(1));
    let malformed = run(&["check-set", "--n", "3", "--set", "not json"]);
    assert_eq!(malformed.status.code(), Some(2));
    let wrong_count = run(&["check-set", "--n", "3", "--set", "[[1]]"]);
    assert_eq!(wrong_count.status.code(), Some(2));
}

#[test]
fn resource_guards_exit_3() {
    let too_big = run(&["basis", "--n", "7"]);
    assert_eq!(too_big.status.code(), Some(3));
    let too_deep = run(&["matrix", "--k", "6", "--which", "M"]);
    assert_eq!(too_deep.status.code(), Some(3));
    let direct_guard = run(&["matrix", "--k", "5", "--which", "Mdirect"]);
    assert_eq!(direct_guard.status.code(), Some(3));
}

#[test]
fn invalid_arguments_exit_2() {
    let unknown = bin().arg("nonsense").output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    let zero_k = run(&["matrix", "--k", "0", "--which", "A"]);
    assert_eq!(zero_k.status.code(), Some(2));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = run(&["basis", "--n", "4", "--format", "json", "--cache-dir", cache]);
    assert!(first.status.success());
    for k in 0..=3 {
        assert!(
            dir.path().join(format!("n_matrix_k{k}.direct.json")).exists(),
            "missing cached block {k}"
        );
    }
    let second = run(&["basis", "--n", "4", "--format", "json", "--cache-dir", cache]);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(&[
        "matrix",
        "--k",
        "2",
        "--which",
        "M",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with(r#"{"rows":[[2],[1,1]]"#));
}
