//! End-to-end tests of the `facecount` binary: argument handling, exit
//! codes, output formats, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn facecount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facecount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn facecount_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facecount"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

#[test]
fn fvector_matches_oracle_on_a_known_vector() {
    let out = facecount(&["fvector", "J:s=3,d=5", "--oracle"]);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert_eq!(
        text.matches("(12, 32, 39, 25, 8)").count(),
        2,
        "formula and oracle both print the expected vector:\n{text}"
    );
    assert!(text.contains("MATCH"), "verdict missing:\n{text}");
}

#[test]
fn fvector_formula_only_prints_simplex_counts() {
    let out = facecount(&["fvector", "simplex:d=4"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("(5, 10, 10, 5)"), "got:\n{text}");
    assert!(!text.contains("verdict"), "no verdict without an oracle run");
}

#[test]
fn fvector_rejects_unknown_family_with_exit_2() {
    let out = facecount(&["fvector", "zonk:d=3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("zonk"),
        "error names the offending spec: {}",
        stderr_str(&out)
    );
}

#[test]
fn fvector_oracle_guard_requires_force() {
    let out = facecount(&["fvector", "a:d=20", "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_str(&out);
    assert!(err.contains("--force"), "guard mentions the override: {err}");
    assert!(err.contains("10000000"), "guard states the limit: {err}");
}

#[test]
fn fvector_json_uses_string_integers_and_is_byte_stable() {
    let args = ["fvector", "j:s=3,d=5", "--oracle", "--format", "json"];
    let first = facecount(&args);
    let second = facecount(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "identical runs emit identical bytes");
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&first)).unwrap();
    assert_eq!(value["verdict"], "MATCH");
    assert_eq!(value["formula"]["counts"][1], "32", "integers are strings");
    assert_eq!(value["oracle"]["counts"][4], "8");
}

#[test]
fn verify_existence_exits_zero_at_full_grid() {
    let out = facecount(&[
        "verify", "--suite", "existence", "--d-max", "200", "--format", "csv",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(
        text.contains("existence,200,0,"),
        "csv summary row present:\n{text}"
    );
    assert!(text.contains("PASS"), "status column says PASS:\n{text}");
}

#[test]
fn verify_rejects_grid_outside_suite_bounds() {
    let out = facecount(&["verify", "--suite", "existence", "--d-max", "100000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("1..=200"),
        "error states the legal range: {}",
        stderr_str(&out)
    );
}

#[test]
fn verify_all_rejects_grid_overrides() {
    let out = facecount(&["verify", "--suite", "all", "--d-max", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = facecount(&["verify", "--suite", "all", "--s-set", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_s_set_is_tau_minimality_only() {
    let out = facecount(&["verify", "--suite", "monotonicity", "--s-set", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("tau-minimality"));

    let out = facecount(&[
        "verify", "--suite", "tau-minimality", "--d-max", "12", "--s-set", "2,3",
        "--format", "csv",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    assert!(stdout_str(&out).contains("tau-minimality"));
}

#[test]
fn verify_markdown_report_shows_verdict_and_grid() {
    let out = facecount(&["verify", "--suite", "barnette-truncations", "--d-max", "4"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(
        text.contains("## barnette-truncations — PASS"),
        "markdown header with verdict:\n{text}"
    );
    assert!(text.contains("points checked"), "grid summary present:\n{text}");
}

#[test]
fn table_eta_csv_is_exact_and_stable() {
    let args = ["table", "--which", "eta", "--d", "3..4", "--format", "csv"];
    let first = facecount(&args);
    assert!(first.status.success());
    assert_eq!(
        stdout_str(&first),
        "d,k,eta\n3,1,12\n3,2,6\n4,1,21\n4,2,18\n4,3,7\n",
        "eta values at 2d+2 vertices for d = 3, 4"
    );
    let second = facecount(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_dichotomy_json_lists_columns_and_rows() {
    let out = facecount(&[
        "table", "--which", "dichotomy", "--d", "9", "--format", "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(
        value["columns"],
        serde_json::json!(["d", "k", "eta", "tau", "relation"])
    );
    assert_eq!(
        value["rows"][0],
        serde_json::json!(["9", "1", "96", "100", "eta<tau"])
    );
    assert_eq!(
        value["rows"][2],
        serde_json::json!(["9", "3", "427", "405", "eta>tau"])
    );
}

#[test]
fn table_minimisers_marks_parity() {
    let out = facecount(&[
        "table", "--which", "minimisers", "--d", "5..6", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("5,2,4,2,10,no"), "d=5, s=2 misses the threshold:\n{text}");
    assert!(text.contains("5,3,5,2,12,yes"), "d=5, s=3 attains it:\n{text}");
    assert!(text.contains("6,2,5,2,13,yes"), "d=6, s=2 attains it:\n{text}");
}

#[test]
fn table_rejects_domains_below_the_formula_range() {
    let out = facecount(&["table", "--which", "tau", "--d", "4..6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = facecount(&["table", "--which", "eta", "--d", "6..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dump_emits_exact_vertices_incidences_and_counts() {
    let out = facecount(&["dump", "trunc:d=3,n=1"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["incidence"]["n_vertices"], 6);
    assert_eq!(value["incidence"]["rows"].as_array().unwrap().len(), 5);
    assert_eq!(
        value["f_vector"]["counts"],
        serde_json::json!(["6", "9", "5"])
    );
    let vertex = value["polytope"]["vertices"][0].as_array().unwrap();
    assert_eq!(vertex.len(), 3, "one coordinate pair per dimension");
    assert!(
        vertex[0].as_array().unwrap().len() == 2,
        "coordinates are numerator/denominator pairs"
    );
}

#[test]
fn dump_respects_the_scan_guard() {
    let out = facecount(&["dump", "a:d=20"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("--force"));
}

#[test]
fn out_flag_writes_the_file_and_keeps_stdout_empty() {
    let path: PathBuf = std::env::temp_dir().join(format!(
        "facecount-cli-test-{}.csv",
        std::process::id()
    ));
    let direct = facecount(&["table", "--which", "eta", "--d", "3..4", "--format", "csv"]);
    let to_file = facecount(&[
        "table", "--which", "eta", "--d", "3..4", "--format", "csv",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty(), "nothing on stdout with --out");
    let written = std::fs::read(&path).expect("output file written");
    std::fs::remove_file(&path).ok();
    assert_eq!(written, direct.stdout, "file content matches stdout content");
}

#[test]
fn worker_count_comes_from_flag_or_environment() {
    let out = facecount(&[
        "verify", "--suite", "existence", "--d-max", "50", "--workers", "2",
        "--format", "csv",
    ]);
    assert!(out.status.success());

    let out = facecount_env(
        &["verify", "--suite", "existence", "--d-max", "50", "--format", "csv"],
        "FACECOUNT_WORKERS",
        "2",
    );
    assert!(out.status.success());

    let out = facecount_env(
        &["verify", "--suite", "existence", "--d-max", "50"],
        "FACECOUNT_WORKERS",
        "plenty",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("FACECOUNT_WORKERS"));
}
