//! End-to-end checks of the command-line interface: wire formats, exit
//! codes, and byte-stability of repeated runs.

use std::process::{Command, Output};

fn chromasum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromasum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = chromasum(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn psi_monomial_json() {
    let out = stdout(&["psi", "--color", "blue", "--p", "13", "--k", "2", "--l", "6"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"]["coeffs"], serde_json::json!([4]));
    assert_eq!(v["color"], "blue");
    assert_eq!(v["p"], 13);
    assert_eq!(v["method"], "closed");
    assert_eq!(v["ladder"]["w"], 6);
}

#[test]
fn psi_program_with_explain_emits_chain() {
    let out = stdout(&[
        "psi", "--color", "red", "--p", "17", "--k", "40", "--l", "24", "--method", "program",
        "--explain",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"]["coeffs"], serde_json::json!([4]));
    assert_eq!(v["chain"], serde_json::json!([[40, 24], [8, 8]]));
}

#[test]
fn psi_green_normalization() {
    let out = stdout(&["psi", "--color", "green", "--p", "7", "--k", "0", "--l", "0"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"]["coeffs"], serde_json::json!([1]));
}

#[test]
fn psi_poly_file_input() {
    // 1 + a^2 b^6 over blue F_13 evaluates to 5
    let dir = std::env::temp_dir().join("chromasum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("poly.json");
    let one = r#"{"coeffs":[1]}"#;
    let zero = r#"{"coeffs":[0]}"#;
    let mut entries = vec![one.to_string()];
    entries.extend(vec![zero.to_string(); 19]);
    entries.push(one.to_string());
    std::fs::write(
        &path,
        format!(r#"{{"rows":3,"cols":7,"coeffs":[{}]}}"#, entries.join(",")),
    )
    .unwrap();
    let out = stdout(&[
        "psi", "--color", "blue", "--p", "13", "--poly",
        path.to_str().unwrap(),
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"]["coeffs"], serde_json::json!([5]));
    assert_eq!(v["k"], serde_json::Value::Null);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["psi", "--color", "blue", "--p", "13", "--k", "2", "--l", "6", "--explain"],
        vec!["tables", "--which", "omega", "--max", "4", "--format", "csv"],
        vec!["circle", "--color", "red", "--p", "17"],
        vec!["field", "--p", "3", "--r", "3"],
        vec!["verify", "--suite", "axioms", "--p-list", "5", "--seed", "42"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "unstable output for {args:?}");
    }
}

#[test]
fn circle_listing_matches_both_routes() {
    let a = stdout(&["circle", "--color", "blue", "--p", "7", "--route", "enumerate"]);
    let b = stdout(&["circle", "--color", "blue", "--p", "7", "--route", "parametrize"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn flag_errors_exit_2() {
    let out = chromasum(&["psi", "--color", "blue", "--p", "13"]); // no input
    assert_eq!(out.status.code(), Some(2));
    let out = chromasum(&["tables", "--which", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chromasum(&["tables", "--which", "omega", "--max", "9999"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn math_errors_exit_1() {
    // x^2 - 1 is reducible over F_7
    let out = chromasum(&[
        "psi", "--color", "blue", "--p", "7", "--r", "2", "--modulus", "-1,0,1", "--k", "0",
        "--l", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("irreducible"));
    // 9 is not prime
    let out = chromasum(&["field", "--p", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suite_passes_and_exits_0() {
    let out = chromasum(&[
        "verify", "--suite", "oracle", "--p-list", "3,5,7", "--max-r", "2", "--max-degree", "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"), "{text}");
}

#[test]
fn bench_reports_agreeing_methods() {
    let out = stdout(&["bench", "--color", "blue", "--p", "13", "--max-degree", "64", "--reps", "1"]);
    assert!(out.contains("program"));
    assert!(out.contains("brute"));
    assert!(out.contains("closed"));
}

#[test]
fn q_ceiling_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_chromasum"))
        .args(["field", "--p", "251"])
        .env("CHROMASUM_Q_CEILING", "100")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ceiling"));
}
