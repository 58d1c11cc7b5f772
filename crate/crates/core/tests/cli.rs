use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

use isoperimetry::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoperimetry"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("isoperimetry").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid json")
}

#[test]
fn orthogonality_row_counts() {
    let (code, out, _) = in_process(&["orthogonality", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "kind,n,m,computed,expected,residual");
    assert_eq!(lines.len() - 1, 192);

    let (code, out, _) = in_process(&["orthogonality", "--max-order", "1"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    let kinds: Vec<&str> = entries.iter().map(|e| e["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["cos*cos", "sin*sin", "cos*sin"]);
    assert_eq!(v["config"]["tol"].as_f64(), Some(1e-10));
}

#[test]
fn parseval_on_a_coefficient_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    fs::write(&path, r#"{"a0": 0.0, "a": [3.0, 0.0], "b": [0.0, 4.0]}"#).unwrap();
    let (code, out, _) = in_process(&["parseval", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert!((v["parseval"]["lhs"].as_f64().unwrap() - 25.0).abs() <= 1e-12);
    assert_eq!(v["parseval"]["rhs"].as_f64(), Some(25.0));
    assert_eq!(v["wirtinger"]["parseval_fprime"].as_f64(), Some(9.0 + 64.0));

    fs::write(&path, r#"{"a0": 2.0, "a": [], "b": []}"#).unwrap();
    let (code, out, err) = in_process(&["parseval", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("Wirtinger check skipped"), "{err}");
    assert!(json(&out)["wirtinger"].is_null());
}

#[test]
fn random_parseval_is_seeded() {
    let (code, a, _) = in_process(&["parseval", "--random", "32", "--seed", "42"]);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = in_process(&["parseval", "--random", "32", "--seed", "42"]);
    let (_, c, _) = in_process(&["parseval", "--random", "32", "--seed", "43"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert!(json(&a)["parseval"]["residual"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn analyze_reports_and_csv() {
    let spec = r#"[{"id": "unit", "kind": "circle", "params": {"r": 1.0}},
                   {"kind": "ellipse", "params": {"a": 2.0, "b": 1.0}, "reversed": true}]"#;
    let (code, out, _) = in_process(&["analyze", "--spec", spec]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["all_chain_ok"], Value::Bool(true));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports[0]["id"], "unit");
    assert_eq!(reports[1]["id"], "curve-1");
    assert!((reports[1]["report"]["A_shoelace"].as_f64().unwrap() + 2.0 * std::f64::consts::PI).abs() <= 1e-9);
    assert_eq!(reports[1]["report"]["orientation"], "clockwise");

    let (code, out, _) = in_process(&["analyze", "--spec", spec, "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "curve_id,L,A,ratio,deficit,chain_ok");
    assert!(lines[1].starts_with("unit,6.2831853071795"));
    assert!(lines[2].ends_with(",true"));
}

#[test]
fn numbers_carry_seventeen_digits() {
    let (_, out, _) = in_process(&["analyze", "--spec", r#"{"kind": "circle", "params": {"r": 1.0}}"#]);
    assert!(out.contains("\"L\": 6.2831853071795862e0"), "{out}");
}

#[test]
fn malformed_inputs_exit_one() {
    let (code, _, err) = in_process(&["analyze", "--spec", r#"{"kind": "circle", "params": {"r": -1.0}}"#]);
    assert_eq!(code, EXIT_INPUT);
    assert!(!err.is_empty());
    let (code, _, err) = in_process(&["analyze", "--spec", r#"[{"kind": "ellipse", "params": {"a": 1.0}}]"#]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("curve 0"), "{err}");
    let (code, _, _) = in_process(&["analyze", "--spec", "not json"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = in_process(&["analyze"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = in_process(&["random-suite", "--count", "0"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = in_process(&["orthogonality", "--tol", "-1"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = in_process(&["no-such-command"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn violations_exit_two() {
    let (code, out, _) = in_process(&["orthogonality", "--max-order", "4", "--tol", "1e-300"]);
    assert_eq!(code, EXIT_VIOLATION);
    assert_eq!(json(&out)["ok"], Value::Bool(false));
}

#[test]
fn reparam_writes_samples_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("samples.csv");
    let (code, out, _) = in_process(&[
        "reparam",
        "--spec",
        r#"{"kind": "ellipse", "params": {"a": 2.0, "b": 1.0}}"#,
        "--grid",
        "128",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "theta,f,g,df,dg");
    assert_eq!(lines.len(), 129);
    let first: Vec<f64> = lines[1].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[1] - 2.0).abs() <= 1e-12);
}

#[test]
fn random_suite_is_deterministic_through_the_binary() {
    let args = ["random-suite", "--count", "6", "--seed", "1", "--order", "16"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&String::from_utf8(a.stdout).unwrap());
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);
    assert!(v["failures"].as_array().unwrap().is_empty());
    assert_eq!(v["config"]["seed"].as_u64(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bin(&["--help"]).status.code(), Some(EXIT_OK));
    assert_eq!(bin(&["--version"]).status.code(), Some(EXIT_OK));
}
