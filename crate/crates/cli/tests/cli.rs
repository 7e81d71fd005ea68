use std::path::Path;
use std::process::{Command, Output};

use fockpoly_cli::output::is_exact;
use serde_json::Value;

fn fockpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fockpoly(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn structured(args: &[&str]) -> Value {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let v: Value = serde_json::from_str(&stdout(&full)).expect("valid json");
    assert!(is_exact(&v), "floats in {v}");
    v
}

fn code(args: &[&str]) -> Option<i32> {
    fockpoly(args).status.code()
}

fn matrix_file(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn jpoly_golden_strings() {
    let golden = [
        "x1",
        "x1^2 - x2",
        "x1^3 - 3*x1*x2 + 2*x3",
        "x1^4 - 6*x1^2*x2 + 8*x1*x3 + 3*x2^2 - 6*x4",
        "x1^5 - 10*x1^3*x2 + 20*x1^2*x3 + 15*x1*x2^2 - 30*x1*x4 - 20*x2*x3 + 24*x5",
    ];
    for (k, expected) in golden.iter().enumerate() {
        let k = (k + 1).to_string();
        assert_eq!(stdout(&["jpoly", &k]).trim(), *expected);
        assert_eq!(stdout(&["jpoly", &k, "--closed"]).trim(), *expected);
    }
    assert_eq!(
        stdout(&["jpoly", "4", "--plus"]).trim(),
        "x1^4 + 6*x1^2*x2 + 8*x1*x3 + 3*x2^2 + 6*x4"
    );
}

#[test]
fn jpoly_check_and_structured() {
    assert!(stdout(&["jpoly", "7", "--check"]).contains("agree: yes"));
    let v = structured(&["jpoly", "3"]);
    assert_eq!(v["polynomial"], "x1^3 - 3*x1*x2 + 2*x3");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[2]["symbol"], "[0,0,1]");
    assert_eq!(terms[2]["coefficient"], "2");
}

#[test]
fn convert_examples() {
    assert_eq!(
        stdout(&["convert", "--to", "elementary", "2", "6", "14"]).trim(),
        "11"
    );
    assert_eq!(
        stdout(&["convert", "--to", "wronski", "1", "6"]).trim(),
        "6"
    );
    assert_eq!(
        stdout(&["convert", "--to", "wronski", "2", "6", "14"]).trim(),
        "25"
    );
    assert_eq!(
        stdout(&["convert", "--to", "elementary", "3", "6", "14", "36"]).trim(),
        "6"
    );
    assert_eq!(
        stdout(&["convert", "--to", "wronski", "3", "6", "14", "36"]).trim(),
        "90"
    );
    assert_eq!(
        stdout(&["convert", "--to", "elementary", "1", "-7/2"]).trim(),
        "-7/2"
    );
    let v = structured(&["convert", "--to", "wronski", "2", "6", "14"]);
    assert_eq!(v["value"], "25");
}

#[test]
fn convert_usage_errors() {
    assert_eq!(
        code(&["convert", "--to", "elementary", "3", "6", "14"]),
        Some(2)
    );
    assert_eq!(
        code(&["convert", "--to", "elementary", "1", "0.5"]),
        Some(2)
    );
    assert_eq!(
        code(&["convert", "--to", "elementary", "1", "1/0"]),
        Some(2)
    );
    assert_eq!(code(&["convert", "--to", "cubic", "1", "1"]), Some(2));
}

#[test]
fn classes_tables() {
    let out = stdout(&["classes", "3"]);
    assert!(out.contains("(1,1,1)") && out.contains("[3]"));
    assert!(out.trim_end().ends_with("total 6"));
    let out = stdout(&["classes", "1"]);
    assert!(out.contains("[1]") && out.trim_end().ends_with("total 1"));
    let out = stdout(&["classes", "10"]);
    assert!(out
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>()[1..] == ["[3,0,1,1]", "50400"]));
    assert!(out.trim_end().ends_with("total 3628800"));
}

#[test]
fn classes_verify() {
    let out = stdout(&["classes", "5", "--verify"]);
    assert!(!out.contains("NO"));
    let v = structured(&["classes", "4", "--verify"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["match"] == true));
    assert_eq!(code(&["classes", "9", "--verify"]), Some(3));
    assert_eq!(code(&["classes", "0"]), Some(2));
}

#[test]
fn invariants_of_small_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let id = matrix_file(
        dir.path(),
        "id.json",
        r#"{"n":3,"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let out = stdout(&["invariants", &id]);
    assert!(out.contains("I = (3, 3, 3)"));
    for m in ["minors", "leverrier", "cauchy", "antisym"] {
        assert!(out.contains(&format!("J[{m}] = (3, 3, 1)")), "{out}");
    }
    assert!(out.contains("agreement: yes"));

    let diag = matrix_file(
        dir.path(),
        "diag.json",
        r#"{"n":3,"entries":[["1","0","0"],["0","2","0"],["0","0","3"]]}"#,
    );
    let v = structured(&["invariants", &diag, "--methods", "cauchy,minors"]);
    assert_eq!(v["I"], serde_json::json!(["6", "14", "36"]));
    assert_eq!(v["J"]["cauchy"], serde_json::json!(["6", "11", "6"]));
    assert_eq!(v["J"]["minors"], serde_json::json!(["6", "11", "6"]));
    assert_eq!(v["agree"], true);

    let frac = matrix_file(
        dir.path(),
        "frac.json",
        r#"{"n":2,"entries":[["1/2","-1/3"],["2","0"]]}"#,
    );
    assert!(stdout(&["invariants", &frac]).contains("J[minors] = (1/2, 2/3)"));
}

#[test]
fn invariants_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = matrix_file(dir.path(), "bad.json", r#"{"n":2,"entries":[["1","0"]]}"#);
    assert_eq!(code(&["invariants", &bad]), Some(2));
    let float = matrix_file(dir.path(), "f.json", r#"{"n":1,"entries":[["0.5"]]}"#);
    assert_eq!(code(&["invariants", &float]), Some(2));
    assert_eq!(code(&["invariants", "/nonexistent/matrix.json"]), Some(2));

    let entries: Vec<Vec<String>> = (0..8)
        .map(|i| (0..8).map(|j| ((i + j) % 3).to_string()).collect())
        .collect();
    let big = serde_json::json!({ "n": 8, "entries": entries }).to_string();
    let big = matrix_file(dir.path(), "big.json", &big);
    assert_eq!(
        code(&["invariants", &big, "--methods", "minors,nope"]),
        Some(2)
    );
    assert_eq!(
        code(&["invariants", &big, "--methods", "minors,antisym"]),
        Some(3)
    );
    assert!(
        stdout(&["invariants", &big, "--methods", "minors,leverrier,cauchy"])
            .contains("agreement: yes")
    );
}

#[test]
fn bench_columns_and_determinism() {
    let args = [
        "--seed",
        "7",
        "bench",
        "--nmax",
        "3",
        "--kmax",
        "3",
        "--repeats",
        "1",
    ];
    let out = stdout(&args);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,k,J,minors_ns,leverrier_ns,cauchy_ns,antisym_ns"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for row in &rows {
        assert_eq!(row.len(), 7);
        assert!(row[3..].iter().all(|t| t.parse::<u64>().is_ok()));
    }
    let values = |text: &str| -> Vec<String> {
        text.lines()
            .skip(1)
            .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
            .collect()
    };
    assert_eq!(values(&out), values(&stdout(&args)));

    let skipped = stdout(&[
        "bench",
        "--nmax",
        "3",
        "--kmax",
        "3",
        "--repeats",
        "1",
        "--antisym-budget",
        "10",
    ]);
    let last: Vec<&str> = skipped.lines().last().unwrap().split(',').collect();
    assert_eq!(last[6], "skipped");
    assert!(last[3].parse::<u64>().is_ok());

    let v = structured(&["bench", "--nmax", "2", "--kmax", "2", "--repeats", "1"]);
    assert_eq!(v["agree"], true);
}

#[test]
fn verify_suite_passes() {
    let out = stdout(&["verify", "--max-k", "6", "--max-n", "4"]);
    assert!(
        out.lines().filter(|l| l.starts_with("PASS")).count() == 8,
        "{out}"
    );
    assert!(out.trim_end().ends_with("verify: all passed"));
    let v = structured(&["verify", "--check", "lowering", "--check", "lax"]);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert_eq!(v["passed"], true);
    assert_eq!(code(&["verify", "--check", "bogus"]), Some(2));
}
