//! End-to-end checks of the command-line surface: flags, exit codes, and
//! the machine-readable output formats.

use std::process::{Command, Output};

fn dihpg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dihpg"))
        .args(args)
        .env_remove("DIHPG_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_even_solution_value() {
    let out = dihpg(&[
        "eval",
        "--k",
        "0",
        "--l",
        "0",
        "--a",
        "2",
        "--z",
        "0.25",
        "--solution",
        "at0-even",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let re = doc["value"]["re"].as_f64().unwrap();
    assert!((re - 20.0 / 9.0).abs() < 1e-12, "got {re}");
    assert!((re - 2.222222222222).abs() < 1e-11);
}

#[test]
fn eval_at1_closed_form_and_rational_input() {
    let out = dihpg(&[
        "eval",
        "--k",
        "0",
        "--l",
        "0",
        "--a",
        "1",
        "--z",
        "3/4",
        "--solution",
        "at1",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let re = doc["value"]["re"].as_f64().unwrap();
    assert!((re - 4.0 / 3.0).abs() < 1e-12, "got {re}");
}

#[test]
fn eval_domain_violation_exits_2() {
    let out = dihpg(&[
        "eval",
        "--k",
        "0",
        "--l",
        "0",
        "--a",
        "1",
        "--z",
        "1.5",
        "--solution",
        "at0-even",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("domain"), "stderr: {err}");
}

#[test]
fn eval_unknown_flag_exits_2() {
    let out = dihpg(&["eval", "--bogus", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_theta_norm_n_max() {
    let out = dihpg(&["verify", "--id", "theta-norm", "--n-max", "64"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("exact, 64/64"), "got: {text}");
}

#[test]
fn verify_triangular_zero() {
    let out = dihpg(&["verify", "--id", "f2-triangular-zero"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("exact"));
}

#[test]
fn verify_unknown_identity_exits_2() {
    let out = dihpg(&["verify", "--id", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_are_reproducible() {
    let dir1 = std::env::temp_dir().join("dihpg-rep-1");
    let dir2 = std::env::temp_dir().join("dihpg-rep-2");
    for (dir, _) in [(&dir1, 0), (&dir2, 1)] {
        let out = dihpg(&[
            "verify",
            "--all",
            "--seed",
            "7",
            "--samples",
            "4",
            "--out",
            dir.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "verify --all failed");
    }
    let csv1 = std::fs::read(dir1.join("report.csv")).unwrap();
    let csv2 = std::fs::read(dir2.join("report.csv")).unwrap();
    assert_eq!(csv1, csv2, "reports differ between identical runs");
    let json1 = std::fs::read(dir1.join("summary.json")).unwrap();
    let json2 = std::fs::read(dir2.join("summary.json")).unwrap();
    assert_eq!(json1, json2);
    let parsed: serde_json::Value = serde_json::from_slice(&json1).unwrap();
    assert_eq!(parsed["failures"], 0);
}

#[test]
fn klein_covering_json_schema() {
    let out = dihpg(&["klein", "--k", "1", "--l", "0", "--n", "1", "--m", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["degree"], 3);
    assert_eq!(doc["theta1"], serde_json::json!([["1", "1"], ["-3", "4"]]));
    assert_eq!(doc["theta2"], serde_json::json!([["1", "4"]]));
    assert_eq!(doc["c"].as_array().unwrap().len(), 2);
}

#[test]
fn klein_trivial_covering() {
    let out = dihpg(&["klein", "--k", "0", "--l", "0", "--n", "1", "--m", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["degree"], 1);
    assert_eq!(doc["theta1"], serde_json::json!([["1", "1"]]));
    assert_eq!(doc["theta2"], serde_json::json!([["1", "1"]]));
}

#[test]
fn klein_gcd_violation_exits_2() {
    let out = dihpg(&["klein", "--k", "1", "--l", "1", "--n", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("gcd"));
}

#[test]
fn theta_pair_output() {
    let out = dihpg(&["theta", "--n", "3"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["theta1"], serde_json::json!([["1", "1"], ["3", "1"]]));
    assert_eq!(doc["theta2"], serde_json::json!([["3", "1"], ["1", "1"]]));
    assert_eq!(doc["identities_exact"], true);
}

#[test]
fn eval_infinity_flag_names() {
    for sol in ["inf-1", "inf-2"] {
        let out = dihpg(&[
            "eval",
            "--k",
            "1",
            "--l",
            "0",
            "--a",
            "0.8",
            "--z",
            "0.2",
            "--solution",
            sol,
        ]);
        assert!(out.status.success(), "{sol} failed");
    }
}

#[test]
fn classify_verdicts() {
    let out = dihpg(&["classify", "--k", "0", "--l", "0", "--m", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("Logarithmic"));

    let out = dihpg(&["classify", "--k", "1", "--l", "0", "--m", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("CyclicOrder2"));

    let out = dihpg(&["classify", "--k", "0", "--l", "2", "--a-int", "-3"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("Logarithmic"));

    let out = dihpg(&["classify", "--k", "1", "--l", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
