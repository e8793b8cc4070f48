//! End-to-end tests of the command-line interface: output formats, exit
//! codes, and byte determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn table_text_has_label_column_plus_class_columns() {
    let out = run(&["table", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let header = text
        .lines()
        .find(|l| l.trim_start().starts_with("class"))
        .expect("header line");
    // n = 4 has 5 conjugacy classes, plus the label column
    assert_eq!(header.split_whitespace().count(), 6, "{header:?}");
    assert!(text.contains("rho"));
}

#[test]
fn table_json_shape_for_n5() {
    let out = run(&["table", "--n", "5", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["n"], 5);
    assert_eq!(parsed["classes"].as_array().unwrap().len(), 4);
    // rows: triv, det, pi2(1), pi2(2), rho
    assert_eq!(parsed["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn table_rejects_small_n_with_usage_exit() {
    let out = run(&["table", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn count_series_values() {
    let out = run(&["count", "--n", "3", "--rmax", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for (r, h) in [(0, 1u64), (1, 6), (2, 21), (3, 55), (4, 120)] {
        assert!(
            text.lines().any(|l| {
                let mut it = l.split_whitespace();
                it.next() == Some(&r.to_string()) && it.next() == Some(&h.to_string())
            }),
            "missing row ({r}, {h}) in {text}"
        );
    }
    assert!(text.contains("h* = [1, 1, 1]"));

    let out = run(&["count", "--n", "4", "--rmax", "2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "r,H\n0,1\n1,8\n2,34\n");
}

#[test]
fn count_pie_variant_agrees_with_closed() {
    let closed = run(&["count", "--n", "3", "--rmax", "2", "--format", "csv"]);
    let pie = run(&[
        "count",
        "--n",
        "3",
        "--rmax",
        "2",
        "--variant",
        "pie",
        "--format",
        "csv",
    ]);
    assert!(closed.status.success() && pie.status.success());
    assert_eq!(stdout(&closed), stdout(&pie));
}

#[test]
fn count_variant_parity_mismatch_is_usage_error() {
    let out = run(&["count", "--n", "4", "--rmax", "2", "--variant", "pie"]);
    assert_eq!(out.status.code(), Some(2));
    let conv_odd = run(&["count", "--n", "5", "--rmax", "2", "--variant", "conv"]);
    assert_eq!(conv_odd.status.code(), Some(2));
}

#[test]
fn oracle_budget_exhaustion_exits_3() {
    let out = run(&[
        "count",
        "--n",
        "3",
        "--rmax",
        "6",
        "--variant",
        "oracle",
        "--max-tuples",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn count_verify_oracle_passes_for_small_inputs() {
    let out = run(&["count", "--n", "4", "--rmax", "2", "--verify-oracle"]);
    assert!(out.status.success());
}

#[test]
fn idem_pi2_matches_known_matrix() {
    let out = run(&["idem", "--n", "3", "--which", "pi2:1", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = &parsed["members"][0]["entries"];
    let e00 = entries[0][0][0].as_f64().unwrap();
    let e01 = entries[0][1][0].as_f64().unwrap();
    assert!((e00 - 2.0 / 3.0).abs() < 1e-12);
    assert!((e01 + 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn idem_chi_prime_is_alternating() {
    let out = run(&["idem", "--n", "4", "--which", "chi'"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("det*sgn:"));
    assert!(text.contains("0.250000+0.000000i"));
    assert!(text.contains("-0.250000+0.000000i"));
}

#[test]
fn idem_quat_emits_four_matrices() {
    let out = run(&["idem", "--n", "3", "--which", "quat:1", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["members"].as_array().unwrap().len(), 4);
}

#[test]
fn idem_selector_out_of_range_is_usage_error() {
    let out = run(&["idem", "--n", "5", "--which", "pi2:7"]);
    assert_eq!(out.status.code(), Some(2));
    let chi_odd = run(&["idem", "--n", "5", "--which", "chi'"]);
    assert_eq!(chi_odd.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports() {
    let out = run(&["verify", "--n", "3"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("0 failed"));

    let json = run(&["verify", "--n", "4", "--format", "json"]);
    assert!(json.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(parsed["failed"], 0);
    let names: Vec<&str> = parsed["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"checkerboard_identities"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["table", "--n", "6"],
        vec!["table", "--n", "6", "--format", "json"],
        vec!["count", "--n", "5", "--rmax", "6", "--format", "csv"],
        vec!["idem", "--n", "4", "--which", "all"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("dihedral-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.json");
    let out = run(&[
        "export",
        "--n",
        "4",
        "--what",
        "series",
        "--rmax",
        "5",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let contents = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(parsed["values"].as_array().unwrap().len(), 6);
    assert_eq!(parsed["hstar"], serde_json::json!(["1", "2", "1"]));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn export_checkerboard_csv() {
    let out = run(&["export", "--n", "4", "--what", "j1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("1,0,1,0"));
    let odd = run(&["export", "--n", "5", "--what", "j1"]);
    assert_eq!(odd.status.code(), Some(2));
}

#[test]
fn precision_flag_controls_float_display() {
    let out = run(&["idem", "--n", "3", "--which", "triv", "--precision", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0.333+0.000i"));
    let bad = run(&["idem", "--n", "3", "--which", "triv", "--precision", "0"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_failure_exits_1() {
    // a tolerance no float matrix can meet forces reported failures
    let out = Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(["verify", "--n", "5"])
        .env("DIHEDRAL_EPS", "1e-300")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn eps_environment_variable_is_honored() {
    // an absurdly tight tolerance makes the float idempotent set unbuildable
    let out = Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(["idem", "--n", "7", "--which", "all"])
        .env("DIHEDRAL_EPS", "1e-300")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let ok = Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(["idem", "--n", "7", "--which", "all"])
        .env("DIHEDRAL_EPS", "1e-6")
        .output()
        .expect("binary runs");
    assert!(ok.status.success());
}
