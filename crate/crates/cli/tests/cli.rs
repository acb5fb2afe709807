//! End-to-end runs of the `biharm` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn biharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biharm")).args(args).output().expect("binary runs")
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("valid JSON")
}

#[test]
fn verify_corollary_reports_two_thirds() {
    let out = biharm(&["verify", "corollary-c1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let h = report["computed"]["mean_curvature"]["value"].as_f64().unwrap();
    assert!((h - 2.0 / 3.0).abs() < 1e-10);
    assert_eq!(report["computed"]["mean_curvature"]["symbolic"], "2/3");
    assert_eq!(report["computed"]["grid"], 5);
}

#[test]
fn verify_cylinder_reports_one_half() {
    let out = biharm(&["verify", "cylinder-c1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let h = json(&out)["computed"]["mean_curvature"]["value"].as_f64().unwrap();
    assert!((h - 0.5).abs() < 1e-10);
}

#[test]
fn tolerance_below_noise_floor_fails() {
    let out = biharm(&["verify", "corollary-c1", "--tol", "1e-20"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn every_registered_example_passes() {
    let list = biharm(&["list"]);
    let names = String::from_utf8(list.stdout).unwrap();
    for name in names.lines() {
        let out = biharm(&["verify", name, "--grid", "3"]);
        assert_eq!(out.status.code(), Some(0), "{name}:\n{}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(biharm(&["verify", "no-such-example"]).status.code(), Some(2));
    assert_eq!(biharm(&["verify"]).status.code(), Some(2));
    assert_eq!(biharm(&["classify"]).status.code(), Some(2));
    assert_eq!(biharm(&["classify", "--c-sweep", "1:0:0.5"]).status.code(), Some(2));
    assert_eq!(biharm(&["classify", "--c-sweep", "garbage"]).status.code(), Some(2));
    assert_eq!(biharm(&["classify", "--mode", "minus4", "--c", "2"]).status.code(), Some(2));
}

#[test]
fn classify_c1_has_one_tuple_and_no_products() {
    let out = biharm(&["classify", "--c", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["computed"]["tuples"].as_array().unwrap().len(), 1);
    assert!(r["computed"]["case_ii"].as_array().unwrap().is_empty());
    assert_eq!(r["computed"]["traces"].as_array().unwrap().len(), 2);
}

#[test]
fn classify_below_threshold_is_empty() {
    let out = biharm(&["classify", "--c", "-0.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["computed"]["tuples"].as_array().unwrap().is_empty());
    assert!(r["computed"]["case_ii"].as_array().unwrap().is_empty());
}

#[test]
fn classify_minus4_has_three_tuples_and_one_product() {
    let out = biharm(&["classify", "--mode", "minus4", "--format", "json", "--fallback-starts", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["computed"]["tuples"].as_array().unwrap().len(), 3);
    assert_eq!(r["computed"]["case_ii"].as_array().unwrap().len(), 1);
}

#[test]
fn classify_sweep_lists_each_value() {
    let out = biharm(&["classify", "--c-sweep", "0:1:0.5", "--format", "json", "--fallback-starts", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let results = json(&out)["computed"]["results"].as_array().unwrap().clone();
    let cs: Vec<f64> = results.iter().map(|r| r["c"].as_f64().unwrap()).collect();
    assert_eq!(cs, vec![0.0, 0.5, 1.0]);
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        vec!["verify", "s5-surface", "--format", "json"],
        vec!["classify", "--c", "1", "--format", "json", "--fallback-starts", "0"],
    ] {
        let out = biharm(&args);
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed = biharmonic::report::VerificationReport::from_json(&text).unwrap();
        assert_eq!(parsed.to_json() + "\n", text);
    }
}

#[test]
fn csv_has_fixed_header_and_one_row_per_check() {
    let out = biharm(&["verify", "s5-surface", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check,residual,tolerance,pass"));
    let json_out = json(&biharm(&["verify", "s5-surface", "--format", "json"]));
    assert_eq!(lines.count(), json_out["checks"].as_array().unwrap().len());
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("biharm-{}.json", std::process::id()));
    let out = biharm(&["verify", "legendre-circle", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap()["subject"], "legendre-circle");
}
