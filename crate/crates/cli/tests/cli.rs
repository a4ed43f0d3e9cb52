use std::process::{Command, Output};

use serde_json::Value;

fn qrz9(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrz9")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn statuses(r: &Value, status: &str) -> Vec<String> {
    r["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|v| v["status"] == status)
        .map(|v| v["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn factor_lists_three_factors_for_eleven() {
    let out = qrz9(&["factor", "--n", "11"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["factors"].as_array().unwrap().len(), 3);
    assert_eq!(r["results"]["cyclic_codes_r"], "729");
}

#[test]
fn reports_are_byte_stable() {
    let a = qrz9(&["qr", "--p", "13", "--verify", "--extend", "parity", "--adjudicate-t7"]);
    let b = qrz9(&["qr", "--p", "13", "--verify", "--extend", "parity", "--adjudicate-t7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timing_ms"));
}

#[test]
fn findings_keep_exit_zero() {
    let out = qrz9(&["qr", "--p", "11", "--adjudicate-t7"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let findings = statuses(&r, "FINDING");
    assert!(findings.contains(&"t7/self-dual".to_string()));
    assert!(findings.contains(&"table/1+5J".to_string()));
    assert!(statuses(&r, "FAIL").is_empty());
    let corners = &r["results"]["theorem7"]["self_dual_corners"];
    assert_eq!(corners, &serde_json::json!([2, 7]));
    assert_eq!(r["results"]["theorem7"]["top_self_product"], 339);
}

#[test]
fn injected_fault_fails_with_witness() {
    let out = qrz9(&["verify-all", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let fails = statuses(&r, "FAIL");
    assert!(fails.contains(&"structure/G11".to_string()));
    let v = r["verdicts"].as_array().unwrap().iter().find(|v| v["name"] == "structure/G11").unwrap();
    assert!(v["witness"]["printed_row_not_in_code"].is_array());
}

#[test]
fn verify_all_passes() {
    let out = qrz9(&["verify-all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn json_flag_writes_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = qrz9(&["--json", path.to_str().unwrap(), "example1"]);
    assert!(out.status.success());
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file, report(&out));
    assert_eq!(file["results"]["distribution"]["counts"]["5"], "264");
}

#[test]
fn wdist_and_audit_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("code.json");
    std::fs::write(&code, r#"{"ring": "R", "length": 3, "c1": [[1, 2, 0]], "c2": [[0, 3, 3]]}"#).unwrap();
    let dist = dir.path().join("d.json");
    let out = qrz9(&["wdist", "--code", code.to_str().unwrap(), "--out", dist.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["results"]["method"], "sweep");
    let fast = qrz9(&["wdist", "--code", code.to_str().unwrap(), "--fast"]);
    assert_eq!(fast.status.code(), Some(2));

    let audit = qrz9(&["audit", "--dist", dist.to_str().unwrap(), "--cardinality", "27", "--t", "0", "--threshold", "1/27"]);
    assert!(audit.status.success());
    let a = report(&audit);
    assert_eq!(a["results"]["audit"]["low_weight_count"], "1");
    let tight = qrz9(&["audit", "--dist", dist.to_str().unwrap(), "--cardinality", "27", "--t", "0", "--threshold", "1/28"]);
    assert_eq!(tight.status.code(), Some(1));
}

#[test]
fn sweep_budget_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("code.json");
    std::fs::write(&code, r#"{"ring": "R", "length": 3, "c1": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "c2": [[3, 0, 0]]}"#).unwrap();
    let out = qrz9(&["--budget", "100", "wdist", "--code", code.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--full"));
    let full = qrz9(&["--budget", "100", "--threads", "2", "wdist", "--code", code.to_str().unwrap(), "--full"]);
    assert!(full.status.success());
    assert_eq!(report(&full)["results"]["audit"]["total"], "2187");
}

#[test]
fn gray_of_a_vector() {
    let out = qrz9(&["gray", "--vector", "1,0;0,1"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["results"]["image"], serde_json::json!([1, 1, 8, 1]));
    assert_eq!(r["results"]["lee_weight"], 4);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(qrz9(&["qr", "--p", "9"]).status.code(), Some(2));
    assert_eq!(qrz9(&["factor", "--n", "6"]).status.code(), Some(2));
    assert_eq!(qrz9(&["gray", "--vector", "1,0", "--matrix", "1,1,1,1"]).status.code(), Some(2));
}
