//! End-to-end CLI tests: exit codes, JSON determinism, machine-readable
//! error codes, chart retries, and output round-trips.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mucurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_run(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn verify_fixtures_exit_zero() {
    for f in ["cusp.curve", "nodal.curve", "quartic.curve"] {
        let out = run(&["verify", fixture(f).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{f}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn singular_cusp_json() {
    let v = json_run(&["singular", fixture("cusp.curve").to_str().unwrap(), "--json"]);
    assert_eq!(v["command"], "singular");
    assert_eq!(v["result"]["dres"], "t^2");
    assert_eq!(v["result"]["degree"], 2);
    let clusters = v["result"]["clusters"].as_array().unwrap();
    assert_eq!(clusters.len(), 1);
    assert_eq!(clusters[0]["point"], "(0 : 0 : 1)");
    assert_eq!(clusters[0]["multiplicity"], 2);
    assert_eq!(v["result"]["balanced"], true);
    assert!(v["input_hash"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn implicitize_quartic_round_trips() {
    let v = json_run(&["implicitize", fixture("quartic.curve").to_str().unwrap(), "--json"]);
    assert_eq!(v["result"]["deg_phi"], 1);
    assert_eq!(v["result"]["curve_degree"], 4);
    let c = v["result"]["implicit"].as_str().unwrap();
    let parsed = mucurve_core::parse_poly(c).unwrap();
    assert_eq!(parsed.to_string(), c);
    assert_eq!(parsed.degree_in(&[mucurve_core::Var::T1, mucurve_core::Var::T2, mucurve_core::Var::T3]), 4);
}

#[test]
fn json_deterministic_modulo_timing() {
    let strip = |mut v: Value| -> Value {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let file = fixture("quartic.curve");
    let a = strip(json_run(&["singular", file.to_str().unwrap(), "--json"]));
    let b = strip(json_run(&["singular", file.to_str().unwrap(), "--json"]));
    assert_eq!(a, b);
}

#[test]
fn subres_quartic() {
    let v = json_run(&["subres", fixture("quartic.curve").to_str().unwrap(), "--json"]);
    let list = v["result"]["subresultants"].as_array().unwrap();
    assert_eq!(list.len(), 3);
    assert_eq!(list[0], "-T1*T3 + T2^2 + T3^2");
}

#[test]
fn adjoints_cusp() {
    let v = json_run(&["adjoints", fixture("cusp.curve").to_str().unwrap(), "--json"]);
    let cands = v["result"]["candidates"].as_array().unwrap();
    assert_eq!(cands.len(), 2);
    let pencils = v["result"]["pencils"].as_array().unwrap();
    assert_eq!(pencils.len(), 1);
    assert_eq!(pencils[0], "X1*T2*T3 - X2*T1^2");
}

#[test]
fn chart_retries_recover_full_degree() {
    let file = fixture("cusp_at_infinity.curve");
    // without retries the D-resultant degree falls short
    let v0 = json_run(&["singular", file.to_str().unwrap(), "--json", "--chart-retries", "0"]);
    assert!(v0["result"]["degree"].as_u64().unwrap() < 2);
    assert!(v0["result"]["reparametrization"].is_null());
    // with retries a recorded reparametrization restores it
    let v = json_run(&["singular", file.to_str().unwrap(), "--json", "--seed", "7"]);
    assert_eq!(v["result"]["degree"], 2);
    assert!(!v["result"]["reparametrization"].is_null());
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["mubasis", fixture("bad_gcd.curve").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_GCD"));

    let out = run(&["mubasis", fixture("inhomogeneous.curve").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_NOT_HOMOGENEOUS"));

    let out = run(&["mubasis", "/nonexistent/file.curve"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_IO"));
}

#[test]
fn not_birational_reported() {
    let dir = std::env::temp_dir().join("mucurve-test-double.curve");
    std::fs::write(&dir, "field = QQ\ng1 = X1^2*X2^2\ng2 = X1^4\ng3 = X2^4\n").unwrap();
    let out = run(&["adjoints", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("E_NOT_BIRATIONAL"));
    // but mubasis and implicitize still work and report deg phi = 2
    let v = json_run(&["implicitize", dir.to_str().unwrap(), "--json"]);
    assert_eq!(v["result"]["deg_phi"], 2);
    assert_eq!(v["result"]["implicit"], "T1^2 - T2*T3");
}

#[test]
fn threads_env_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_mucurve"))
        .args(["generators", fixture("quartic.curve").to_str().unwrap()])
        .env("MUCURVE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
