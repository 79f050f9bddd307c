use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcd")).args(args).output().expect("spawn hopfcd")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("stdout is not JSON: {e}\n{}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_passes_and_reports_each_suite() {
    let out = hopfcd(&["--level", "4", "--samples", "20", "verify", "lemma-1.1", "prop-2.x"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(names, ["lemma-1.1", "prop-2.x"]);
}

#[test]
fn output_does_not_depend_on_jobs() {
    let args = |jobs: &'static str| ["--level", "4", "--samples", "15", "--seed", "9", "--jobs", jobs, "verify", "cor-1.2", "lemma-2.x", "thm-3.8", "dims"];
    let one = hopfcd(&args("1"));
    let four = hopfcd(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn same_seed_gives_identical_output() {
    let a = hopfcd(&["--samples", "10", "--seed", "1", "verify", "lemma-2.x"]);
    let b = hopfcd(&["--samples", "10", "--seed", "1", "verify", "lemma-2.x"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hopfcd(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(hopfcd(&["--level", "9", "verify", "lemma-1.1"]).status.code(), Some(2));
    assert_eq!(hopfcd(&["--samples", "0", "verify", "lemma-1.1"]).status.code(), Some(2));
    assert_eq!(hopfcd(&["--mode", "float", "verify", "lemma-1.1"]).status.code(), Some(2));
    assert_eq!(hopfcd(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn exhaustive_search_certificates_round_trip_through_verify_cert() {
    let out = hopfcd(&["--level", "4", "search", "--method", "exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let certs = v["certificates"].as_array().unwrap();
    assert_eq!(v["count"].as_u64().unwrap() as usize, certs.len());
    assert!(!certs.is_empty());

    let path = scratch("cert.json");
    std::fs::write(&path, serde_json::to_string(&certs[0]).unwrap()).unwrap();
    let check = hopfcd(&["verify-cert", path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(json(&check)["passed"], true);

    let mut bad = certs[0].clone();
    bad["b"][0] = Value::String("1".into());
    let path = scratch("cert_bad.json");
    std::fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    assert_eq!(hopfcd(&["verify-cert", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn octonion_search_finds_nothing() {
    let out = hopfcd(&["--level", "3", "search"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 0);
}

#[test]
fn malformed_json_reports_a_byte_offset() {
    let path = scratch("broken.json");
    std::fs::write(&path, "{\"level\": 5,\n \"coeffs\": [1, }").unwrap();
    let out = hopfcd(&["retract", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte"), "{err}");
}

#[test]
fn basis_table_has_one_row_per_basis_element() {
    let out = hopfcd(&["--level", "3", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["rows"].as_array().expect("rows");
    assert_eq!(rows.len(), 8);
}

#[test]
fn orbit_of_a_certificate_stays_in_its_octonion_span() {
    let search = json(&hopfcd(&["--level", "4", "search"]));
    let cert = &search["certificates"][0];
    let mut coeffs = cert["a"].as_array().unwrap().clone();
    coeffs.extend(cert["b"].as_array().unwrap().iter().cloned());
    let alpha = serde_json::json!({ "level": 5, "coeffs": coeffs });
    let path = scratch("alpha.json");
    std::fs::write(&path, alpha.to_string()).unwrap();
    let out = hopfcd(&["orbit", path.to_str().unwrap(), "--g", "3/5,0,4/5,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["same_orbit"], true);
}
