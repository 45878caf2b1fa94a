use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn triortho(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triortho"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8")
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("valid JSON")
}

fn construct_to(dir: &TempDir, name: &str, args: &[&str]) -> std::path::PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", path.to_str().unwrap()]);
    let out = triortho(&full);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    path
}

fn verify(path: &Path) -> Output {
    triortho(&["verify", "--input", path.to_str().unwrap()])
}

#[test]
fn construct_41_12_6() {
    let out = triortho(&["construct", "--p", "41", "--l", "12", "--k", "6"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["params"]["n"], 35);
    assert_eq!(v["params"]["k"], 6);
    assert_eq!(v["params"]["d"], 6);
    assert_eq!(v["params"]["d_verified"], false);
    assert_eq!(v["epsilon"], serde_json::json!([1, 1, 1, 1, 1, 1]));
}

#[test]
fn construct_rejects_non_triply_even() {
    let out = triortho(&["construct", "--p", "7", "--l", "3", "--k", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("3l ≤ p+1 failed"), "{}", stderr(&out));
}

#[test]
fn construct_13_4_1_is_verified() {
    let v = json(&triortho(&["construct", "--p", "13", "--l", "4", "--k", "1"]));
    assert_eq!(v["params"]["d_verified"], true);
    assert_eq!(v["params"]["n"], 12);
    // PRS_{9,{0}} is MDS: the exact distance exceeds l − k by one.
    assert_eq!(v["params"]["d"], 4);
}

#[test]
fn construct_is_byte_identical() {
    let a = triortho(&["construct", "--p", "13", "--l", "4", "--k", "2"]);
    let b = triortho(&["construct", "--p", "13", "--l", "4", "--k", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parameter_errors() {
    assert_eq!(code(&triortho(&["construct", "--p", "12", "--l", "2", "--k", "1"])), 2);
    assert_eq!(code(&triortho(&["construct", "--p", "13", "--l", "4", "--k", "5"])), 2);
    assert_eq!(
        code(&triortho(&["construct", "--p", "13", "--l", "4", "--k", "1", "--budget", "9999"])),
        2
    );
    assert_eq!(code(&triortho(&["construct", "--p", "13", "--l", "4", "--k", "1", "--format", "csv"])), 2);
    assert_eq!(code(&triortho(&["search", "--p-max", "100001"])), 2);
    assert_eq!(code(&triortho(&["gamma", "--n", "10", "--k", "2", "--d", "1"])), 2);
}

#[test]
fn verify_constructed_code() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(&dir, "p7.json", &["--p", "7", "--l", "2", "--k", "1"]);
    let out = verify(&path);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_detects_edited_epsilon() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(&dir, "p7.json", &["--p", "7", "--l", "2", "--k", "1"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["epsilon"] = serde_json::json!([2]);
    std::fs::write(&path, v.to_string()).unwrap();
    let out = verify(&path);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    let eps = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "epsilon")
        .unwrap();
    assert_eq!(eps["status"], "fail");
}

#[test]
fn verify_detects_edited_matrix() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(&dir, "p13.json", &["--p", "13", "--l", "4", "--k", "1"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["H0"][0][0] = serde_json::json!((v["H0"][0][0].as_u64().unwrap() + 1) % 13);
    std::fs::write(&path, v.to_string()).unwrap();
    assert_eq!(code(&verify(&path)), 1);
}

#[test]
fn verify_io_errors() {
    let dir = TempDir::new().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(code(&verify(&empty)), 3);
    assert_eq!(code(&verify(&dir.path().join("missing.json"))), 3);
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"p\": 7}").unwrap();
    assert_eq!(code(&verify(&junk)), 3);
}

#[test]
fn verify_text_format() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(&dir, "p7.json", &["--p", "7", "--l", "2", "--k", "1"]);
    let out = triortho(&["verify", "--input", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("all claims hold\n"));
}

#[test]
fn gamma_command() {
    let out = triortho(&["gamma", "--n", "83", "--k", "14", "--d", "15"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("0.657"), "{}", stdout(&out));
    let v = json(&triortho(&["gamma", "--n", "35", "--k", "6", "--d", "6", "--format", "json"]));
    assert!((v["gamma"].as_f64().unwrap() - 0.984278).abs() < 1e-6);
}

#[test]
fn simulate_p7() {
    let out = triortho(&["simulate", "--p", "7", "--l", "2", "--k", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    assert!(v["max_deviation"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["gate"], "U_{1,3}");
    assert_eq!(v["code_id"], "p7-l2-k1-A0");
}

#[test]
fn simulate_from_descriptor_and_qutrit() {
    let dir = TempDir::new().unwrap();
    let path = construct_to(&dir, "q.json", &["--qutrit"]);
    let out = triortho(&["simulate", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["gate"], "U_{2,1}");
    assert!(v["max_deviation"].as_f64().unwrap() < 1e-9);
    assert_eq!(code(&verify(&path)), 0);
}

#[test]
fn simulate_cap() {
    let out = triortho(&["simulate", "--p", "97", "--l", "29", "--k", "14"]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn from_matrix_roundtrip() {
    let dir = TempDir::new().unwrap();
    let m = dir.path().join("h.txt");
    std::fs::write(&m, "7 2 6\n6 6 6 6 6 6\n1 2 3 4 5 6\n").unwrap();
    let out = triortho(&["construct", "--from-matrix", m.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["H1"], serde_json::json!([[6, 6, 6, 6, 6, 6]]));
    assert_eq!(v["H0"], serde_json::json!([[1, 2, 3, 4, 5, 6]]));
    assert_eq!(v["l"], Value::Null);
    std::fs::write(&m, "7 2 6\n6 6 6\n").unwrap();
    assert_eq!(code(&triortho(&["construct", "--from-matrix", m.to_str().unwrap()])), 3);
}

#[test]
fn search_csv_and_json() {
    let out = triortho(&["search", "--p-max", "100"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,l,k,n,d,gamma"));
    let hit = lines.any(|l| {
        let f: Vec<&str> = l.split(',').collect();
        f[3] == "83" && f[5].parse::<f64>().unwrap() < 0.6779
    });
    assert!(hit);
    assert_eq!(triortho(&["search", "--p-max", "100"]).stdout, out.stdout);
    let v = json(&triortho(&["search", "--p-max", "1000", "--format", "json"]));
    assert_eq!(v["monotone_ok"], true);
    assert!(v["c_fit"].as_f64().unwrap().is_finite());
}

#[test]
fn search_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("s.csv");
    let out = triortho(&["search", "--p-max", "50", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("p,l,k,n,d,gamma\n"));
}

#[test]
fn selftest_exit_codes() {
    let out = triortho(&["selftest", "--only", "1,3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 2);
    assert_eq!(code(&triortho(&["selftest", "--only", "11"])), 2);
}
