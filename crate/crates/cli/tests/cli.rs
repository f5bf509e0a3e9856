use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn vreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vreg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn temp_file(suffix: &str, body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn path_invariants() {
    let out = vreg(&["invariants", "--g6", "Ch"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["v"], 1);
    assert_eq!(v["beta"], 2);
    assert_eq!(v["reg"], 1);
    assert_eq!(v["schema"], 1);
}

#[test]
fn pentagon_invariants() {
    let v = json(&vreg(&["invariants", "--g6", "Dhc"]));
    assert_eq!(v["v"], 2);
    assert_eq!(v["im"], 1);
    assert_eq!(v["reg"], 2);
    assert_eq!(v["col"], 2);
}

#[test]
fn graph_file_formats_agree() {
    let g6 = temp_file(".g6", "Dhc\n");
    let edges = temp_file(".json", r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]}"#);
    let a = json(&vreg(&["reg", g6.path().to_str().unwrap()]));
    let b = json(&vreg(&["reg", edges.path().to_str().unwrap()]));
    assert_eq!(a["reg"], 2);
    assert_eq!(a["reg"], b["reg"]);
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(vreg(&["invariants", "--g6", "~~~"]).status.code(), Some(2));
    assert_eq!(vreg(&["reg", "--g6", "Ks_?AaYcA?"]).status.code(), Some(2));
    assert_eq!(vreg(&["reg", "/nonexistent/graph.g6"]).status.code(), Some(2));
    assert_eq!(vreg(&["--jobs", "0", "reg", "--g6", "Ch"]).status.code(), Some(2));
}

#[test]
fn strict_indeterminate_exits_3() {
    let args = ["--budget", "1", "--hochster-threshold", "3", "reg", "--g6", "Dhc"];
    let loose = vreg(&args);
    assert_eq!(loose.status.code(), Some(0));
    assert_eq!(json(&loose)["indeterminate"], true);
    let strict: Vec<&str> = std::iter::once("--strict").chain(args).collect();
    assert_eq!(vreg(&strict).status.code(), Some(3));
}

#[test]
fn negative_control_fails() {
    let out = vreg(&["gallery", "--profile", "negative-control"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let statuses: Vec<&str> = report["claims"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert!(statuses.contains(&"FAIL"));
}

#[test]
fn fast_profile_reports_skips() {
    let out = vreg(&["gallery", "--profile", "fast"]);
    let report = json(&out);
    let claims = report["claims"].as_array().unwrap();
    assert!(claims.iter().any(|c| c["status"] == "INDETERMINATE"));
    assert!(claims.iter().any(|c| c["id"] == "p4.invariants" && c["status"] == "PASS"));
}

#[test]
fn empty_catalog_prints_header() {
    let f = temp_file(".g6", "");
    let out = vreg(&["search", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "graph6\tv\treg\tgap\n");
}

#[test]
fn catalog_rows() {
    let f = temp_file(".g6", "Ch\nDhc\n");
    let out = vreg(&["search", f.path().to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(rows.contains(&"Ch\t1\t1\t0"));
    assert!(rows.contains(&"Dhc\t2\t2\t0"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = vreg(&["--output", path.to_str().unwrap(), "vnum", "--g6", "Ch"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["v"], 1);
}
