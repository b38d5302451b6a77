use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BETA: &str = "vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n";
const DELTA: &str = "vars: u v\npoint: [1, 0, 0, 0, 0]\npoint: [0, 1, 0, 0, 0]\npoint: [0, 0, 1, u, v]\n";
const FLAT: &str = "vars: u v\npoint: [1, 0, 0, 0, 0]\npoint: [0, 1, u, 0, 0]\npoint: [0, 0, 1, v, 0]\n";
// At (0,0) the third point coincides with the first.
const PINCHED: &str = "vars: u v\npoint: [1, 0, 0, 0, 0]\npoint: [0, 1, 0, 0, 0]\npoint: [1 + u, v, 0, u^2, v^2]\n";

fn focal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_focal")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_delta_json() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "delta.chart", DELTA);
    let o = focal(&["classify", &f, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""label":"Delta""#));
}

#[test]
fn degenerate_chart_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "flat.chart", FLAT);
    let o = focal(&["classify", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("DegenerateCongruence"));
    assert_eq!(focal(&["validate", &f]).status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "beta1.chart", BETA);
    let a = focal(&["classify", &f, "--seed", "9", "--samples", "7", "--json"]);
    let b = focal(&["classify", &f, "--seed", "9", "--samples", "7", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn conic_snapshot_of_worked_chart() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "beta1.chart", BETA);
    let o = focal(&["conic", &f, "--at", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("rank           2"));
    assert!(out.contains("(1:0), (0:1)"));

    let d = write(dir.path(), "delta.chart", DELTA);
    let o = focal(&["conic", &d, "--at", "1,1", "--json"]);
    let out = stdout(&o);
    assert!(out.contains(r#""rank":1"#) && out.contains(r#""kind":"all""#));
}

#[test]
fn conic_at_degenerate_base_fails() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "pinched.chart", PINCHED);
    let o = focal(&["conic", &f, "--at", "0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("another base point"));
    assert_eq!(focal(&["conic", &f, "--at", "nonsense"]).status.code(), Some(1));
}

#[test]
fn missing_file_is_an_error() {
    assert_eq!(focal(&["classify", "/nonexistent/x.chart"]).status.code(), Some(1));
}

#[test]
fn corpus_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let o = focal(&["corpus", "--class", "gamma2", "--count", "25", "--seed", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.join("gamma2_000.chart").exists() && out.join("gamma2_024.chart").exists());
    let v = focal(&["verify", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("25/25 match"));
}

#[test]
fn single_delta_corpus_is_classifiable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(focal(&["corpus", "--class", "delta", "--count", "1", "--seed", "0", "--out", out]).status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let f = dir.path().join("delta_000.chart");
    let o = focal(&["classify", f.to_str().unwrap(), "--json"]);
    assert!(stdout(&o).contains(r#""label":"Delta""#));
}

#[test]
fn wrong_expectation_is_a_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.chart", &format!("{BETA}expect: beta2\n"));
    write(dir.path(), "b.chart", &format!("{DELTA}expect: delta\n"));
    let o = focal(&["verify", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.contains("MISMATCH  a.chart  expected Beta2, got Beta1"));
    assert!(out.contains("1/2 match"));
}

#[test]
fn parallelism_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(focal(&["corpus", "--class", "alpha2", "--count", "6", "--seed", "4", "--out", out]).status.code(), Some(0));
    let one = focal(&["verify", out, "--jobs", "1", "--seed", "3"]);
    let four = focal(&["verify", out, "--jobs", "4", "--seed", "3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}
