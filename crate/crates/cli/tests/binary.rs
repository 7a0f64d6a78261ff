use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn qalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalg")).args(args).output().unwrap()
}

fn s(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tensor_writes_a_file_that_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.alg");
    let report = dir.path().join("t.json");
    let o = qalg(&["tensor", s(&data("exampleA.alg")), s(&data("exampleB.alg")), "--out", s(&out), "--report", s(&report)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("72 = 6 * 12"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("arrow ")).count(), 12);
    assert!(std::fs::read_to_string(&report).unwrap().contains("\"dim\": 72"));

    // the written product is itself a valid input
    let o = qalg(&["sttilt", s(&out), "--cap", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let o = qalg(&["tensor", s(&data("exampleA_gf5.alg")), s(&data("exampleB.alg"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("different fields"));
    assert_eq!(qalg(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(qalg(&["sttilt", "/nonexistent.alg"]).status.code(), Some(1));
    assert_eq!(qalg(&["--help"]).status.code(), Some(0));
    assert_eq!(qalg(&["certify", s(&data("local.alg")), s(&data("exampleA.alg"))]).status.code(), Some(2));
    assert_eq!(qalg(&["sttilt", s(&data("kronecker.alg")), "--cap", "10"]).status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "vertex 1\narrow a: 1 -> 2\nbound 2\n").unwrap();
    let o = qalg(&["sttilt", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.alg") && err.contains("line 2"), "{err}");
}

#[test]
fn certify_and_field_override() {
    let o = qalg(&["certify", s(&data("exampleA.alg")), s(&data("exampleB.alg")), "--lambdas", "1,2,3", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let report = String::from_utf8_lossy(&o.stdout);
    assert!(report.contains("\"seed\": 9"));
    assert!(report.contains("tau-tilting-infinite"));
    let o = qalg(&["certify", s(&data("exampleA.alg")), s(&data("exampleB.alg")), "--field-override", "GF(5)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"field\": \"GF(5)\""));
    assert_eq!(qalg(&["certify", s(&data("exampleA.alg")), s(&data("exampleB.alg")), "--field-override", "GF(6)"]).status.code(), Some(1));
}

#[test]
fn sttilt_dot_and_poset_compare() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("a2.dot");
    let o = qalg(&["sttilt", s(&data("a2.alg")), "--dot", s(&dot)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&dot).unwrap().matches("->").count(), 5);
    let o = qalg(&["poset-compare", s(&data("a2.alg")), s(&data("local.alg"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("not isomorphic"));
}

#[test]
fn module_command_reads_rep_files() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("m.rep");
    std::fs::write(&rep, "field Q\ndim 1 1\ndim 2 1\nmap a 1x1: 1\n").unwrap();
    let o = qalg(&["module", s(&data("a2.alg")), s(&rep)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"brick\": true"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let (x, y, z) = (data("exampleA.alg"), data("exampleB.alg"), data("a2.alg"));
    let args = ["certify", s(&x), s(&y)];
    let (a, b) = (qalg(&args), qalg(&args));
    let args2 = ["sttilt", s(&z)];
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(qalg(&args2).stdout, qalg(&args2).stdout);
}
