//! The `convexfam` binary: subcommands, exit codes, JSON output.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_convexfam")).args(args).env("CONVEXFAM_JOBS", "1").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("convexfam-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path
}

#[test]
fn verify_worked_examples_pass() {
    for name in ["circulant43", "wrochna", "ab-form-4x4", "g16", "bull-sub-delta"] {
        let o = run(&["verify", name]);
        assert_eq!(o.status.code(), Some(0), "{name}:\n{}", stdout(&o));
        assert!(stdout(&o).ends_with("result: pass (exit 0)\n"));
    }
}

#[test]
fn slow_bundle_without_slow_is_undecided() {
    assert_eq!(run(&["verify", "icosidodecahedron"]).status.code(), Some(3));
}

#[test]
fn audit_not_cis_finds_pi_and_delta() {
    let o = run(&["audit", "not-cis", "--n", "5", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minima: Π and Δ (Δ, Π)"), "{}", stdout(&o));
}

#[test]
fn audit_connected_vertex_is_strongly_convex() {
    let o = run(&["audit", "connected", "--order", "vertex", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok        strongly convex: expected holds, found holds"));
}

#[test]
fn disputed_claim_exits_with_failure() {
    let o = run(&["audit", "with-ne"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL      weakly hereditary"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "no-such-bundle"]).status.code(), Some(2));
    assert_eq!(run(&["audit", "no-such-family"]).status.code(), Some(2));
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    let empty = temp_file("empty.json", "");
    let o = run(&["classify", empty.to_str().unwrap(), "--kind", "graph", "--order", "vertex", "--family", "connected"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn classify_reports_minima_as_json() {
    let c5 = temp_file("c5.json", r#"{"directed": false, "n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]}"#);
    let args = ["--format", "json", "classify", c5.to_str().unwrap(), "--kind", "graph", "--order", "vertex", "--family", "imperfect"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["data"]["minimum"], true);
    assert_eq!(v["data"]["minima"], serde_json::json!(["{1,2,3,4,5}"]));
    assert_eq!(run(&args).stdout, first.stdout, "JSON output must be reproducible");
}

#[test]
fn list_names_families_and_bundles() {
    let o = run(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("fixture circulant43"));
    assert!(out.contains("not-tight"));
}
