//! The command-line binary: exit codes, output formats and determinism.

use lie_double::catalog::BUILTIN_CATALOG;
use std::process::{Command, Output};

fn lie_double(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-double")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = lie_double(&["verify", "all", "--samples", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
    assert!(stdout(&o).contains("seed=2014"));
}

#[test]
fn json_lines_are_deterministic() {
    let args = ["verify", "poisson", "--samples", "10", "--seed", "99", "--format", "json-lines"];
    let (a, b) = (lie_double(&args), lie_double(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["record"], "header");
    assert_eq!(lines[0]["seed"], 99);
    assert_eq!(lines.last().unwrap()["record"], "summary");
    assert!(lines.iter().filter(|l| l["record"] == "check").all(|l| l["status"] == "pass" && l["anchor"].is_string()));
    let other = lie_double(&["verify", "poisson", "--samples", "10", "--seed", "100", "--format", "json-lines"]);
    assert_ne!(other.stdout, a.stdout);
}

#[test]
fn zero_samples_pass_with_a_warning() {
    let o = lie_double(&["verify", "poisson", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("pass vacuously"));
}

#[test]
fn out_file_receives_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let o = lie_double(&["verify", "algebra", "--format", "json-lines", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("{\"record\":\"header\""));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(lie_double(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(lie_double(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(lie_double(&["table", "missing_entry"]).status.code(), Some(2));
}

#[test]
fn unreadable_catalog_is_a_load_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, BUILTIN_CATALOG.replacen("kind: algebra", "kind: algbra", 1)).unwrap();
    let o = lie_double(&["verify", "all", "--catalog", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("parse error"));
    let missing = dir.path().join("nope.txt");
    assert_eq!(lie_double(&["list", "--catalog", missing.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn wrong_table_is_a_check_failure() {
    let dir = tempfile::tempdir().unwrap();
    let edited = dir.path().join("edited.txt");
    std::fs::write(&edited, BUILTIN_CATALOG.replacen("+ eta^2*J2/\\J1)", "- eta^2*J2/\\J1)", 1)).unwrap();
    let o = lie_double(&["verify", "double", "--catalog", edited.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  coboundary/cocomm_ads"));
}

#[test]
fn tables_render() {
    let o = lie_double(&["table", "so22_table"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    for line in ["[P0, P1] = eta^2*J2", "[P0, P2] = -eta^2*J1", "[P1, P2] = -eta^2*J0"] {
        assert!(t.contains(line), "{t}");
    }
    let t = stdout(&lie_double(&["table", "cocomm_ads"]));
    assert!(t.contains("delta(P0) = -eta*xi*J0/\\P1 - eta^2*xi*J1/\\J2 + xi*P1/\\P2"), "{t}");
    let t = stdout(&lie_double(&["table", "nc_minkowski"]));
    assert!(t.contains("[x1, x2] = xi*x0"), "{t}");
}

#[test]
fn list_covers_the_catalog() {
    let o = lie_double(&["list", "--format", "json-lines"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 23);
}

#[test]
fn poisson_at_the_origin_and_on_the_pseudosphere() {
    let t = stdout(&lie_double(&["poisson", "x0,x1", "--format", "json-lines"]));
    let v: serde_json::Value = serde_json::from_str(t.trim()).unwrap();
    assert_eq!(v["sklyanin"], 0.0);
    assert_eq!(v["closed_form"], 0.0);
    let t = stdout(&lie_double(&["poisson", "w3,w0", "--point", "0.4,-0.3,0.2,0.1,0.6,-0.5", "--eta", "0.3", "--format", "json-lines"]));
    let v: serde_json::Value = serde_json::from_str(t.trim()).unwrap();
    assert!(v["sklyanin"].as_f64().unwrap().abs() < 1e-9);
}

#[test]
fn series_of_x1_x2() {
    let o = lie_double(&["poisson", "x1,x2", "--mode", "series", "--order", "2", "--point", "1/2,1/4,-1", "--xi", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    // xi x0, xi x0 x1, -xi (2/3 x0^3 - 1/2 x1^2 x0)
    for line in ["eta^0  1 ", "eta^1  1/4 ", "eta^2  -13/96 "] {
        assert!(t.contains(line), "{t}");
    }
    assert_eq!(lie_double(&["series", "x1,x2", "--order", "11"]).status.code(), Some(2));
}

#[test]
fn domain_errors_name_the_guard() {
    let o = lie_double(&["poisson", "x0,x2", "--point", "1.5707963267948966,0,0", "--eta", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("tan pole guard"));
    let o = lie_double(&["poisson", "x0,x2", "--point", "0.1,0.1,0.1,0,20,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("degenerate"));
}
