//! The `logderiv` binary: outputs, JSON reports and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use logderiv::cli::{verify_report, AnalysisReport, EXIT_DEGENERATE, EXIT_OK, EXIT_PARSE, TOOL};

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_logderiv"));
    c.args(args).env_remove("LOGDERIV_GRID_CAP");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn analyze_pappus_text() {
    let o = run(&["analyze", "--builtin", "pappus", "--dmax", "4"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let s = stdout(&o);
    assert_eq!(s.lines().next(), Some(TOOL));
    assert!(s.contains("dim F_d for d = 0..4: [0, 0, 0, 0, 1]"), "{s}");
    assert!(s.contains("d_f = 4"), "{s}");
    assert!(!s.contains("[FAIL]"));
}

#[test]
fn analyze_ziegler_json_verifies_and_is_deterministic() {
    let args = ["analyze", "--builtin", "ziegler", "--dmax", "5", "--json"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(EXIT_OK));
    assert_eq!(a.stdout, b.stdout);
    let json = stdout(&a);
    let r = AnalysisReport::from_json(&json).unwrap();
    assert_eq!(r.tool, TOOL);
    assert_eq!(r.d_f(), Some(5));
    assert_eq!(r.dims, vec![0, 0, 0, 0, 0, 1]);
    assert!(verify_report(&json).unwrap().is_empty());
    // Rationals are strings.
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let p = &v["combinatorics"]["singular_points"][0]["point"];
    assert!(p[0].is_string() && p[1].is_string());
    assert!(json.contains("\"-1/2\""));
}

#[test]
fn tampered_report_fails_verification() {
    let json = stdout(&run(&[
        "analyze",
        "--builtin",
        "pappus",
        "--dmax",
        "4",
        "--json",
    ]));
    let mut r = AnalysisReport::from_json(&json).unwrap();
    let w = r.df.witness.as_mut().unwrap();
    w.q = format!("{} + x", w.q);
    let bad = serde_json::to_string(&r).unwrap();
    assert!(!verify_report(&bad).unwrap().is_empty());
}

#[test]
fn compare_pappus_nonpappus() {
    let o = run(&[
        "compare",
        "--builtin",
        "pappus",
        "--builtin",
        "nonpappus",
        "--df",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let s = stdout(&o);
    assert!(s.contains("weak_equal: true"), "{s}");
    assert!(s.contains("poset_isomorphic: false"));
    assert!(s.contains("d_f: 4 vs 5"));
}

#[test]
fn compare_ziegler_pair() {
    let o = run(&[
        "compare",
        "--builtin",
        "ziegler",
        "--builtin",
        "ziegler2",
        "--df",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["weak_equal"], true);
    assert_eq!(v["poset_isomorphic"], true);
    assert_eq!(v["witness"]["line_map"].as_array().unwrap().len(), 8);
    assert_eq!(v["df"][0]["d_f"], 5);
    assert!(v["df"][1]["d_f"].as_u64().unwrap() >= 6);
}

#[test]
fn compare_file_with_itself_and_mixed_order() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.txt", "1 0 0\n0 1 0\n1 -1 0\n1 0 -1\n");
    let o = run(&["compare", &f, &f]);
    let s = stdout(&o);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(s.contains("weak_equal: true") && s.contains("poset_isomorphic: true"));
    assert!(s.contains("line map: L0->L0 L1->L1 L2->L2 L3->L3"));
    // Inputs keep command-line order across --builtin and paths.
    let s = stdout(&run(&["compare", &f, "--builtin", "pappus"]));
    assert!(
        s.contains(&format!("A: {f}")) && s.contains("B: pappus"),
        "{s}"
    );
}

#[test]
fn classify_reference_fields() {
    let s = stdout(&run(&["classify", "--field", "x^2;y^2"]));
    assert!(s.contains("class: finite"));
    for l in ["  1 0 0", "  0 1 0", "  1 -1 0"] {
        assert!(s.lines().any(|x| x == l), "{s}");
    }
    assert!(s.contains("complete: true"));
    assert!(stdout(&run(&["classify", "--field", "x;y"])).contains("central, center (0, 0)"));
    assert!(stdout(&run(&["classify", "--field", "0;x+1"])).contains("parallel, direction (0, 1)"));
    let o = run(&["classify", "--field", "x^2;y^2", "--builtin", "pappus"]);
    assert!(stdout(&o).contains("logarithmic for pappus: false"));
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "pencil.txt", "1 0 0\n0 1 0\n1 -1 0\n");
    assert!(stdout(&run(&["classify", "--field", "x^2;y^2", &f])).contains(": true"));
}

#[test]
fn classify_parse_error() {
    let o = run(&["classify", "--field", "2x;y"]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(stderr(&o).contains("column 2"), "{}", stderr(&o));
    assert_eq!(run(&["classify"]).status.code(), Some(EXIT_PARSE));
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run(&["analyze", "missing.txt"]).status.code(),
        Some(EXIT_PARSE)
    );
    assert_eq!(
        run(&["analyze", "--builtin", "nosuch"]).status.code(),
        Some(EXIT_PARSE)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(EXIT_PARSE));
    let bad = write(dir.path(), "bad.txt", "1 0 0\n1 2 z\n");
    let o = run(&["analyze", &bad]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
    assert!(stderr(&o).contains("line 2, column 5"), "{}", stderr(&o));
    let deg = write(dir.path(), "deg.txt", "1 0 0\n0 0 1\n");
    assert_eq!(run(&["analyze", &deg]).status.code(), Some(EXIT_DEGENERATE));
    let dup = write(dir.path(), "dup.txt", "1 0 0\n-2 0 0\n");
    assert_eq!(run(&["analyze", &dup]).status.code(), Some(EXIT_DEGENERATE));
    let empty = write(dir.path(), "empty.txt", "# none\n");
    assert_eq!(
        run(&["analyze", &empty]).status.code(),
        Some(EXIT_DEGENERATE)
    );
    assert_eq!(run(&["--version"]).status.code(), Some(EXIT_OK));
}

#[test]
fn dump_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dump.txt");
    let p = path.display().to_string();
    let o = run(&[
        "analyze",
        "--builtin",
        "pappus",
        "--dmax",
        "4",
        "--dump-matrix",
        &p,
    ]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let dump = std::fs::read_to_string(&path).unwrap();
    assert!(dump.starts_with("# constraint matrix degree 0 rows 8 cols 2\n"));
    assert!(dump.contains("# constraint matrix degree 4 rows 40 cols 30"));
    assert!(dump.contains("# kernel degree 4 dim 1"));
}

#[test]
fn grid_cap_override() {
    let args = ["analyze", "--builtin", "ziegler2", "--dmax", "6", "--json"];
    let o = run_env(&args, &[("LOGDERIV_GRID_CAP", "2")]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let r = AnalysisReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.d_f(), Some(6));
    assert!(r.df.trail.iter().any(|t| t.d == 6 && t.uncapped));
    let r = AnalysisReport::from_json(&stdout(&run(&args))).unwrap();
    assert!(r.df.trail.iter().all(|t| !t.uncapped));
    let o = run_env(&args, &[("LOGDERIV_GRID_CAP", "lots")]);
    assert_eq!(o.status.code(), Some(EXIT_PARSE));
}

#[test]
fn reproduce_passes() {
    let o = run(&["reproduce"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    let s = stdout(&o);
    assert!(!s.lines().any(|l| l.starts_with("FAIL")), "{s}");
    assert!(s.lines().filter(|l| l.starts_with("INFO")).count() >= 2);
    assert!(s.contains("0 failed"));
    let j: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["reproduce", "--json"]))).unwrap();
    assert!(j["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "FAIL"));
}
