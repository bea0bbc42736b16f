use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn domsweep(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domsweep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn compute_named_star() {
    let out = domsweep(&["compute", "--family", "star", "--k", "3"], None);
    assert!(out.status.success(), "{}", stderr(&out));
    let rows = json(&out);
    let r = &rows[0]["report"];
    // center 0: upper-triangle bits 110100
    assert_eq!(rows[0]["graph6"], "Cs");
    assert_eq!(r["gamma_t"]["value"], 2);
    assert_eq!(r["i0"]["value"], 1);
    assert_eq!(r["has_dominating_vertex"], true);
}

#[test]
fn compute_from_stdin_graph6() {
    let out = domsweep(&["compute", "--format", "csv"], Some("D?{\n"));
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let field = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(field("graph6"), "D?{");
    assert_eq!((field("n"), field("m"), field("diam")), ("5", "4", "2"));
    assert_eq!((field("gamma"), field("gamma_t"), field("i0"), field("alpha")), ("1", "2", "1", "4"));
}

#[test]
fn compute_edge_list_file() {
    // P4 with a comment line
    let path = scratch("p4.edges", "# path\n0 1\n1 2\n2 3\n");
    let out = domsweep(&["compute", "-i", path.to_str().unwrap(), "--format", "text"], None);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("n=4 m=3 diam=3"), "{text}");
    assert!(text.lines().any(|l| l.split_whitespace().take(2).eq(["gamma_t", "2"])), "{text}");
}

#[test]
fn compute_disconnected_reports_undefined_total_domination() {
    let out = domsweep(&["compute", "--format", "csv"], Some("A?\n"));
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("A?,2,0,inf,"), "{row}");
    assert!(row.contains(",,"), "gamma_t should be empty: {row}");
}

#[test]
fn malformed_line_names_the_line() {
    let out = domsweep(&["compute"], Some("D?{\nC~\nD?{!\n"));
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.starts_with("error:"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn oversized_order_is_rejected() {
    let out = domsweep(&["verify", "--n-max", "30"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("n = 30"), "{}", stderr(&out));
}

#[test]
fn unknown_theorem_is_rejected() {
    let out = domsweep(&["verify", "--theorem", "T9.9", "--n-max", "3"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("T9.9"));
}

#[test]
fn verify_single_theorem_passes() {
    let out = domsweep(&["verify", "--theorem", "T3.1", "--universe", "trees", "--n-min", "3", "--n-max", "9"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report = json(&out);
    assert_eq!(report["all_pass"], true);
    let checked: u64 = report["verdicts"].as_array().unwrap().iter().map(|v| v["graphs_checked"].as_u64().unwrap()).sum();
    assert_eq!(checked, 1 + 2 + 3 + 6 + 11 + 23 + 47);
}

#[test]
fn verify_file_universe_reports_false_claim() {
    let path = scratch("mixed.g6", "Cs\nC~\nDhc\n");
    let out = domsweep(
        &["verify", "--universe", "file", "-i", path.to_str().unwrap(), "--n-max", "5", "--claim", "gamma_t < i0 + 1"],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["all_pass"], false);
    let violations: Vec<&str> = report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|v| v["violations"].as_array().unwrap())
        .map(|v| v["graph6"].as_str().unwrap())
        .collect();
    // the star and K4 both have a dominating vertex, C5 does not
    assert_eq!(violations, ["Cs", "C~"]);
}

#[test]
fn hunt_finds_smallest_counterexample() {
    let out = domsweep(&["hunt", "gamma_t <= i0", "--n-max", "5", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["result"], "counterexample");
    assert_eq!(v["graph6"], "A_");

    let out = domsweep(&["hunt", "gamma <= 0", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["graph6"], "@");
}

#[test]
fn hunt_exhausts_true_bound() {
    let out = domsweep(&["hunt", "gamma_t <= i0 + 1", "--n-max", "7"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    // K1 has no total dominating set and is skipped
    assert!(stdout(&out).contains("holds on all 995 graphs"), "{}", stdout(&out));
}

#[test]
fn hunt_rejects_bad_claim() {
    let out = domsweep(&["hunt", "gamma <=> 2"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_lists_graph6() {
    let out = domsweep(&["enumerate", "--n-min", "4", "--n-max", "4"], None);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = domsweep(&["enumerate", "--universe", "trees", "--n-min", "10", "--n-max", "10"], None);
    assert_eq!(stdout(&out).lines().count(), 106);
}

#[test]
fn sweep_writes_table_to_file() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("sweep.csv");
    let out = domsweep(&["sweep", "--n-max", "5", "-o", path.to_str().unwrap()], None);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    // header plus 1 + 1 + 2 + 6 + 21 connected graphs
    assert_eq!(text.lines().count(), 32);
    assert!(text.starts_with("graph6,n,m,diam,gamma,"));
}
