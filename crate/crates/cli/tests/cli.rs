use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dls(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dls"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn generate_families() {
    let cases: &[(&[&str], &str)] = &[
        (&["generate", "friendship", "--s", "2"], "D{c"),
        (&["generate", "path-friendship", "--s", "1", "--t", "1"], "C{"),
        (&["generate", "cycle", "--n", "3"], "Bw"),
        (&["generate", "path", "--n", "2"], "A_"),
    ];
    for (args, expected) in cases {
        let o = dls(args, "");
        assert_eq!(code(&o), 0, "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), *expected, "{args:?}");
    }
}

#[test]
fn generate_is_consistent_with_spectrum() {
    let o = dls(&["generate", "star", "--n", "4"], "");
    let g6 = stdout(&o);
    let o = dls(&["spectrum"], &g6);
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["n"], 4);
    assert_eq!(rec["mu"], serde_json::json!([4.0, 1.0, 1.0, 0.0]));
}

#[test]
fn generate_rejects_bad_parameters() {
    assert_eq!(code(&dls(&["generate", "cycle", "--n", "2"], "")), 2);
    assert_eq!(code(&dls(&["generate", "friendship"], "")), 2);
    assert_eq!(code(&dls(&["generate", "no-such-family"], "")), 2);
    assert_eq!(code(&dls(&["--workers", "0", "generate", "path", "--n", "3"], "")), 2);
}

#[test]
fn spectrum_of_triangle() {
    let o = dls(&["spectrum"], "Bw\n");
    assert_eq!(code(&o), 0);
    let rec = &json_lines(&o)[0];
    assert_eq!(rec["graph6"], "Bw");
    assert_eq!(rec["charpoly"], serde_json::json!(["0", "9", "-6", "1"]));
    assert_eq!(rec["mu"], serde_json::json!([3.0, 3.0, 0.0]));
    assert_eq!(rec["invariants"]["spanning_trees"], "3");
}

#[test]
fn spectrum_formats() {
    let o = dls(&["--format", "csv", "spectrum"], "Bw\nA_\n");
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("graph6,n,m,charpoly,mu"));
    assert!(lines.next().unwrap().starts_with("Bw,3,3,"));
    assert!(lines.next().unwrap().starts_with("A_,2,1,"));
    let o = dls(&["--format", "plain", "spectrum"], "Bw\n");
    assert!(stdout(&o).starts_with("Bw  n=3 m=3"));
}

#[test]
fn spectrum_of_empty_input() {
    let o = dls(&["spectrum"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
}

#[test]
fn spectrum_reports_corrupt_line() {
    let o = dls(&["spectrum"], "Bw\nA_\n!!\nBw\n");
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = dls(&["spectrum", "--lenient"], "Bw\nA_\n!!\nBw\n");
    assert_eq!(code(&o), 1);
    assert_eq!(json_lines(&o).len(), 3);
}

#[test]
fn spectrum_header_line_is_accepted() {
    let o = dls(&["spectrum"], ">>graph6<<Bw\n");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(json_lines(&o).len(), 1);
}

#[test]
fn search_counts_connected_graphs() {
    let o = dls(&["--format", "plain", "search", "--n", "5", "--connected"], "");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("21 classes, 21 graphs"), "{}", stdout(&o));
}

#[test]
fn search_finds_smallest_mates() {
    let o = dls(&["search", "--n", "6", "--mates-only"], "");
    assert_eq!(code(&o), 0);
    let classes = json_lines(&o);
    assert_eq!(classes.len(), 2);
    let mut members: Vec<String> = classes
        .iter()
        .flat_map(|c| c["members"].as_array().unwrap().iter().map(|m| m.as_str().unwrap().to_string()))
        .collect();
    members.sort();
    assert_eq!(members, ["E@ro", "EBYW", "EB^_", "EKdw"]);
}

#[test]
fn search_output_is_independent_of_workers() {
    let one = dls(&["--workers", "1", "search", "--n", "7", "--m", "9"], "");
    let four = dls(&["--workers", "4", "search", "--n", "7", "--m", "9"], "");
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), stdout(&four));
    let one = dls(&["--workers", "1", "search", "--n", "6", "--connected"], "");
    let three = dls(&["--workers", "3", "search", "--n", "6", "--connected"], "");
    assert_eq!(stdout(&one), stdout(&three));
}

#[test]
fn search_cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path().to_str().unwrap();
    let cold = dls(&["search", "--n", "6", "--m", "7", "--cache-dir", root], "");
    assert_eq!(code(&cold), 0, "{}", stderr(&cold));
    assert!(dir.path().join("n6").join("m7").join("classes.jsonl").exists());
    let warm = dls(&["search", "--n", "6", "--m", "7", "--cache-dir", root], "");
    assert_eq!(stdout(&cold), stdout(&warm));
}

#[test]
fn search_budget_guard() {
    assert_eq!(code(&dls(&["search", "--n", "12"], "")), 3);
}

#[test]
fn certify_verdicts() {
    let o = dls(&["certify", "Cx", "E@ro"], "");
    assert_eq!(code(&o), 0);
    let certs = json_lines(&o);
    assert_eq!(certs[0]["verdict"], "DLS-at-scope");
    assert_eq!(certs[0]["graphs_examined"], 2);
    assert_eq!(certs[1]["verdict"], "mate-found");
    let o = dls(&["certify"], "D{c\n");
    assert_eq!(json_lines(&o)[0]["verdict"], "DLS-at-scope");
}

#[test]
fn certify_budget_guard() {
    let o = dls(&["certify", "K???????????"], "");
    assert_eq!(code(&o), 3, "{}", stderr(&o));
}

#[test]
fn verify_subset() {
    let o = dls(&["verify-paper", "--only", "mu1-window", "--max-n", "10"], "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let records = json_lines(&o);
    assert!(!records.is_empty());
    for r in &records {
        assert_eq!(r["check"], "mu1-window");
        assert_eq!(r["pass"], true);
        for key in ["params", "expected", "measured"] {
            assert!(r.get(key).is_some());
        }
    }
}

#[test]
fn verify_with_loosened_tolerance() {
    let args = [
        "verify-paper",
        "--only",
        "complement-duality,interlacing-random,pendant-edge-mu1,degree-reconstruction",
        "--max-n",
        "8",
        "--trials",
        "50",
        "--tau",
        "1e-3",
    ];
    let o = dls(&args, "");
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stderr(&o).contains("0 failed"), "{}", stderr(&o));
}

#[test]
fn verify_rejects_unknown_check_and_bad_tau() {
    assert_eq!(code(&dls(&["verify-paper", "--only", "no-such-check"], "")), 2);
    assert_eq!(code(&dls(&["verify-paper", "--only", "mu1-window", "--tau", "-1"], "")), 2);
}

#[test]
fn verify_is_repeatable_for_a_seed() {
    let args = ["verify-paper", "--only", "complement-duality", "--max-n", "9", "--trials", "20", "--seed", "7"];
    let a = dls(&args, "");
    let b = dls(&args, "");
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_list_names_every_check() {
    let o = dls(&["verify-paper", "--list"], "");
    let text = stdout(&o);
    for id in ["enumeration-oracle", "mu1-window", "starlike-separation", "dls-path-friendship"] {
        assert!(text.contains(id), "{id}");
    }
}
