use std::io::Write;
use std::process::{Command, Output, Stdio};

use graded_cli::report::{from_text, CommandReport};

const QUADRICS: &str = "ring semigroup 4 9 10\nideal I = t^8, t^9, t^10\nideal J = t^8\ncheck gorenstein-G I J\npresent G I\n";

fn graded(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graded"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn json_and_text_carry_the_same_reports() {
    let json = graded(&["--format", "json"], QUADRICS);
    let text = graded(&["--format", "text"], QUADRICS);
    assert_eq!(json.status.code(), Some(0));
    assert_eq!(text.status.code(), Some(0));
    let a: Vec<CommandReport> = serde_json::from_slice(&json.stdout).unwrap();
    let b: Vec<CommandReport> = from_text(&String::from_utf8(text.stdout).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a[0].verdict_of("G-gorenstein"), Some(true));
    assert_eq!(a[0].tables.socle, Some(vec![0, 0, 1]));
}

#[test]
fn reports_are_deterministic() {
    assert_eq!(graded(&["--format", "json"], QUADRICS).stdout, graded(&["--format", "json"], QUADRICS).stdout);
}

#[test]
fn script_file_argument() {
    let path = std::env::temp_dir().join(format!("graded-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, QUADRICS).unwrap();
    let out = graded(&[path.to_str().unwrap(), "--format", "json"], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn corpus_exit_codes() {
    assert_eq!(graded(&["--corpus"], "").status.code(), Some(0));
    let out = graded(&["--corpus", "hypersurface", "--self-test"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypersurface-fiber-cone"));
}

#[test]
fn corpus_filter_runs_only_matching_cases() {
    let out = graded(&["--corpus", "5,6,7,8", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["ratliff-rush-gap"]);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(graded(&[], "ideal I = t^2\n").status.code(), Some(2));
    assert_eq!(graded(&[], "ring semigroup 3 4\ncheck gorenstein-G I J\n").status.code(), Some(2));
    assert_eq!(graded(&["--field", "gf:9"], QUADRICS).status.code(), Some(2));
    assert_eq!(graded(&["--format", "xml"], QUADRICS).status.code(), Some(2));
}

#[test]
fn zero_ideal_exhausts_precision() {
    let out = graded(&[], "ring semigroup 3 4\nideal I = 0\nanalyze filtration I\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn prime_field_run() {
    let out = graded(&["--field", "gf:7", "--format", "json"], QUADRICS);
    assert_eq!(out.status.code(), Some(0));
    let a: Vec<CommandReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(a[0].ring.contains("GF(7)"));
}

#[test]
fn monomial_quotient_script() {
    let out = graded(&["--format", "json"], "ring quotient x y mod x^2*y, y^3\nideal I = x\npresent G I\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn random_suites_are_clean() {
    let out = graded(&["--random", "15", "--seed", "3", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["problems"], 0);
}
