//! End-to-end tests of the `specarith` binary: exit codes, record output,
//! and determinism across worker counts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_specarith"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

#[test]
fn invariants_sheet_for_o12_plus_5() {
    let out = run(&["invariants", "O12+", "q=5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("m_z = 1563 = 3 * 521"), "{text}");
    assert!(text.contains("m_y = 1562 = 2 * 11 * 71"), "{text}");
    assert!(text.contains("gcd(m_z, m_y) = 1"), "{text}");
    assert!(text.contains("k_y = 781 = 11 * 71"), "{text}");
    assert!(text.contains("meo upper bound: q^6 = 15625"), "{text}");
}

#[test]
fn invariants_l8_branch() {
    let out = run(&["invariants", "L8+", "q=9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("z = 7, y = 8"));
}

#[test]
fn invariants_rejects_even_field() {
    let out = run(&["invariants", "O12+", "q=4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd"));
}

#[test]
fn invariants_rejects_out_of_scope_series_with_listing() {
    let out = run(&["invariants", "S10", "u=2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("O12+"), "{err}");
    assert!(err.contains("L8-"), "{err}");
}

#[test]
fn invariants_names_bad_tokens() {
    let out = run(&["invariants", "L8+", "zz=3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("zz=3"));
    let out = run(&["invariants", "X8", "q=3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("X8"));
}

#[test]
fn verify_unknown_check_lists_ids() {
    let out = run(&["verify", "--check", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("nosuch"));
    assert!(err.contains("igcd"));
}

#[test]
fn verify_requires_a_selection() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_igcd_with_range_passes() {
    let out = run(&[
        "verify", "--check", "igcd", "--range", "500", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let fields: Vec<&str> = text.trim_end().split('\t').collect();
    assert_eq!(fields.len(), 6);
    assert_eq!(fields[0], "igcd");
    assert!(fields[1] == "pass" || fields[1] == "degenerate-cases-present");
}

#[test]
fn verify_multiple_checks_in_registry_order() {
    let out = run(&[
        "verify", "--check", "fpoly", "--check", "keq-k8", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let ids: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split('\t').next().unwrap().to_string())
        .collect();
    // registry order puts the equation search before the cubic cases
    assert_eq!(ids, vec!["keq-k8".to_string(), "fpoly".to_string()]);
}

#[test]
fn verify_quick_all_is_deterministic_across_jobs() {
    let a = run(&[
        "verify",
        "--all",
        "--profile",
        "quick",
        "--format",
        "records",
        "--jobs",
        "1",
    ]);
    let b = run(&[
        "verify",
        "--all",
        "--profile",
        "quick",
        "--format",
        "records",
        "--jobs",
        "2",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let strip = |out: &Output| -> Vec<String> {
        stdout(out)
            .lines()
            .map(|l| l.rsplit_once('\t').unwrap().0.to_string())
            .collect()
    };
    let (ra, rb) = (strip(&a), strip(&b));
    assert!(!ra.is_empty());
    assert_eq!(ra, rb);
}

#[test]
fn verify_writes_report_files() {
    let dir = std::env::temp_dir().join("specarith-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("records.tsv");
    let out = run(&[
        "verify",
        "--check",
        "seventh-powers",
        "--format",
        "records",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("seventh-powers\tpass\t"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn certify_headline_pair() {
    let out = run(&["certify", "--f", "-1 0 0 0 1", "--g", "-6 1 1 1 1 1 1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("h = x - 1"), "{text}");
    assert!(text.contains("m = 75"), "{text}");
    assert!(text.contains("spot check on 100 points"), "{text}");
    assert!(text.contains("0 violations"), "{text}");
}

#[test]
fn certify_integer_cofactor_pair() {
    // x^2 - 1 and x^3 - 1 admit integer cofactors: m = 1
    let out = run(&["certify", "--f", "-1 0 1", "--g", "-1 0 0 1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("h = x - 1"), "{text}");
    assert!(text.contains("m = 1"), "{text}");
}

#[test]
fn certify_rejects_zero_polynomial() {
    let out = run(&["certify", "--f", "0 0", "--g", "1 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nonzero"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--jobs", "0", "--all"]);
    assert_eq!(out.status.code(), Some(2));
}
