//! Golden tests for the command-line tool. Set `UPDATE_GOLDEN=1` to rewrite
//! the expected files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syncideal")).args(args).output().unwrap()
}

fn assert_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name}");
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_cerny() {
    let out = run(&["analyze", &fixture("cerny4.aut")]);
    assert_eq!(out.status.code(), Some(0));
    assert_golden("analyze_cerny4.txt", &stdout(&out));
    let out = run(&["analyze", "--json", &fixture("cerny4.aut")]);
    assert_eq!(out.status.code(), Some(0));
    assert_golden("analyze_cerny4.json", &stdout(&out));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["sync"]["shortest_reset_length"], 9);
}

#[test]
fn analyze_not_synchronizing() {
    let out = run(&["analyze", &fixture("identity2.aut")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not synchronizing"));
}

#[test]
fn construct_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (words, tag) in [("mwords_aa.txt", "aa"), ("mwords_abba.txt", "abba")] {
        let t = dir.path().join(format!("{tag}.aut"));
        let dot = dir.path().join(format!("{tag}.dot"));
        let (t, dot) = (t.to_str().unwrap(), dot.to_str().unwrap());
        let out = run(&["construct", "--words", &fixture(words), "--out", t, "--dot", dot]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        assert_golden(&format!("construct_{tag}.aut"), &fs::read_to_string(t).unwrap());
        assert_golden(&format!("construct_{tag}.dot"), &fs::read_to_string(dot).unwrap());
        let out = run(&["verify", t, "--words", &fixture(words), "--exact"]);
        assert_eq!(out.status.code(), Some(0));
        assert_golden(&format!("verify_{tag}.txt"), &stdout(&out));
        let out = run(&["verify", t, "--words", &fixture(words), "--bound", "8"]);
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn verify_reports_counterexample() {
    let out = run(&["verify", &fixture("cerny4.aut"), "--words", &fixture("mwords_aa.txt")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample=aa"), "{}", stdout(&out));
}

#[test]
fn factors_report() {
    let out = run(&["factors", "--words", &fixture("mwords_aa.txt"), "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_golden("factors_aa.txt", &stdout(&out));
    let out = run(&["factors", &fixture("m_abba.aut")]);
    assert!(stdout(&out).contains("l* = 2\nwitness: aa\n"));
}

#[test]
fn syn_minwords_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let syn = dir.path().join("syn.aut");
    let min = dir.path().join("min.aut");
    let dot = dir.path().join("c4.dot");
    assert_eq!(run(&["syn", &fixture("cerny4.aut"), "--out", syn.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["minwords", &fixture("cerny4.aut"), "--out", min.to_str().unwrap()]).status.code(), Some(0));
    // the ideal acceptor written by `syn` yields the same minimal words
    let min2 = dir.path().join("min2.aut");
    assert_eq!(run(&["minwords", syn.to_str().unwrap(), "--out", min2.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fs::read_to_string(&min).unwrap(), fs::read_to_string(&min2).unwrap());
    assert_eq!(run(&["dot", &fixture("cerny4.aut"), "--out", dot.to_str().unwrap()]).status.code(), Some(0));
    assert_golden("cerny4.dot", &fs::read_to_string(&dot).unwrap());
}

#[test]
fn lifted_listing() {
    let out = run(&["lifted", "--words", &fixture("mwords_abba.txt"), "--depth", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_golden("lifted_abba_3.txt", &stdout(&out));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.aut");
    fs::write(&bad, "alphabet a b\nstates 2\ntrans 0 a 1\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(0, b)"));
    assert_eq!(run(&["analyze", "no-such-file.aut"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let words = dir.path().join("w.txt");
    fs::write(&words, "alphabet a b\na\naa\n").unwrap();
    let out = run(&["construct", "--words", words.to_str().unwrap(), "--out", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
