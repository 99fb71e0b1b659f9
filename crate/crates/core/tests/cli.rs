//! The binary end to end: outputs, formats, exit codes, config files.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan-hankel")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn hankel_rows() {
    assert_eq!(
        stdout(&["hankel", "--family", "combo", "--m", "2", "--a", "1", "--b", "1", "--count", "6"]),
        "7,31,115,390,1254,3893\n"
    );
    assert_eq!(stdout(&["hankel", "--family", "catalan", "--count", "4"]), "1,1,1,1\n");
    assert_eq!(stdout(&["hankel", "--family", "shifted", "--m", "2", "--count", "5"]), "2,3,4,5,6\n");
}

#[test]
fn jfrac_json_uses_strings() {
    let s = stdout(&[
        "jfrac",
        "--family",
        "combo",
        "--m",
        "2",
        "--a",
        "1",
        "--b",
        "1",
        "--normalize",
        "--depth",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["alphas"], serde_json::json!(["19/7", "489/217"]));
    assert_eq!(v["betas"], serde_json::json!(["31/49"]));
}

#[test]
fn large_values_stay_exact_in_json() {
    let s = stdout(&["hankel", "--family", "shifted", "--m", "12", "--count", "12", "--format", "json"]);
    let v: Value = serde_json::from_str(&s).unwrap();
    let values = v["values"].as_array().unwrap();
    assert!(values.iter().all(Value::is_string));
    assert!(values.last().unwrap().as_str().unwrap().len() > 20);
}

#[test]
fn verify_commands_and_exit_codes() {
    let out = run(&["verify", "conjecture-T", "--m-max", "5", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS conjecture-T"));
    assert_eq!(run(&["verify", "identity", "--name", "consecutive-diff", "--r", "3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "identity", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["hankel", "--family", "combo", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["jfrac", "--family", "explicit", "--terms", "0,1,2"]).status.code(), Some(3));
    assert_eq!(run(&["jfrac", "--family", "explicit", "--terms", "1,2", "--depth", "3"]).status.code(), Some(3));
}

#[test]
fn failing_verification_exits_one() {
    let out = run(&["verify", "conjecture-T-unshifted", "--m-max", "3", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("FAIL conjecture-T-unshifted"));
    assert!(text.contains("counterexample m=2 n=0"));
}

#[test]
fn csv_has_header() {
    let s = stdout(&["verify", "bands", "--format", "csv"]);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("report,case,passed,expected,actual"));
    assert!(lines.all(|l| l.starts_with("bands,")));
    let s = stdout(&["riordan", "inv", "--array", "pascal", "--count", "2", "--format", "csv"]);
    assert_eq!(s, "n,k,value\n0,0,1\n1,0,-1\n1,1,1\n");
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "csv", "json"] {
        let args = ["verify", "all", "--n-max", "4", "--format", format];
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn config_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# pair sums\nfamily = combo\nm = 2\na = 1\nb = 1\ncount = 3\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(stdout(&["hankel", "--config", cfg]), "7,31,115\n");
    // flags override the file
    assert_eq!(stdout(&["hankel", "--config", cfg, "--count", "2"]), "7,31\n");
    let out = dir.path().join("out.txt");
    stdout(&["hankel", "--config", cfg, "--out", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(out).unwrap(), "7,31,115\n");
}

#[test]
fn bfile_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b000108.txt");
    let body: String =
        [1, 1, 2, 5, 14, 42, 132, 429, 1430].iter().enumerate().map(|(i, v)| format!("{i} {v}\n")).collect();
    std::fs::write(&path, format!("# Catalan\n{body}")).unwrap();
    assert_eq!(stdout(&["hankel", "--bfile", path.to_str().unwrap(), "--count", "5"]), "1,1,1,1,1\n");
    assert_eq!(run(&["hankel", "--bfile", path.to_str().unwrap(), "--count", "6"]).status.code(), Some(3));
}

#[test]
fn riordan_and_spine() {
    assert_eq!(stdout(&["riordan", "entry", "--array", "ballot-tilde", "--n", "4", "--k", "1"]), "-20\n");
    assert_eq!(
        stdout(&[
            "riordan", "apply", "--g", "1/1-x", "--f", "x/1-x", "--family", "explicit", "--terms", "1,1,1,1",
            "--count", "4"
        ]),
        "1,2,4,8\n"
    );
    assert!(stdout(&["spine", "--r", "2"]).starts_with("2*a + 6*b,a + 4*b,b\n"));
}

#[test]
fn verify_all_lists_readings() {
    let s = stdout(&["verify", "all"]);
    for tag in ["t4-numerator-x3", "penta-x4-term-b3", "recurrence-htilde", "spine-pairing", "L2-closed-form"] {
        assert!(s.contains(&format!("  {tag}: ")), "{tag}");
    }
    assert!(s.trim_end().ends_with("cases"));
}
