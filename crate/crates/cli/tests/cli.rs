use std::process::Command;

use vtcodes_cli::run_args;

fn run(args: &[&str]) -> vtcodes_cli::Outcome {
    let mut full = vec!["vtcodes"];
    full.extend_from_slice(args);
    run_args(full, None)
}

#[test]
fn check_reports_codeword() {
    let out = run(&["check", "--q", "2", "--n", "5", "--d", "3", "--b", "0,0", "--word", "1,0,0,1,1"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "codeword\n");
}

#[test]
fn check_non_codeword_exits_1() {
    let out = run(&["check", "--q", "2", "--n", "5", "--d", "3", "--word", "1,1,0,1,1"]);
    assert_eq!(out.status, 1);
    assert_eq!(out.stdout, "not a codeword\n");
}

#[test]
fn decode_erasures() {
    let out = run(&["decode", "--q", "2", "--n", "5", "--d", "3", "--b", "0,0", "--word", "1,?,?,1,1"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1,0,0,1,1\n");
}

#[test]
fn decode_single_error_both_ways() {
    for extra in [&[][..], &["--scan"][..]] {
        let mut args = vec!["decode", "--q", "2", "--n", "5", "--d", "3", "--word", "1,0,1,1,1"];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert_eq!(out.status, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "1,0,0,1,1\n");
    }
}

#[test]
fn decode_uncorrectable_json() {
    // 1,1,1,1,0 is at distance >= 2 from every member of C_3(0,0) for q=2, n=5.
    let out = run(&["decode", "--q", "2", "--n", "5", "--d", "3", "--word", "1,1,1,1,0", "--format", "json"]);
    assert_eq!(out.status, 1);
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert!(matches!(v["status"].as_str(), Some("uncorrectable" | "inconsistent")));
}

#[test]
fn decode_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("words.txt");
    std::fs::write(&path, "# received\n1,?,?,1,1\n1,0,1,1,1\n").unwrap();
    let out = run(&["decode", "--q", "2", "--n", "5", "--d", "3", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "1,0,0,1,1\n1,0,0,1,1\n");
}

#[test]
fn bounds_text_and_json() {
    let out = run(&["bounds", "--q", "4", "--n", "22", "--d", "3"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "3.67\n");
    let out = run(&["bounds", "--q", "4", "--n", "22", "--d", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(v["ell_used"], 23);
    assert_eq!(v["linear_baseline"], 4);
    assert_eq!(v["strict_improvement"], true);
}

#[test]
fn bounds_with_user_baseline() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("baseline.txt");
    std::fs::write(&path, "5 30 3 3\n").unwrap();
    let out = run(&[
        "bounds", "--q", "5", "--n", "30", "--d", "3", "--baseline", path.to_str().unwrap(), "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(v["linear_baseline"], 3);
}

#[test]
fn tables_need_lengths() {
    let out = run(&["tables", "--q", "5", "--d", "4"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("from"));
    let out = run(&["tables", "--q", "5", "--d", "4", "--from", "10", "--to", "12"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout.lines().count(), 4);
}

#[test]
fn intervals_text() {
    let out = run(&["intervals", "--q", "7"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.contains("[9, 13]"));
    assert!(out.stdout.contains("[58, 92]"));
    let out = run(&["intervals", "--q", "13", "--d", "5"]);
    assert!(out.stdout.contains("17,19"), "{}", out.stdout);
}

#[test]
fn search_and_verify() {
    let out = run(&["search-b", "--q", "2", "--n", "5", "--d", "3"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.starts_with("b="));
    let out = run(&["verify", "--q", "2", "--n", "6", "--d", "4"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert_eq!(out.stdout.lines().count(), 4);
    assert!(out.stdout.lines().all(|l| l.contains("PASS")));
}

#[test]
fn budget_from_environment() {
    let out = run_args(["vtcodes", "verify", "--q", "3", "--n", "8", "--d", "3"], Some("100"));
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("budget"), "{}", out.stderr);
    let out = run_args(["vtcodes", "search-b", "--q", "2", "--n", "5", "--d", "3"], Some("lots"));
    assert_eq!(out.status, 2);
}

#[test]
fn corrupt_is_seeded() {
    let args = ["corrupt", "--q", "2", "--word", "1,0,0,1,1,0,1,1,0,0", "--erasures", "2", "--errors", "1", "--seed", "42"];
    let a = run(&args);
    assert_eq!(a.status, 0);
    assert_eq!(a, run(&args));
    assert_eq!(a.stdout.trim().matches('?').count(), 2);
}

#[test]
fn usage_errors_name_parameter() {
    let out = run(&["check", "--q", "6", "--n", "5", "--d", "3", "--word", "0,0,0,0,0"]);
    assert_eq!(out.status, 0);
    let out = run(&["check", "--q", "2", "--n", "5", "--d", "2", "--word", "0,0,0,0,0"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains(" d"), "{}", out.stderr);
    let out = run(&["check", "--q", "2", "--n", "5", "--d", "3", "--word", "0,0,0"]);
    assert_eq!(out.status, 2);
    let out = run(&["check", "--q", "2", "--n", "5", "--d", "3"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("word"));
    let out = run(&["bogus"]);
    assert_eq!(out.status, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_vtcodes");
    let ok = Command::new(bin)
        .args(["check", "--q", "2", "--n", "5", "--d", "3", "--b", "0,0", "--word", "1,0,0,1,1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "codeword\n");
    let bad = Command::new(bin).args(["bounds", "--q", "4"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
