use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use clap::Parser;
use ltp_hodge::cli::{run, Cli};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn run_lib(args: &[&str]) -> ltp_hodge::cli::Outcome {
    let argv = std::iter::once("ltp-hodge").chain(args.iter().copied());
    run(&Cli::try_parse_from(argv).expect("valid arguments"))
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltp-hodge"))
        .args(args)
        .env_remove("LTP_HODGE_FAN_DIR")
        .output()
        .expect("binary runs")
}

/// Compares with a golden file. Set `LTP_HODGE_BLESS=1` to rewrite it.
fn check_golden(name: &str, actual: &str) {
    let path = golden_dir().join(name);
    if std::env::var_os("LTP_HODGE_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn golden_table3() {
    check_golden("table3.txt", &run_lib(&["table3"]).stdout);
    check_golden(
        "table3.csv",
        &run_lib(&["table3", "--format", "csv"]).stdout,
    );
}

#[test]
fn golden_table1_sweep() {
    let text = run_lib(&["sweep"]);
    assert_eq!(text.code, 0);
    check_golden("sweep_k2_9.txt", &text.stdout);
    check_golden(
        "sweep_k2_9.csv",
        &run_lib(&["sweep", "--format", "csv"]).stdout,
    );
}

#[test]
fn golden_families() {
    check_golden(
        "families.json",
        &run_lib(&["families", "--format", "json"]).stdout,
    );
}

#[test]
fn table3_csv_has_twelve_rows() {
    let out = run_lib(&["table3", "--format", "csv"]).stdout;
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 12);
    let fields = |i: usize| records[i].iter().collect::<Vec<_>>();
    assert_eq!(fields(0), ["E8", "1", "P3", "2", "3878", "15564", "23328"]);
    assert_eq!(fields(11)[3..6], ["5", "779", "3180"]);
}

#[test]
fn verify_so5_json() {
    let out = bin(&[
        "verify",
        "--family",
        "so5",
        "--base",
        "rational:K2=9",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert!(v["comparisons"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!([1, 1, 4, 4])));
    assert!(v["caveats"][0]
        .as_str()
        .unwrap()
        .starts_with("IntegralTorsionPresent"));
}

#[test]
fn counterexamples_are_expected_failures() {
    let out = bin(&["counterexamples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("fails (expected)").count(), 9);
    assert!(text.contains("k3xp1 over P1xP1"));
    assert!(text.contains("h^{1,1}      21 != 3"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--family", "nope"][..],
        &["verify", "--family", "so5", "--base", "toric:1"],
        &["verify", "--family", "e8", "--base", "garbage"],
        &["sweep", "--base", "P3"],
        &["toric", "show", "0"],
        &["frobnicate"],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn expected_outcomes_exit_0() {
    assert_eq!(bin(&["verify", "--family", "k3xp2"]).status.code(), Some(0));
    assert_eq!(
        bin(&["verify", "--family", "surface", "--base", "curve:g=3"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["families"][..],
        &["sweep", "--format", "json"],
        &["counterexamples", "--format", "csv"],
    ] {
        let a = bin(args);
        let b = bin(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn every_family_verifies_by_id() {
    let out = run_lib(&["families", "--format", "json"]).stdout;
    let records: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(records.len(), 23);
    for r in records {
        let id = r["id"].as_str().unwrap();
        let v = run_lib(&["verify", "--family", id]);
        assert_eq!(v.code, 0, "{id}: {}{}", v.stdout, v.stderr);
    }
}

#[test]
fn toric_subcommands() {
    let degree = bin(&["toric", "degree", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&degree.stdout).unwrap();
    assert_eq!(v["degree"], 54);
    let hodge = run_lib(&["toric", "hodge", "17", "--format", "csv"]).stdout;
    assert!(hodge.contains("1,1,5\n"));
    let show = run_lib(&["toric", "show", "1"]).stdout;
    assert!(show.starts_with("fan (1): P3\n4 rays, 6 two-dimensional cones, 4 maximal cones"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ltp-hodge-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t3.csv");
    let out = bin(&[
        "table3",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        std::fs::read_to_string(golden_dir().join("table3.csv")).unwrap()
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn fan_dir_override() {
    let dir = std::env::temp_dir().join(format!("ltp-hodge-fans-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    // fan 1 replaced by P1 x P1 x P1 (degree 48)
    std::fs::write(
        dir.join("01.json"),
        r#"{"name": "cube", "rays": [[1,0,0],[0,1,0],[0,0,1],[-1,0,0],[0,-1,0],[0,0,-1]],
            "cones": [[0,1,2],[1,3,2],[3,4,2],[4,0,2],[1,0,5],[3,1,5],[4,3,5],[0,4,5]]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ltp-hodge"))
        .args(["toric", "degree", "1"])
        .env("LTP_HODGE_FAN_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "48\n");
    let missing = Command::new(env!("CARGO_BIN_EXE_ltp-hodge"))
        .args(["toric", "degree", "2"])
        .env("LTP_HODGE_FAN_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}
