use std::process::{Command, Output};

use serde_json::Value;

fn qhurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhurwitz"))
        .args(args)
        .env_remove("HURWITZ_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn hurwitz_s3_degree_two() {
    let out = qhurwitz(&["hurwitz", "--n", "3", "--d", "2", "--mu", "2,1", "--nu", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["result"]["series"]["coeffs"][2], "1");
    assert_eq!(doc["result"]["series"]["coeffs"][0], "0");
    assert_eq!(doc["warnings"][0], "n-small regime");
}

#[test]
fn hurwitz_parity_zero() {
    let out = qhurwitz(&["hurwitz", "--n", "3", "--d", "1", "--mu", "1,1,1", "--nu", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    let coeffs = doc["result"]["series"]["coeffs"].as_array().unwrap();
    assert!(coeffs.iter().all(|c| c == "0"));
}

#[test]
fn validation_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["hurwitz", "--n", "3", "--d", "2", "--mu", "2,1"],
        &["hurwitz", "--n", "4", "--d", "2", "--mu", "2,1", "--nu", "2,1"],
        &["hurwitz", "--n", "3", "--d", "2", "--mu", "1,2", "--nu", "2,1"],
        &["zfun", "--d", "0"],
        &["measure", "--d", "2", "--q", "3/2"],
        &["measure", "--d", "2", "--q", "0"],
        &["measure", "--d", "2", "--q", "1/0"],
        &["tau-check", "--n-max", "9"],
        &["tau-check", "--n-max", "2", "--d-max", "6"],
        &["asympt", "--n", "4", "--d", "1", "--mu", "2,1,1", "--nu", "2,1,1"],
    ];
    for args in cases {
        let out = qhurwitz(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn zfun_leading_coefficients() {
    for (d, lead) in [("2", ["2", "1"]), ("5", ["7", "5"])] {
        let out = qhurwitz(&["zfun", "--d", d]);
        assert_eq!(out.status.code(), Some(0));
        let doc = json_of(&out);
        assert_eq!(doc["verdict"], "pass");
        assert_eq!(doc["leading"], serde_json::json!(lead));
    }
    let doc = json_of(&qhurwitz(&["zfun", "--d", "2"]));
    assert!(doc["display"].as_str().unwrap().starts_with("2q^2 + q^3"));
}

#[test]
fn measure_sums_to_one() {
    let doc = json_of(&qhurwitz(&["measure", "--d", "2", "--q", "1/10"]));
    assert_eq!(doc["pushforward_total"], "1");
    let doc = json_of(&qhurwitz(&["measure", "--d", "4", "--q", "1/100", "--n", "8"]));
    assert_eq!(doc["pushforward_total"], "1");
    assert_eq!(doc["theta_total"], "1");
    assert_eq!(doc["warnings"], serde_json::json!([]));
    let top = &doc["pushforward"]["support"][0];
    assert_eq!(top["lambda"], "4");
    let (num, den) = top["prob"].as_str().unwrap().split_once('/').unwrap();
    let (num, den): (u128, u128) = (num.parse().unwrap(), den.parse().unwrap());
    assert!(num * 50 > den * 49);
}

#[test]
fn tau_check_report() {
    let out = qhurwitz(&["tau-check", "--n-max", "3", "--d-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["report"]["checked"], 56);
    assert_eq!(doc["report"]["mismatches"], 0);
    assert!(doc["report"]["identically_zero"].as_u64().unwrap() > 0);
}

#[test]
fn asympt_pass_and_regime() {
    let doc = json_of(&qhurwitz(&["asympt", "--n", "4", "--d", "2", "--mu", "2,1,1", "--nu", "2,1,1"]));
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["euler_characteristic"], 6);
    assert_eq!(doc["warnings"], serde_json::json!([]));
    let doc = json_of(&qhurwitz(&["asympt", "--n", "3", "--d", "2", "--mu", "2,1", "--nu", "2,1"]));
    assert_eq!(doc["warnings"][0], "n-small regime");
}

#[test]
fn csv_rows_are_power_numerator_denominator() {
    let out = qhurwitz(&["--output", "csv", "zfun", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("power,numerator,denominator"));
    assert_eq!(lines.next(), Some("2,2,1"));
    assert_eq!(lines.next(), Some("3,1,1"));
}

#[test]
fn output_is_deterministic() {
    let args = ["weights", "--d", "4"];
    assert_eq!(qhurwitz(&args).stdout, qhurwitz(&args).stdout);
    let args = ["hurwitz", "--n", "4", "--d", "3", "--mu", "2,1,1", "--nu", "3,1"];
    assert_eq!(qhurwitz(&args).stdout, qhurwitz(&args).stdout);
}

#[test]
fn cache_dir_flag_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let args = ["--char-cache-dir", path, "hurwitz", "--n", "4", "--d", "2", "--mu", "2,2", "--nu", "2,2"];
    let first = qhurwitz(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(dir.path().join("chartable-n4.txt").exists());
    assert_eq!(qhurwitz(&args).stdout, first.stdout);

    let env_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qhurwitz"))
        .args(["hurwitz", "--n", "3", "--d", "2", "--mu", "3", "--nu", "3"])
        .env("HURWITZ_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(env_dir.path().join("chartable-n3.txt").exists());
}
