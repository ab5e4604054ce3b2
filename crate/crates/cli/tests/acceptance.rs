//! Criterion 10: the documented invocations produce byte-stable JSON and
//! the documented exit codes.

use std::process::{Command, Output};

fn palf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_palf")).args(args).output().expect("spawn palf")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR")))
        .expect("golden file")
}

#[test]
fn criterion_10_cli_golden_files() {
    let out = palf(&["check-hs", "--page", "4", "d1, 0/1, 1/0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden("check_hs_sphere.json"));

    let out = palf(&["check-hs", "--page", "2", "{1}, {1}", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden("check_hs_rp3.json"));

    let out = palf(&["total", "d1, 0/1, 1/0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), golden("total_dba.json"));

    let out = palf(&["total", "d1, 0/1, 1/0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "delta=(1,0,0,0) word=A\u{b7}B\n");

    println!("criterion 10 PASS: golden JSON byte-identical and exit codes 0/1 as documented");
}

#[test]
fn parse_errors_exit_2() {
    let out = palf(&["total", "d1, 2/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-coprime"));

    let out = palf(&["check-hs", ""]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_verdicts_exit_1() {
    let out = palf(&["equiv", "1/0, 1/0", "1/0, 0/1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("distinguished"));

    let out = palf(&["classify", "d1, 0/1, 1/0", "d1, 0/1, 1/2"]);
    assert_eq!(out.status.code(), Some(0), "conjugate totals classify as equivalent");
}

#[test]
fn equiv_certificate_is_reported() {
    let out = palf(&["equiv", "1/0, 0/1", "0/1, 1/2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "equivalent");
    assert!(v["certificate"].as_array().is_some_and(|c| !c.is_empty()));
}
