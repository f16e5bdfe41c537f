use std::io::Write;
use std::process::Command;

use serde_json::Value;
use tempfile::NamedTempFile;

use segre::cli::{exit_code, run, Outcome};
use segre::Error;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");

fn data(name: &str) -> String {
    format!("{DATA}/{name}")
}

fn segre(args: &[&str]) -> Outcome {
    let mut full = vec!["segre"];
    full.extend_from_slice(args);
    run(full)
}

fn input(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn segre_of_ruling_prints_class() {
    let out = segre(&["segre", &data("cone.txt"), "--x", "X", "--y", "Y"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "1 [P^1]");
}

#[test]
fn json_shape() {
    let out = segre(&["--json", "--seed", "7", "csm", &data("cone.txt"), "--z", "Y"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let class: Vec<(u64, i64)> = v["class"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["dim"].as_u64().unwrap(), t["coeff"].as_i64().unwrap()))
        .collect();
    assert_eq!(class, vec![(2, 2), (1, 4), (0, 3)]);
    assert!(v["deltas"].is_array());
    assert!(v["prime"].as_u64().unwrap() > 1 << 20);
    // two pipelines, plus a third only when they disagree
    assert!((2..=3).contains(&v["seeds"].as_array().unwrap().len()));
}

#[test]
fn seed_makes_output_byte_identical() {
    let args = ["--json", "--seed", "12345", "polar", &data("cayley.txt"), "--z", "C"];
    let a = segre(&args);
    let b = segre(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["polar"], serde_json::json!([3, 6, 4]));
}

#[test]
fn different_seeds_agree_on_the_answer() {
    for seed in ["1", "2", "3"] {
        let out = segre(&["--seed", seed, "eddegree", &data("cayley.txt"), "--z", "C"]);
        assert_eq!(out.stdout.trim(), "13");
    }
}

#[test]
fn prime_flag_overrides_file() {
    let f = input("field 1000003\nring x, y, z\nideal X = x, y\n");
    let path = f.path().to_str().unwrap();
    let from_file: Value = serde_json::from_str(&segre(&["--json", "segre", path, "--x", "X"]).stdout).unwrap();
    assert_eq!(from_file["prime"], 1000003);
    let flagged: Value =
        serde_json::from_str(&segre(&["--json", "--prime", "2147483647", "segre", path, "--x", "X"]).stdout).unwrap();
    assert_eq!(flagged["prime"], 2147483647u64);
    assert_eq!(from_file["class"], flagged["class"]);
}

#[test]
fn intersect_and_tau() {
    let out = segre(&[
        "intersect",
        &data("grassmannian.txt"),
        "--x",
        "S21",
        "--v",
        "S1",
        "--y",
        "G",
        "--normal",
        "1,1,1,1/2",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "1 [P^0]");

    let out = segre(&["tau", &data("det3.txt"), "--size", "3", "--corank", "1", "--center", "L321"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "0");
}

#[test]
fn x_equal_to_y_is_an_input_error() {
    let out = segre(&["segre", &data("cone.txt"), "--x", "Y", "--y", "Y"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("undefined"), "{}", out.stderr);
}

#[test]
fn parse_errors_carry_a_position() {
    let f = input("ring x, y\nideal X = x + 1\n");
    let out = segre(&["segre", f.path().to_str().unwrap(), "--x", "X"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("2:"), "{}", out.stderr);
}

#[test]
fn unknown_ideal_and_bad_flags() {
    assert_eq!(segre(&["segre", &data("cone.txt"), "--x", "Nope"]).code, 1);
    assert_eq!(segre(&["segre"]).code, 1);
    assert_eq!(segre(&["--help"]).code, 0);
    assert_eq!(segre(&["segre", "/no/such/file", "--x", "X"]).code, 1);
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&Error::RandomizationInconsistency), 2);
    assert_eq!(exit_code(&Error::GenericityFailure { stage: "s".into(), detail: "d".into() }), 2);
    assert_eq!(exit_code(&Error::SegreUndefined), 1);
    assert_eq!(exit_code(&Error::Inhomogeneous), 1);
}

#[test]
fn binary_exit_status_and_output() {
    let bin = env!("CARGO_BIN_EXE_segre");
    let ok = Command::new(bin)
        .args(["mather", &data("cone.txt"), "--z", "Y"])
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "2 [P^2] + 4 [P^1] + 2 [P^0]");

    let bad = Command::new(bin)
        .args(["segre", &data("cone.txt"), "--x", "Y", "--y", "Y"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
