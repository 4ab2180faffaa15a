//! End-to-end tests of the `blend` binary: subcommand output, exit
//! codes, and the gen -> eval round trip.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn blend(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blend"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn blend_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blend"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn spec_file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const STEP00: &str = r#"{"a":0,"b":1,"p":[-1],"q":[1]}"#;

#[test]
fn gen_step_emits_expected_spec() {
    let out = blend(&["gen", "step", "0", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["a"], 0.0);
    assert_eq!(v["b"], 1.0);
    assert_eq!(v["p"][0], -1.0);
    assert_eq!(v["q"][0], 1.0);
}

#[test]
fn gen_cospi_coefficients() {
    let out = blend(&["gen", "cospi", "2", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let p2 = v["p"][2].as_f64().unwrap();
    assert!((p2 + std::f64::consts::PI.powi(2) / 2.0).abs() < 1e-12);
}

#[test]
fn gen_eval_round_trip_is_lossless() {
    let out = blend(&["gen", "cospi", "8", "8"]);
    assert!(out.status.success());
    let spec = spec_file(&stdout(&out));
    let path = spec.path().to_str().unwrap();

    // the value the library gives for the parsed spec must be bit-equal
    // to evaluating the generator directly
    let eval = blend(&["eval", "--spec", path, "--at", "0.5"]);
    assert!(eval.status.success());
    let text = stdout(&eval);
    let row = text.lines().nth(1).unwrap();
    let val: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
    assert_eq!(val, blends::generators::cospi(8, 8).eval(0.5));
}

#[test]
fn eval_grid_csv() {
    let spec = spec_file(STEP00);
    let out = blend(&[
        "eval",
        "--spec",
        spec.path().to_str().unwrap(),
        "--points",
        "0:1:3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "z,h0\n0,-1\n0.5,0\n1,1\n");
}

#[test]
fn eval_with_derivatives_has_header_columns() {
    let spec = spec_file(STEP00);
    let out = blend(&[
        "eval",
        "--spec",
        spec.path().to_str().unwrap(),
        "--points",
        "0:1:5",
        "--nder",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "z,h0,h1,h2");
    assert_eq!(lines.count(), 5);
}

#[test]
fn eval_at_points() {
    let spec = spec_file(STEP00);
    let out = blend(&[
        "eval",
        "--spec",
        spec.path().to_str().unwrap(),
        "--at",
        "0.25",
        "--at",
        "0.75",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("0.25,-0.5"));
    assert!(text.contains("0.75,0.5"));
}

#[test]
fn exit_codes() {
    // malformed spec -> 2
    let bad = spec_file(r#"{"a":0,"b":0,"p":[1],"q":[1]}"#);
    let out = blend(&[
        "eval",
        "--spec",
        bad.path().to_str().unwrap(),
        "--at",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty(), "data stream must stay clean");
    assert!(!stderr(&out).is_empty());

    // bad points spec -> 2
    let spec = spec_file(STEP00);
    let path = spec.path().to_str().unwrap();
    for points in ["0:1:1", "0:1:0", "0:1", "a:b:c"] {
        let out = blend(&["eval", "--spec", path, "--points", points]);
        assert_eq!(out.status.code(), Some(2), "points spec {points:?}");
    }
    // neither --points nor --at -> 2
    let out = blend(&["eval", "--spec", path]);
    assert_eq!(out.status.code(), Some(2));

    // missing file -> 3
    let out = blend(&["eval", "--spec", "/nonexistent/blend.json", "--at", "0.5"]);
    assert_eq!(out.status.code(), Some(3));

    // unknown subcommand -> 2 (clap)
    let out = blend(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn integrate_step_is_zero() {
    let spec = spec_file(STEP00);
    let out = blend(&["integrate", "--spec", spec.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn integrate_exact_prints_rational() {
    // 2 * (1/2 * 1/10 + 1/2 * 3/10) = 1/5, exactly
    let spec = spec_file(r#"{"a":0,"b":2,"p":["0.1"],"q":["0.3"]}"#);
    let out = blend(&[
        "integrate",
        "--spec",
        spec.path().to_str().unwrap(),
        "--exact",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2/5");
}

#[test]
fn weights_formats() {
    let out = blend(&["weights", "4", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "wp,1/2,1/9,1/36,1/168,1/1260\nwq,1/2,-1/9,1/36,-1/168,1/1260\n"
    );

    let out = blend(&["weights", "0", "0", "--format", "decimals"]);
    assert_eq!(stdout(&out), "wp,0.5\nwq,0.5\n");
}

#[test]
fn lebesgue_grade_zero_is_one() {
    let out = blend(&["lebesgue", "0", "0", "--points", "0:1:5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "s,L");
    for line in text.lines().skip(1) {
        assert_eq!(line.split(',').nth(1).unwrap(), "1");
    }
}

#[test]
fn antiderivative_of_step() {
    let spec = spec_file(STEP00);
    let out = blend(&["antiderivative", "--spec", spec.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["p"][0], 0.0);
    assert_eq!(v["p"][1], -1.0);
    assert_eq!(v["q"][0], 0.0);
    assert_eq!(v["q"][1], 1.0);
}

const STRING_SQUARE: &str = r#"{"knots":[0,1,2],"taylor":[[0,0],[1,2],[4,4]]}"#;

#[test]
fn string_eval_and_integrate() {
    let spec = spec_file(STRING_SQUARE);
    let path = spec.path().to_str().unwrap();

    let out = blend(&["string-eval", "--spec", path, "--at", "1", "--nder", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "z,h0,h1\n1,1,2\n");

    // z^2 over [0,2]
    let out = blend(&["string-integrate", "--spec", path]);
    assert!(out.status.success());
    let val: f64 = stdout(&out).trim().parse().unwrap();
    assert!((val - 8.0 / 3.0).abs() < 1e-13);

    // out-of-range point -> 2
    let out = blend(&["string-eval", "--spec", path, "--at", "2.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn overflow_warning_goes_to_stderr() {
    let gen = blend(&["gen", "step", "600", "520"]);
    let spec = spec_file(&stdout(&gen));
    let out = blend(&[
        "eval",
        "--spec",
        spec.path().to_str().unwrap(),
        "--at",
        "0.5",
    ]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("warning"));
    // stdout still parses as CSV
    assert!(stdout(&out).starts_with("z,h0\n"));
}

#[test]
fn thread_cap_env_var() {
    let spec = spec_file(STEP00);
    let path = spec.path().to_str().unwrap();
    for threads in ["1", "0", "4"] {
        let out = blend_env(
            &["eval", "--spec", path, "--points", "0:1:9"],
            "BLEND_THREADS",
            threads,
        );
        assert!(out.status.success(), "BLEND_THREADS={threads}");
        assert_eq!(stdout(&out).lines().count(), 10);
    }
    let out = blend_env(
        &["eval", "--spec", path, "--at", "0.5"],
        "BLEND_THREADS",
        "lots",
    );
    assert!(out.status.success());
    assert!(stderr(&out).contains("BLEND_THREADS"));
}
