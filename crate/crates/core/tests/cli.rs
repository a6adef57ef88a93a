use std::process::{Command, Output};

use serde_json::Value;

fn bsato(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bsato"))
        .args(args)
        .env_remove("BSATO_DEGREE_BOUND")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn text_output_for_the_cusp() {
    let out = bsato(&["bf", "--vars", "x,y", "x^2+y^3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("b(s) = (s+1)(s+5/6)(s+7/6)\n"), "{text}");
}

#[test]
fn json_envelope() {
    let out = bsato(&["lct", "--vars", "x,y", "x^2+y^3", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "lct");
    assert_eq!(v["result"]["lct"], "5/6");
    assert_eq!(v["provenance"]["route"], "bfunction");
    assert!(v["timing_ms"].is_null());

    let timed = json(&bsato(&["lct", "--vars", "x,y", "x^2+y^3", "--format", "json", "--timing"]));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn usage_errors_exit_with_two_and_print_nothing() {
    for args in [
        &["bf", "--vars", "x,y", "x^2+z"][..],
        &["bf", "--vars", "x,y", "x^2+"],
        &["verify", "--vars", "x,y", "x^2+y^3", "-b", "s+1"],
        &["inner", "--vars", "x,y", "x^2+y^3"],
        &["frobnicate", "--vars", "x"],
    ] {
        let out = bsato(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn unknown_identifier_is_named() {
    let out = bsato(&["bf", "--vars", "x,y", "x^2+z"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains('z') && err.contains("column 5"), "{err}");
}

#[test]
fn invalid_certificate_is_not_an_error() {
    let out = bsato(&["verify", "--vars", "x", "x", "-b", "s+1", "-P", "2*dx", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["valid"], false);
    assert!(v["result"]["residual"].is_string());
}

#[test]
fn degree_bound_comes_from_the_environment() {
    let run = |bound: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_bsato"));
        cmd.args(["vfilt", "--vars", "x", "x^2", "--format", "json"]);
        match bound {
            Some(b) => cmd.env("BSATO_DEGREE_BOUND", b),
            None => cmd.env_remove("BSATO_DEGREE_BOUND"),
        };
        json(&cmd.output().unwrap())
    };
    assert_eq!(run(None)["input_echo"]["degree_bound"], 6);
    let small = run(Some("2"));
    assert_eq!(small["input_echo"]["degree_bound"], 2);
    assert_eq!(small["result"]["jump_values"].as_array().unwrap().len(), 3);
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["mult-table", "--vars", "x,y,z", "--monomial", "x*y,y*z,x*z", "--format", "json"];
    assert_eq!(bsato(&args).stdout, bsato(&args).stdout);
}
