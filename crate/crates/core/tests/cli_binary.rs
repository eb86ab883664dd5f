//! The `hurwitz` binary as a subprocess: exit codes, stdout, environment.

use std::process::{Command, Output};

fn hurwitz(args: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hurwitz"));
    cmd.args(args.split_whitespace());
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn conv_prints_the_convergent() {
    let o = hurwitz("conv --alpha 1 --b0 2 --b1 2 --d 3 --r 2 --n 1", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "p=12 q=7 index=4\n");
}

#[test]
fn limit_prints_tan_one() {
    let o = hurwitz("limit --alpha 1 --b0 1 --b1 2 --d 2 --r 1 --digits 30", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("1.55740772465490223050697480746"));
}

#[test]
fn limit_json_keeps_big_numbers_as_strings() {
    let o = hurwitz("conv --alpha 3 --b0 5 --b1 7 --d 4 --r 3 --n 40 --json", &[]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["p"].as_str().unwrap().len() > 40);
    assert_eq!(v["index"], 162);
}

#[test]
fn verify_identities_succeeds() {
    let o = hurwitz("verify --suite identities --n-max 20", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let a = hurwitz("verify --suite hurwitz --n-max 10 --jobs 1", &[]);
    let b = hurwitz("verify --suite hurwitz --n-max 10 --jobs 4", &[]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn flag_errors_exit_2() {
    for args in [
        "conv --alpha 1 --b0 2 --b1 2 --d 3 --n -1",
        "limit --alpha 1 --b0 2 --b1 2 --d 3 --digits 1e3",
        "conv --alpha 1 --b0 2 --b1 2 --d 0 --n 1",
        "verify --suite everything",
    ] {
        assert_eq!(hurwitz(args, &[]).status.code(), Some(2), "{args}");
    }
}

#[test]
fn precision_cap_comes_from_the_environment() {
    let args = "limit --alpha 1 --b0 2 --b1 2 --d 3 --r 2 --digits 200";
    let capped = hurwitz(args, &[("HURWITZ_MAX_PRECISION", "128")]);
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("128 bits"));
    assert_eq!(hurwitz(args, &[]).status.code(), Some(0));
}
