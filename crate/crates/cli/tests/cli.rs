use std::process::{Command, Output};

fn prolate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prolate")).args(args).env_remove("PROLATE_THREADS").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn eigvec_small_orders() {
    let out = prolate(&["eigvec", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["entries"], serde_json::json!(["-2", "-1", "1"]));
    let out = prolate(&["eigvec", "--n", "0"]);
    assert_eq!(json(&out)["entries"], serde_json::json!(["1"]));
    let out = prolate(&["eigvec", "--n", "4", "--format", "csv"]);
    assert!(stdout(&out).starts_with("k,v_k,z_coeff\n0,7/2,1\n"));
}

#[test]
fn eigvec_rejects_odd_order() {
    let out = prolate(&["eigvec", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("N must be even"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "pascal", "--n-max", "20"],
        vec!["verify", "ode", "--n-max", "20"],
        vec!["verify", "helper", "--n-max", "0"],
        vec!["verify", "symmetric-square", "--n-min", "4", "--n-max", "10"],
        vec!["verify", "functional-eq", "--n-max", "9"],
    ] {
        let out = prolate(&args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(json(&out)["pass"], true);
    }
}

#[test]
fn verify_bad_range_is_usage_error() {
    assert_eq!(prolate(&["verify", "pascal", "--n-min", "5", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(prolate(&["verify", "nonsense", "--n-max", "2"]).status.code(), Some(2));
}

#[test]
fn curve_records() {
    let out = prolate(&["curve", "--p", "3", "--z", "2"]);
    assert_eq!(stdout(&out), "{\"p\":3,\"z\":2,\"points\":4,\"trace\":0}\n");
    let out = prolate(&["curve", "--p", "5", "--sweep"]);
    let lines: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("\"z\":2") && lines[2].contains("\"z\":4"));
    let out = prolate(&["curve", "--p", "5", "--sweep", "--format", "csv"]);
    assert_eq!(stdout(&out), "p,z,points,trace\n5,2,8,-2\n5,3,4,2\n5,4,8,-2\n");
}

#[test]
fn curve_argument_errors() {
    assert_eq!(prolate(&["curve", "--p", "4", "--z", "2"]).status.code(), Some(2));
    assert_eq!(prolate(&["curve", "--p", "5", "--z", "1"]).status.code(), Some(2));
    assert_eq!(prolate(&["curve", "--p", "5"]).status.code(), Some(2));
    assert_eq!(prolate(&["curve", "--p", "5", "--z", "2", "--sweep"]).status.code(), Some(2));
}

#[test]
fn congruence_reports() {
    for p in ["3", "5"] {
        let out = prolate(&["congruence", "--p", p]);
        assert!(out.status.success());
        let v = json(&out);
        assert_eq!(v["pass"], true);
        assert_eq!(v["checks"].as_array().unwrap().len(), 5);
    }
    assert_eq!(prolate(&["congruence", "--p", "9"]).status.code(), Some(2));
}

#[test]
fn padic_reports() {
    let out = prolate(&["padic", "--p", "3", "--n", "2", "--samples", "5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["samples"], serde_json::json!([1, 2, 3, 4, 5]));
    assert_eq!(v["pass"], true);
    assert!(v["witness"].is_null());
    assert!(prolate(&["padic", "--p", "3", "--n", "1", "--samples", "1"]).status.success());
    assert_eq!(prolate(&["padic", "--p", "2", "--n", "1"]).status.code(), Some(2));
    assert_eq!(prolate(&["padic", "--p", "101", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn integral_inside_disk() {
    for n in ["2", "4"] {
        let out = prolate(&["integral", "--n", n, "--samples", "10", "--tol", "1e-8"]);
        assert!(out.status.success(), "N={n}");
        let v = json(&out);
        assert!(v["max_error"].as_f64().unwrap() < 1e-8);
        assert_eq!(v["samples"].as_array().unwrap().len(), 10);
    }
    assert_eq!(prolate(&["integral", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn threads_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_prolate"))
        .args(["curve", "--p", "7", "--sweep"])
        .env("PROLATE_THREADS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_prolate"))
        .args(["curve", "--p", "7", "--sweep"])
        .env("PROLATE_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
