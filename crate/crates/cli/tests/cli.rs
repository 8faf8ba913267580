use std::process::{Command, Output};

use apery_core::delta::delta_class;
use apery_core::{Composition, DualityClass, LinComb};
use num_bigint::BigInt;
use serde_json::Value;

fn apery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("valid json")
}

#[test]
fn delta_json_round_trips() {
    let out = apery(&["delta", "--class", "3,3", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = LinComb::<Composition, BigInt>::from_json(&json(&out)).unwrap();
    let class: DualityClass = "3,3".parse().unwrap();
    assert_eq!(parsed, *delta_class(&class));
    assert_eq!(parsed.coefficient_of(&"2,3,1".parse().unwrap()), BigInt::from(3));
}

#[test]
fn closed_family_holds() {
    let out = apery(&["delta", "--family", "t_family:6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["holds"], Value::Bool(true));
}

#[test]
fn rank_tables() {
    let out = apery(&["rank-table", "--map", "delta", "--max-weight", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let ranks: Vec<String> = stdout(&out).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(ranks.join(" "), "0 0 0 0 0 0 1 0 4 2 14 15 52");
    let out = apery(&["rank-table", "--map", "alpha", "--max-weight", "8"]);
    assert!(stdout(&out).contains("6,1"));
}

#[test]
fn large_weights_need_the_flag() {
    let out = apery(&["rank-table", "--map", "alpha", "--max-weight", "13"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = apery(&["verify", "--identity", "euler"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["checks"].as_array().map(Vec::len), Some(1));
    let out = apery(&["verify", "--identity", "no-such-identity"]);
    assert_eq!(out.status.code(), Some(2));
    let out = apery(&["verify", "--identity", "euler", "--digits", "1000", "--extended"]);
    assert_eq!(out.status.code(), Some(2));
    let out = apery(&["verify", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("eu129"));
}

#[test]
fn every_identity_runs() {
    let list = apery(&["verify", "--list", "--format", "json"]);
    let names: Vec<String> = match json(&list) {
        Value::Array(items) => items.iter().map(|i| i["name"].as_str().unwrap().to_string()).collect(),
        other => panic!("unexpected listing {other}"),
    };
    assert!(names.len() >= 20);
    for name in names {
        let out = apery(&["verify", "--identity", &name, "--digits", "30"]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }
}

#[test]
fn eval_and_enumerate() {
    let out = apery(&["eval", "--zeta", "2", "--digits", "20"]);
    assert!(stdout(&out).contains("1.6449340668482264364"));
    let out = apery(&["eval", "--sigma", "2", "--digits", "80"]);
    assert_eq!(out.status.code(), Some(2));
    let out = apery(&["enumerate", "--weight", "5", "--filter", "classes", "--format", "json"]);
    assert_eq!(json(&out)["count"], Value::from(4));
    let out = apery(&["enumerate", "--weight", "0", "--filter", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn delta_matrix_text() {
    let out = apery(&["delta-matrix", "--weight", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("block structure holds: true"));
    assert!(text.contains("determinant: 9"));
}
