use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent3")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), v)
}

#[test]
fn baer_sum_example() {
    let (code, v) = json(&["extension", "baer", "--p", "3", "--left", "omega4", "--right", "omega6"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"]["equivalent_to"], serde_json::json!(["omega5"]));
    assert_eq!(v["results"]["middle"], "M27");
}

#[test]
fn quaternion_main_theorem_is_expected_failure() {
    let (code, v) = json(&["main-theorem", "--group", "quaternion:8", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "fail-expected");
    let r = &v["results"];
    assert_eq!(r["delta"], serde_json::json!([0, 2]));
    assert_eq!(r["witnesses"]["g3"], serde_json::json!([0]));
    assert_eq!(r["verdicts"]["sandwich"], true);
}

#[test]
fn trivial_series() {
    let (code, v) = json(&["series", "--group", "cyclic:1", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["orders"], serde_json::json!([1]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["grt", "--group", "nonsense:3", "--p", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["series", "--group", "cyclic:64", "--q", "2", "--order-cap", "32"]).status.code(), Some(2));
    assert_eq!(run(&["extension", "baer", "--p", "3", "--left", "omega4"]).status.code(), Some(2));
    // Q8 does not have Galois relation type: a verdict failure, not an error.
    assert_eq!(run(&["grt", "--group", "quaternion:8", "--p", "2"]).status.code(), Some(1));
    assert_eq!(run(&["grt", "--group", "dihedral:8", "--p", "2"]).status.code(), Some(0));
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify-all", "--p", "3", "--order-cap", "27", "--jobs", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let names: Vec<&str> = v["results"]["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("omega5")));
    assert!(names.iter().any(|n| n.contains("heisenberg:3")));
}

#[test]
fn empty_catalog_passes() {
    let (code, v) = json(&["verify-all", "--p", "7", "--order-cap", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pass");
    // No catalog group is examined at p = 7.
    let checks = v["results"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["criterion"] == 7));
}

#[test]
fn text_renders_same_payload() {
    let out = run(&["cohomology", "--group", "elementary:2:2", "--modulus", "2", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("schema: 1"));
    assert!(s.contains("verdict: pass"));
    assert!(s.contains("orders: [2, 2, 2]"));
}

#[test]
fn reports_follow_schema_shape() {
    let schema: Value = serde_json::from_str(include_str!("../../../schema/report.schema.json")).unwrap();
    let verbs: Vec<Value> = schema["properties"]["command"]["properties"]["verb"]["enum"].as_array().unwrap().clone();
    let verdicts = schema["properties"]["verdict"]["enum"].as_array().unwrap().clone();
    let cases: [&[&str]; 6] = [
        &["catalog", "--p", "2"],
        &["cohomology", "--group", "cyclic:4", "--modulus", "2"],
        &["series", "--group", "dihedral:8", "--q", "2"],
        &["grt", "--group", "cyclic:9", "--p", "3"],
        &["wgroup", "--group", "dihedral:8", "--p", "2"],
        &["main-theorem", "--group", "modular:3", "--p", "3"],
    ];
    for args in cases {
        let (_, v) = json(args);
        let obj = v.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["command", "results", "schema", "verdict"], "{args:?}");
        assert!(verbs.contains(&v["command"]["verb"]), "{args:?}");
        assert!(verdicts.contains(&v["verdict"]), "{args:?}");
        assert!(v["results"].is_object(), "{args:?}");
    }
}
