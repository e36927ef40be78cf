use std::path::Path;
use std::process::{Command, Output};

use bmw_fusion::bmw::{element_to_json, Context};
use bmw_fusion::fusion::symmetrizers::{antisymmetrizer, Form};
use bmw_fusion::scalars::{make_params, rat};
use serde_json::Value;

fn bmwf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmwf"))
        .args(args)
        .env_remove("BMWF_CACHE")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn records(v: &Value) -> &Vec<Value> {
    v["records"].as_array().unwrap()
}

#[test]
fn idempotents_bmw2() {
    let out = bmwf(&["idempotents", "--n", "2", "--q", "6/5", "--nu", "7/3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(records(&v).len(), 3);
    assert_eq!(v["sum_is_one"], Value::Bool(true));
    let ctx = Context::build(2, &make_params(rat(6, 5), rat(7, 3), 2).unwrap()).unwrap();
    let a = antisymmetrizer(&ctx, 2, Form::Chain).unwrap();
    let rec = records(&v).iter().find(|r| r["tableau"] == "1;1,1").unwrap();
    assert_eq!(rec["element"], element_to_json(&ctx, &a));
}

#[test]
fn jm_method_bmw3() {
    let out = bmwf(&["idempotents", "--n", "3", "--method", "jm"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(records(&v).len(), 7);
    assert_eq!(v["sum_is_one"], Value::Bool(true));
    assert!(records(&v).iter().all(|r| r["method"] == "jm-oracle"));
}

#[test]
fn selected_tableaux() {
    let out = bmwf(&["idempotents", "--n", "3", "--tableau", "1;0;1", "--tableau", "1;2;3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(records(&v).len(), 2);
    assert_eq!(v["sum_is_one"], Value::Null);
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(bmwf(&["idempotents", "--n", "2", "--q", "1/1"]).status.code(), Some(2));
    assert_eq!(bmwf(&["idempotents", "--n", "2", "--q", "x"]).status.code(), Some(2));
    assert_eq!(bmwf(&["idempotents", "--n", "9"]).status.code(), Some(2));
    assert_eq!(bmwf(&["idempotents", "--n", "2", "--tableau", "1;3"]).status.code(), Some(2));
    assert_eq!(bmwf(&["cache", "info"]).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["idempotents", "--n", "3"];
    let a = bmwf(&[&["--jobs", "1"][..], &args].concat());
    let b = bmwf(&[&["--jobs", "4"][..], &args].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cold_and_warm_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = bmwf(&["--cache-dir", d, "idempotents", "--n", "3"]);
    let listed = bmwf(&["--cache-dir", d, "cache", "info"]);
    assert!(String::from_utf8_lossy(&listed.stdout).contains("1 files"));
    let warm = bmwf(&["--cache-dir", d, "idempotents", "--n", "3"]);
    assert_eq!(cold.stdout, warm.stdout);
    let cleared = bmwf(&["--cache-dir", d, "cache", "clear"]);
    assert!(String::from_utf8_lossy(&cleared.stdout).contains("removed 1"));
}

#[test]
fn cache_env_overrides_flag() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_bmwf"))
        .args(["--cache-dir", flag_dir.path().to_str().unwrap(), "idempotents", "--n", "2"])
        .env("BMWF_CACHE", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let count = |p: &Path| std::fs::read_dir(p).unwrap().count();
    assert_eq!((count(env_dir.path()), count(flag_dir.path())), (1, 0));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = bmwf(&["--seed", "1", "verify", "--suite", "reflection", "--n", "3", "--json", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["reports"][0]["checks"], 30);
    assert_eq!(v["reports"][0]["failures"], 0);

    let out = bmwf(&["verify", "--suite", "contraction", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("regime 1, Q block") && text.contains("regime 2, T block"));
    assert!(text.trim_end().ends_with("PASS"));

    for suite in ["relations", "fusion", "hecke"] {
        assert_eq!(bmwf(&["verify", "--suite", suite, "--n", "3"]).status.code(), Some(0), "{suite}");
    }
}

#[test]
fn tableaux_and_params() {
    let out = bmwf(&["tableaux", "--n", "2", "--contents", "quantum"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows, ["1;2\t1 36/25", "1;1,1\t1 25/36", "1;0\t1 49/9"]);

    let out = bmwf(&["tableaux", "--n", "2", "--contents", "classical", "--omega", "5", "--json"]);
    let v = json(&out);
    assert_eq!(v[0]["contents"], serde_json::json!(["2", "3"]));

    let out = bmwf(&["params", "suggest", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["certified_n"], 5);
    let q = bmw_fusion::scalars::parse_rational(v["q"].as_str().unwrap()).unwrap();
    let nu = bmw_fusion::scalars::parse_rational(v["nu"].as_str().unwrap()).unwrap();
    assert!(make_params(q, nu, 5).is_ok());
}

#[test]
fn symmetrizers_agree() {
    let out = bmwf(&["symmetrizers", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["S"]["equal"], Value::Bool(true));
    assert_eq!(v["A"]["equal"], Value::Bool(true));
}

#[test]
fn exports() {
    let v = json(&bmwf(&["export", "--n", "3", "--kind", "words"]));
    assert_eq!(v["dim"], 15);
    let v = json(&bmwf(&["export", "--n", "3", "--kind", "hecke"]));
    assert_eq!(records(&v).len(), 4);
    let v = json(&bmwf(&["export", "--n", "2", "--kind", "brauer", "--regime", "2"]));
    assert_eq!(records(&v).len(), 3);
    let pi = records(&v).iter().find(|r| r["tableau"] == "1;0").unwrap();
    assert_eq!(pi["element"]["terms"][0]["coeff"], "1/5");
    assert_eq!(bmwf(&["export", "--n", "2", "--kind", "brauer", "--regime", "3"]).status.code(), Some(2));
}
