use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn infbh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infbh")).args(args).output().expect("run infbh")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn exit_codes_follow_the_verdict() {
    assert_eq!(code(&infbh(&["verify", "catalog:kz2"])), 0);
    assert_eq!(code(&infbh(&["verify", "catalog:trunc-poly-2"])), 1);
    assert_eq!(code(&infbh(&["verify", "no/such/file.json"])), 2);
    assert_eq!(code(&infbh(&["frobnicate"])), 2);
    assert_eq!(code(&infbh(&["--help"])), 0);
}

#[test]
fn verify_json_lists_truncated_pairs() {
    let o = infbh(&["verify", "catalog:trunc-poly-2", "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["passed"], false);
    assert_eq!(v["kind"], "bialgebra");
    let mut pairs: Vec<Vec<u64>> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            assert_eq!(x["equation_id"], "(12.4)");
            x["indices"].as_array().unwrap().iter().map(|i| i.as_u64().unwrap()).collect()
        })
        .collect();
    pairs.sort();
    assert_eq!(pairs, vec![vec![1, 2], vec![2, 1], vec![2, 2]]);
}

#[test]
fn catalog_selftest_and_listing() {
    assert_eq!(code(&infbh(&["catalog", "--selftest"])), 0);
    let o = infbh(&["catalog"]);
    assert_eq!(code(&o), 0);
    let listing = String::from_utf8(o.stdout).unwrap();
    assert!(listing.contains("dual-numbers") && listing.contains("kz2-yau"));
    assert_eq!(code(&infbh(&["catalog", "no-such-entry"])), 2);
}

#[test]
fn malformed_files_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let oob = write(dir.path(), "oob.json", r#"{"dim": 2, "lambda": "1", "mul": [[0, 0, 5, "1"]]}"#);
    let bad = write(dir.path(), "bad.json", r#"{"dim": 2, "lambda": "1", "mul": [[0, 0, 0, "1/0"]]}"#);
    let junk = write(dir.path(), "junk.json", "{ not json");
    for f in [&oob, &bad, &junk] {
        let o = infbh(&["verify", f]);
        assert_eq!(code(&o), 2, "{f}");
        assert!(!o.stderr.is_empty());
    }
    let o = infbh(&["verify", &oob]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("mul[0]"));
}

#[test]
fn written_models_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("delta.json");
    let out = out.to_str().unwrap();
    let o = infbh(&["delta-r", "catalog:dual-numbers", "--r", "catalog:qt-one", "--lambda", "1", "-o", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&infbh(&["verify", out])), 0);

    let o = infbh(&["trivial", "catalog:dual-numbers", "--side", "right", "--lambda", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let trivial = json(&o);
    assert_eq!(trivial["passed"], true);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(written["comul"], trivial["model"]["comul"]);
}

#[test]
fn catalog_write_produces_verifiable_files() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&infbh(&["catalog", "--write", dir.path().to_str().unwrap()])), 0);
    let kz2 = dir.path().join("kz2-yau.json");
    assert_eq!(code(&infbh(&["verify", kz2.to_str().unwrap()])), 0);
    let trunc = dir.path().join("trunc-poly-3.json");
    assert_eq!(code(&infbh(&["verify", trunc.to_str().unwrap()])), 1);
}

#[test]
fn ybe_and_search() {
    let o = infbh(&["ybe", "catalog:dual-numbers", "--r", "catalog:qt-one", "--json"]);
    assert_eq!(code(&o), 0);
    let o = infbh(&["search-r", "catalog:dual-numbers", "--coeffs=-1,0,1", "--lambda", "0", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let found = v.as_array().or_else(|| v["solutions"].as_array()).expect("solution list");
    assert_eq!(found.len(), 7);
}

#[test]
fn constructions_verify_their_outputs() {
    for args in [
        vec!["prelie", "catalog:kz2-yau"],
        vec!["prelie-coalgebra", "catalog:kz2", "--noninv"],
        vec!["rota-baxter", "catalog:dual-numbers", "--r", "catalog:qt-one", "--sign", "+"],
        vec!["hopf-module", "catalog:kz2", "--from", "unital"],
        vec!["dualize", "catalog:null3-yau"],
        vec!["tensor", "catalog:aug-dual-numbers", "catalog:aug-dual-numbers"],
        vec!["tensor", "catalog:coaug-divided-power-2", "catalog:coaug-divided-power-2", "--co"],
    ] {
        let o = infbh(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}
