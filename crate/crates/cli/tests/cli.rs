use std::process::{Command, Output};

use serde_json::Value;

fn freemix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freemix"))
        .args(args)
        .env_remove("FREEMIX_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = freemix(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().unwrap(), value)
}

fn column(v: &Value, key: &str) -> Vec<String> {
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r[key].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn chain_tables() {
    let (code, v) = json(&["moments", "--chain", "zm:1", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(column(&v, "inductive"), ["1", "2", "5"]);
    assert_eq!(column(&v, "closed"), ["1", "2", "5"]);

    // the Rademacher law is the Fuss-Catalan law of order 0, so this is C(k, 2)
    let (code, v) = json(&["moments", "--chain", "zm:2,rademacher", "--k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(column(&v, "closed"), ["1", "3", "12", "55"]);

    let (_, v) = json(&["moments", "--chain", "zm:2,zm:1", "--k", "4"]);
    assert_eq!(column(&v, "closed"), ["1", "4", "22", "140"]);
    assert_eq!(v["all_agree"], true);
}

#[test]
fn chain_longer_than_order() {
    let out = freemix(&["moments", "--chain", "zm:1,gaussian,gaussian", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("s <= m"));
    let (code, v) = json(&[
        "moments",
        "--chain",
        "zm:1,gaussian,gaussian",
        "--k",
        "3",
        "--inductive-only",
    ]);
    assert_eq!(code, 0);
    assert!(v["rows"][0]["closed"].is_null());
}

#[test]
fn op_r_with_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    std::fs::write(&a, r#"{"label":"a","even_moments":["1","5"]}"#).unwrap();
    std::fs::write(&b, r#"{"label":"b","even_moments":[1,3]}"#).unwrap();
    let (code, v) = json(&["moments", "--op-r", a.to_str().unwrap(), b.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code, 0);
    // fourth moment: Omega_4 + Omega'_4 - 1
    assert_eq!(column(&v, "value"), ["1", "7"]);

    let missing = dir.path().join("missing.json");
    let spec = format!("file:{}", missing.display());
    let out = freemix(&["moments", "--op-r", a.to_str().unwrap(), &spec, "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_and_short_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = freemix(&["moments", "--op-r", bad.to_str().unwrap(), "rademacher", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let short = dir.path().join("short.json");
    std::fs::write(&short, r#"{"even_moments":["1"]}"#).unwrap();
    let out = freemix(&["moments", "--op-r", short.to_str().unwrap(), "rademacher", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("required"));
}

#[test]
fn count_examples() {
    let out = freemix(&["count", "--alpha", "2,1,0,0", "--brute"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "NP(2,1,0,0): 6 = 6");
    let (code, v) = json(&["count", "--alpha", "4,0,0,0"]);
    assert_eq!((code, v["closed"].as_str()), (0, Some("1")));
    let (code, v) = json(&["count", "--alphas", "2,0;2,0", "--m", "2", "--brute"]);
    assert_eq!(code, 0);
    assert_eq!(v["closed"], v["brute"]);
    assert_eq!(v["agree"], true);
    let (_, v) = json(&["count", "--alphas", "3,0,0;1,1,0", "--m", "3", "--c", "2", "--brute"]);
    assert_eq!((v["closed"].as_str(), v["brute"].as_str()), (Some("2"), Some("2")));
    let (_, v) = json(&["count", "--alpha", "2,1,0,0", "--regions", "2,2", "--brute"]);
    assert_eq!(v["agree"], true);
    let out = freemix(&["count", "--alpha", "2,1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = freemix(&["verify", "--suite", "identities", "--kmax", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("6 of 6 checks passed"));

    let out = freemix(&["verify", "--suite", "freeprob", "--kmax", "3", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL"));
    assert!(text.contains("closed form"));

    let out = freemix(&["verify", "--suite", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_reports_are_reproducible() {
    let args = [
        "--no-timestamp",
        "--format",
        "json",
        "simulate",
        "--scenario",
        "drd-chain",
        "--head",
        "zm:1",
        "--tail",
        "gaussian:1/2",
        "--n",
        "40",
        "--trials",
        "6",
        "--k",
        "2",
        "--seed",
        "5",
        "--rel-tol",
        "1",
    ];
    let first = freemix(&args);
    let mut one_thread = vec!["--threads", "1"];
    one_thread.extend_from_slice(&args);
    let second = freemix(&one_thread);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert!(v.get("timestamp_unix").is_none());
    assert_eq!(v["per_trial"].as_array().unwrap().len(), 6);
    assert_eq!(v["config"]["scenario"], "drd-chain");
    assert_eq!(v["config"]["tail"][0], "gaussian:1/2");
    for key in ["k", "estimate", "se", "exact", "rel_err", "z", "pass"] {
        assert!(v["rows"][0].get(key).is_some(), "{key}");
    }

    let (_, stamped) = json(&["simulate", "--scenario", "matrix-product", "--n", "8", "--trials", "2", "--k", "1"]);
    assert!(stamped["timestamp_unix"].is_u64());
}

#[test]
fn simulate_csv_and_guards() {
    let out = freemix(&[
        "--format", "csv", "simulate", "--scenario", "graph-z2", "--n", "6", "--trials", "3", "--k", "2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("k,estimate,se,exact,rel_err,z,verdict\n"));
    assert_eq!(text.lines().count(), 3);

    let out = freemix(&["simulate", "--scenario", "graph-z2", "--n", "33"]);
    assert_eq!(out.status.code(), Some(2));
    let out = freemix(&["simulate", "--scenario", "drd-chain", "--tail", "cauchy"]);
    assert_eq!(out.status.code(), Some(2));
    let out = freemix(&["simulate", "--scenario", "drd-chain", "--tail", "atoms:1@1/2;0@1/2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wrong_tolerance_fails_with_code_one() {
    // every entry is +-1/n, so the first trace is exactly (n-1)/n with no spread
    let out = freemix(&[
        "simulate", "--scenario", "graph-z2", "--n", "4", "--trials", "3", "--k", "1", "--rel-tol", "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("count.json");
    let out = freemix(&["--format", "json", "-o", path.to_str().unwrap(), "count", "--alpha", "0,1"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["closed"], "1");
}
