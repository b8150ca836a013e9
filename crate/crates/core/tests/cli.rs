use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).env(key, value).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn ideal_pretty_shows_five_generators_with_brackets() {
    let out = text(&["ideal", "31425", "--pretty"]);
    assert!(out.contains("5 Fulton generators, 3 elusive"));
    assert!(out.contains("| x[2,1] x[2,2] |\n| x[3,1] x[3,2] |"));
}

#[test]
fn ideal_of_identity_is_empty() {
    assert!(text(&["ideal", "1"]).contains("zero ideal"));
    let v = json(&["ideal", "1", "--json"]);
    assert_eq!(v["fulton_count"], 0);
}

#[test]
fn ideal_json_lists_seven_elusive_minors() {
    let v = json(&["ideal", "31542", "--json"]);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["elusive"].as_array().unwrap().len(), 7);
}

#[test]
fn groebner_members() {
    let v = json(&["groebner", "32154", "--reduced", "--json"]);
    assert!(v["members"].as_array().unwrap().iter().any(|m| m["degree"] == 4 && m["num_terms"] == 8));
    let v = json(&["groebner", "1234", "--json"]);
    assert_eq!(v["size"], 0);
    let v = json(&["groebner", "31542", "--json"]);
    assert_eq!(v["kind"], "minimal");
    let cubic_terms: Vec<u64> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|m| m["degree"] == 3)
        .map(|m| m["num_terms"].as_u64().unwrap())
        .collect();
    assert_eq!(cubic_terms, vec![6, 6]);
}

#[test]
fn transpose_order_is_accepted() {
    let v = json(&["groebner", "31542", "--reduced", "--order", "antidiag-transpose", "--json"]);
    assert_eq!(v["order"], "antidiag-transpose");
    assert_eq!(v["size"], 7);
}

#[test]
fn classify_values() {
    let v = json(&["classify", "2143", "--json"]);
    assert_eq!((v["vexillary"].as_bool(), v["binomial"].as_bool()), (Some(false), Some(false)));
    let v = json(&["classify", "31425", "--json"]);
    assert_eq!((v["vexillary"].as_bool(), v["binomial"].as_bool()), (Some(true), Some(true)));
    let v = json(&["classify", "31254", "--json"]);
    assert_eq!(v["binomial"], false);
    assert_eq!(v["max_essential_rank"], 3);
    let v = json(&["classify", "123", "--json"]);
    assert_eq!(v["max_essential_rank"], -1);
}

#[test]
fn regularity_routes() {
    let v = json(&["regularity", "--partition", "6,4,1,1,1", "--json"]);
    assert_eq!(v["rrw"], 3);
    assert_eq!(v["ads"], serde_json::json!({"value": 3, "certification": "lower-bound-certified"}));
    let v = json(&["regularity", "31425", "--json"]);
    assert_eq!((v["decomposition"].as_u64(), v["oracle"].as_u64()), (Some(1), Some(1)));
    let v = json(&["regularity", "3412", "--json"]);
    assert_eq!(v["decomposition"], 0);
    assert_eq!(v["oracle"], 0);
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "--theorem", "binomial", "--n", "5", "--json"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["summary"]["binomial_counts"]["5"], 90);
    assert!(v.get("wall_time_ms").is_none());
    let v = json(&["verify", "--theorem", "main", "--n", "3", "--json"]);
    assert_eq!(v["checked"], 9);
    let v = json(&["verify", "--theorem", "schroder", "--n", "7", "--json"]);
    assert_eq!(v["summary"]["avoider_counts"]["7"], 1806);
    let v = json(&["verify", "--theorem", "lemmas", "--n", "4", "--timing", "--json"]);
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn enumerate_counts_and_lists() {
    let v = json(&["enumerate", "--n", "4", "--json"]);
    assert_eq!(v["count"], 22);
    let v = json(&["enumerate", "--n", "4", "--pattern", "2143", "--list", "--json"]);
    assert_eq!(v["count"], 23);
    assert_eq!(v["avoiders"].as_array().unwrap().len(), 23);
    assert_eq!(v["avoiders"][0], "1,2,3,4");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["ideal", "31542", "--json"][..],
        &["groebner", "32154", "--reduced", "--json"],
        &["verify", "--theorem", "binomial", "--n", "5", "--parallel", "2", "--json"],
        &["verify", "--theorem", "properties", "--seed", "7", "--json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["ideal", "3155"]).status.code(), Some(2));
    assert_eq!(run(&["regularity", "2143"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--theorem", "main", "--n", "8"]).status.code(), Some(3));
    assert_eq!(run_env(&["verify", "--theorem", "main", "--n", "5"], "SCHUBERT_MAX_N", "4").status.code(), Some(3));
    assert_eq!(run_env(&["enumerate", "--n", "6"], "SCHUBERT_MAX_N", "5").status.code(), Some(3));
    assert_eq!(run(&["regularity", "--partition", "3,3,3,3", "--edge-cap", "4"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--theorem", "extremal", "--n", "4"]).status.code(), Some(0));
}
