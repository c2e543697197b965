use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(doc: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fuzzycat"))
        .arg("--doc")
        .arg(fixture(doc))
        .args(args)
        .env_remove("FUZZYCAT_BUDGET")
        .output()
        .unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn m_half_is_admissible_at_one_half() {
    let out = run("w3.json", &["check", "fp", "--cand", "m_half"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["verdict"], "ok");
    assert_eq!(r["result"]["witness"]["value"], "1/2");
    assert_eq!(r["result"]["witness"]["attained_at"], serde_json::json!(["A1", "x2"]));
}

#[test]
fn broken_m_half_fails_at_a1_x2() {
    let out = run("w3.json", &["check", "fp", "--cand", "m_half_broken"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["verdict"], "fail");
    assert_eq!(r["result"]["witness"]["value"], "0");
    assert_eq!(r["result"]["witness"]["attained_at"], serde_json::json!(["A1", "x2"]));
}

#[test]
fn over_budget_reports_the_cardinality() {
    let out = run("over_budget.json", &["closure", "from-partition", "--partition", "P9"]);
    assert_eq!(out.status.code(), Some(3));
    let r = report(&out);
    assert_eq!(r["verdict"], "budget-exceeded");
    assert!(r["error"].as_str().unwrap().contains("19683"));
}

#[test]
fn budget_flag_admits_larger_spaces() {
    let out = run(
        "over_budget.json",
        &["--budget", "20000", "closure", "from-partition", "--partition", "P9"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["budget"], 20000);
}

#[test]
fn invalid_partition_is_an_input_error() {
    let out = run("invalid.json", &["validate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["verdict"], "input-error");
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_names_are_input_errors() {
    let out = run("w3.json", &["check", "fp", "--cand", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run("missing.json", &["validate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let plain = report(&run("w3.json", &["validate"]));
    assert!(plain.get("timing_us").is_none());
    let timed = report(&run("w3.json", &["--timing", "validate"]));
    assert!(timed["timing_us"].is_u64());
}

#[test]
fn ft_components_on_w3() {
    let r = report(&run("w3.json", &["ft", "--partition", "W3", "--set", "f"]));
    assert_eq!(r["verdict"], "ok");
    let text = r["result"].to_string();
    assert!(text.contains("1/2"), "{text}");
}

#[test]
fn lukasiewicz_operator_laws_fail() {
    let out = run("lukasiewicz.json", &["laws", "closure", "--partition", "P"]);
    assert_eq!(out.status.code(), Some(1));
}
