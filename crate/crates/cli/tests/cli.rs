use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn dualcox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualcox"))
        .args(args)
        .env_remove("DUALCOX_CAP")
        .output()
        .expect("binary runs")
}

fn schema() -> JSONSchema {
    let text = include_str!("../schema/dualcox.schema.json");
    let value: Value = serde_json::from_str(text).expect("schema is JSON");
    JSONSchema::compile(&value).expect("schema compiles")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = dualcox(&full);
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    let value = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| panic!("{args:?}: {e}: {stdout}"));
    (value, out.status.code().expect("exit code"))
}

const INVOCATIONS: &[&[&str]] = &[
    &["info", "A2"],
    &["info", "H3", "--roots"],
    &["info", "I2(5)", "--roots"],
    &["reflen", "A2", "-w", ""],
    &["reflen", "D4", "-w", "s1 (s2 s1 s2) (s2 s0 s2) s3"],
    &["closure", "B3", "-w", "s0 s1 s2"],
    &["closure", "A3", "-w", ""],
    &["reds", "G2", "-w", "s0 s1 s0 s1"],
    &["orbits", "G2", "-w", "s0 s1 s0 s1"],
    &["orbits", "G2", "-w", "s0 s1 s0 s1", "--with-subgroups"],
    &["cycledec", "A3", "-w", "s0 s2"],
    &["cycledec", "G2", "-w", "s0 s1 s0 s1", "--all-orbits"],
    &["indec", "A3", "-w", "s0 s2"],
    &["indec", "A3", "-w", "s0 s1"],
    &["perm", "B3", "-w", "s0 s1 s2"],
    &["perm", "A3", "--cycles", "(1,2)(3,4)"],
    &["verify", "--list"],
    &["verify", "g2-two-orbits"],
    &[
        "verify",
        "decomposition",
        "--group",
        "A3",
        "-w",
        "s0 s2",
        "--factor",
        "s0",
        "--factor",
        "s2",
    ],
    &["info", "X9"],
    &["reds", "A4", "-w", "s0 s1 s2 s3", "--cap", "3"],
    &["cycledec", "G2", "-w", "s0 s1 s0 s1"],
];

#[test]
fn every_json_document_matches_the_schema() {
    let schema = schema();
    for args in INVOCATIONS {
        let (value, _) = json(args);
        if let Err(errors) = schema.validate(&value) {
            let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
            panic!("{args:?} violates the schema: {msgs:?}\n{value}");
        };
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in INVOCATIONS.iter().filter(|a| a[0] != "verify" || a[1] == "--list") {
        for json_flag in [true, false] {
            let mut full: Vec<&str> = if json_flag { vec!["--json"] } else { vec![] };
            full.extend_from_slice(args);
            let (a, b) = (dualcox(&full), dualcox(&full));
            assert_eq!(a.stdout, b.stdout, "{full:?}");
            assert_eq!(a.status.code(), b.status.code(), "{full:?}");
        }
    }
}

#[test]
fn info_a2_exact() {
    let out = dualcox(&["--json", "info", "A2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"type":"A2","rank":2,"n_pos_roots":3,"order":6}"#
    );
}

#[test]
fn identity_has_reflection_length_zero() {
    let (v, code) = json(&["reflen", "A2", "-w", ""]);
    assert_eq!(code, 0);
    assert_eq!(v["reflen"], 0);
    assert_eq!(v["element"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    assert_eq!(json(&["info", "X9"]).1, 2);
    assert_eq!(json(&["reflen", "A2", "-w", "s7"]).1, 2);
    let (v, code) = json(&["reds", "A4", "-w", "s0 s1 s2 s3", "--cap", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["kind"], "domain");
    assert!(v["error"].as_str().unwrap().contains("--cap"));
    assert_eq!(json(&["cycledec", "G2", "-w", "s0 s1 s0 s1"]).1, 1);
    assert_eq!(dualcox(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(dualcox(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn errors_go_to_stderr_too() {
    let out = dualcox(&["--json", "info", "X9"]);
    assert!(!out.stderr.is_empty());
    let plain = dualcox(&["info", "X9"]);
    assert!(plain.stdout.is_empty());
    assert!(!plain.stderr.is_empty());
}

#[test]
fn g2_stst_has_two_decompositions_with_equal_factors() {
    let (v, code) = json(&["cycledec", "G2", "-w", "s0 s1 s0 s1", "--all-orbits"]);
    assert_eq!(code, 0);
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 2);
    assert_eq!(v["same_factors_distinct_closures"], true);
    let factors: Vec<&Value> = orbits.iter().map(|o| &o["decomposition"]["factors"]).collect();
    assert_eq!(factors[0].as_array().unwrap().len(), 1);
    assert_eq!(factors[0][0]["s_word"], factors[1][0]["s_word"]);
    assert_ne!(
        factors[0][0]["closure"]["reflections"],
        factors[1][0]["closure"]["reflections"]
    );
    assert!(orbits.iter().all(|o| o["decomposition"]["ambient"]["type"] == "A2"));
}

#[test]
fn d4_element_signed_cycles() {
    let (v, code) = json(&["perm", "D4", "-w", "s1 (s2 s1 s2) (s2 s0 s2) s3"]);
    assert_eq!(code, 0);
    assert_eq!(v["cycles"], "(1,-2,-1,2)(3,4,-3,-4)");
    let (back, code) = json(&["perm", "D4", "--cycles", "(1,-2,-1,2)(3,4,-3,-4)"]);
    assert_eq!(code, 0);
    assert_eq!(back["element"], v["element"]);
}

#[test]
fn odd_sign_change_is_rejected_in_d() {
    assert_eq!(json(&["perm", "D4", "--cycles", "(1,-1)"]).1, 2);
    assert_eq!(json(&["perm", "B4", "--cycles", "(1,-1)"]).1, 0);
}

#[test]
fn dot_file_lists_every_reduced_expression() {
    let path = std::env::temp_dir().join(format!("dualcox-orbits-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    let out = dualcox(&["orbits", "G2", "-w", "s0 s1 s0 s1", "--dot", p]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(dot.trim_start().starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 6, "{dot}");
    assert_eq!(dot.matches("[label=\"(t").count(), 6, "{dot}");
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_dualcox"))
        .args(["reds", "A4", "-w", "s0 s1 s2 s3"])
        .env("DUALCOX_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suite_reports_pass() {
    let (v, code) = json(&["verify", "g2-two-orbits"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
