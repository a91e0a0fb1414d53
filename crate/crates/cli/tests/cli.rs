//! End-to-end tests of the `walg` binary: exit codes, documented outputs,
//! determinism, and schema validation of every JSON report shape.

use std::process::{Command, Output};

fn walg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("valid JSON on stdout")
}

#[test]
fn orbit_matches_documented_example() {
    let out = walg(&["orbit", "--partition", "2,2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim(),
        r#"{"orbit_dim":8,"d_e":4,"r":8,"conjugate":[2,2]}"#
    );
}

#[test]
fn unsorted_partition_exits_2() {
    for cmd in ["orbit", "sheets", "abelianize", "zpoly", "center-test"] {
        let out = walg(&[cmd, "--partition", "2,3"]);
        assert_eq!(out.status.code(), Some(2), "{cmd}");
        let v = json_of(&out);
        assert!(v.get("error").is_some(), "{cmd}");
    }
}

#[test]
fn zero_and_garbage_partitions_exit_2() {
    assert_eq!(walg(&["orbit", "--partition", "2,0"]).status.code(), Some(2));
    assert_eq!(walg(&["orbit", "--partition", "a,b"]).status.code(), Some(2));
}

#[test]
fn center_test_worked_example() {
    let out = walg(&["center-test", "--partition", "2,2", "--convention", "worked"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim(),
        r#"{"proper":true,"witness":"d[1][1]"}"#
    );
}

#[test]
fn worked_convention_is_two_two_only() {
    let out = walg(&["zpoly", "--partition", "3,1", "--convention", "worked"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zpoly_worked_quartic() {
    let out = walg(&["zpoly", "--partition", "2,2", "--convention", "worked"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["u_degree"], 4);
    assert_eq!(v["z"].as_array().unwrap().len(), 5);
    // coefficient of u^3 is the constant -2
    assert_eq!(
        v["z"][1]["terms"],
        serde_json::json!([{"e": [0, 0], "c": ["-2", "1"]}])
    );
    assert_eq!(v["validity"].as_array().unwrap().len(), 0);
}

#[test]
fn zpoly_order_too_small_exits_2() {
    let out = walg(&["zpoly", "--partition", "2,2", "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn induce_and_mismatch() {
    let out = walg(&["induce", "--levi", "2,2", "--orbits", "1,1;1,1"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["induced"], serde_json::json!([2, 2]));

    let out = walg(&["induce", "--levi", "2,2", "--orbits", "3;1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = walg(&["induce", "--levi", "2,2", "--orbits", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn modular_bad_prime_exits_2() {
    let out = walg(&["modular", "--algebra", "sl3", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = walg(&["modular", "--algebra", "sl2", "--prime", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_subset_is_deterministic() {
    let a = walg(&["suite", "--only", "krull"]);
    let b = walg(&["suite", "--only", "krull"]);
    assert!(a.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b), "byte-identical reruns");

    // verdicts are seed-stable
    let s0 = walg(&["suite", "--only", "induction", "--max-n", "6"]);
    let s1 = walg(&["suite", "--seed", "1", "--only", "induction", "--max-n", "6"]);
    assert!(s0.status.success());
    assert!(s1.status.success());
    let (v0, v1) = (json_of(&s0), json_of(&s1));
    assert_eq!(v0["criteria"][0]["pass"], v1["criteria"][0]["pass"]);
}

#[test]
fn thread_cap_does_not_change_output() {
    let a = walg(&["suite", "--only", "krull"]);
    let b = Command::new(env!("CARGO_BIN_EXE_walg"))
        .args(["suite", "--only", "krull"])
        .env("WALG_THREADS", "1")
        .output()
        .unwrap();
    assert!(b.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn text_mode_renders_scalars() {
    let out = walg(&["sheets", "--partition", "3,1", "--text"]);
    assert!(out.status.success());
    let s = stdout_of(&out);
    assert!(s.contains("krull_dim: 3"), "{s}");
    assert!(serde_json::from_str::<serde_json::Value>(&s).is_err(), "not JSON");
}

#[test]
fn reports_validate_against_schema() {
    let schema_src = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../schema/report.json"
    ))
    .expect("schema file shipped with the repo");
    let schema: serde_json::Value = serde_json::from_str(&schema_src).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");

    let runs: Vec<Vec<&str>> = vec![
        vec!["orbit", "--partition", "3,2,2"],
        vec!["induce", "--levi", "3,2", "--orbits", "2,1;1,1"],
        vec!["sheets", "--partition", "2,2,1"],
        vec!["abelianize", "--partition", "3,1"],
        vec!["zpoly", "--partition", "2,2", "--convention", "worked"],
        vec!["zpoly", "--partition", "2,1"],
        vec!["center-test", "--partition", "2,2", "--convention", "worked"],
        vec!["modular", "--algebra", "sl2", "--prime", "5"],
        vec!["modular", "--algebra", "sl2", "--check", "theoremD"],
        vec!["suite", "--only", "krull"],
        // error shape
        vec!["orbit", "--partition", "1,2"],
    ];
    for args in runs {
        let out = walg(&args);
        let v = json_of(&out);
        if let Err(e) = validator.validate(&v) {
            panic!("schema violation for {args:?}: {e}");
        }
    }
}
