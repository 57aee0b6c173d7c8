//! End-to-end command-line tests: golden outputs, exit codes, byte-for-byte
//! determinism, and JSON schema conformance for every subcommand.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emstats"))
        .args(args)
        .env("EMSTATS_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(format!(
        "{}/schemas/{name}.schema.json",
        env!("CARGO_MANIFEST_DIR")
    ))
    .expect("schema file");
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, value: &Value) {
    let validator = schema(name);
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{name} schema violations: {errors:?}");
}

#[test]
fn stats_golden_and_schema() {
    let args = [
        "stats", "--r", "4", "--n", "6", "--element", "[1^3 4^0 2^1 3^0 6^2 5^1]",
    ];
    let text = stdout_of(&args);
    let value: Value = serde_json::from_str(&text).unwrap();
    assert_valid("stats", &value);
    assert_eq!(value["ndes"], 11);
    assert_eq!(value["nmajor"], 40);
    assert_eq!(value["fdes"], 11);
    assert_eq!(value["fmajor"], 31);
    assert_eq!(value["col"], 7);
    // Byte-for-byte determinism.
    assert_eq!(text, stdout_of(&args));
}

#[test]
fn stats_covers_signed_and_type_d_fields() {
    let value: Value = serde_json::from_str(&stdout_of(&[
        "stats", "--r", "2", "--n", "5", "--element", "[2^1 4^1 5^0 1^1 3^1]",
    ]))
    .unwrap();
    assert_valid("stats", &value);
    assert_eq!(value["des"], 2);
    assert_eq!(value["fmajor"], 10);
    assert_eq!(value["dndes"], 4);
    assert_eq!(value["dnmajor"], 9);
}

#[test]
fn verify_match_exits_zero_and_validates() {
    let out = run(&["verify", "--id", "carlitz", "--n", "3", "--K", "5"]);
    assert!(out.status.success());
    for line in String::from_utf8(out.stdout).unwrap().lines() {
        let value: Value = serde_json::from_str(line).unwrap();
        assert_valid("verify", &value);
        assert_eq!(value["match"], true);
    }
}

#[test]
fn verify_grid_for_one_identity() {
    let out = run(&["verify", "--id", "dEulerian", "--grid"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 4); // n = 2..5
    for line in stdout.lines() {
        let value: Value = serde_json::from_str(line).unwrap();
        assert_valid("verify", &value);
        assert_eq!(value["match"], true);
    }
}

#[test]
fn distribution_golden_and_schema() {
    let value: Value = serde_json::from_str(&stdout_of(&[
        "distribution", "--r", "2", "--n", "2", "--pair", "dnatdes-only",
    ]))
    .unwrap();
    assert_valid("distribution", &value);
    assert_eq!(value["polynomial"], "t^2 + 2*t + 1");

    let csv = stdout_of(&[
        "distribution", "--r", "1", "--n", "2", "--pair", "des-fmajor", "--format", "csv",
    ]);
    assert_eq!(csv, "t\\q,0,1\n0,1,0\n1,0,1\n");
}

#[test]
fn bijection_golden_and_schema() {
    let value: Value = serde_json::from_str(&stdout_of(&[
        "bijection", "--r", "4", "--n", "6", "--element", "[1^3 4^0 2^1 3^0 6^2 5^1]",
    ]))
    .unwrap();
    assert_valid("bijection", &value);
    assert_eq!(value["image"], "[1^3 6^2 3^2 5^2 2^1 4^2]");
    assert_eq!(value["inputStats"]["ndes"], 11);
    assert_eq!(value["inputStats"]["nmajor"], 40);
    assert_eq!(value["imageStats"]["fdes"], 11);
    assert_eq!(value["imageStats"]["fmajor"], 40);
}

#[test]
fn cone_golden_and_schema() {
    let value: Value = serde_json::from_str(&stdout_of(&["cone", "--n", "2", "--perm", "2,1"]))
        .unwrap();
    assert_valid("cone", &value);
    assert_eq!(value["det"], "1");
    assert_eq!(value["fppPoints"], serde_json::json!([[1, 0, 1]]));

    // Both shifting techniques print the same point set.
    let whole = stdout_of(&[
        "cone", "--n", "3", "--perm", "3,1,2", "--r", "2", "--scaling", "wreath",
        "--method", "shift-whole",
    ]);
    let off = stdout_of(&[
        "cone", "--n", "3", "--perm", "3,1,2", "--r", "2", "--scaling", "wreath",
        "--method", "shift-off-boundary",
    ]);
    assert_eq!(whole, off);
}

#[test]
fn locate_golden_and_schema() {
    let text = stdout_of(&[
        "locate", "--n", "9", "--point",
        "2/10,1/10,2/10,3/10,1/10,1/10,3/10,3/10,2/10",
    ]);
    assert_eq!(text.trim(), "[4,7,8,1,3,9,2,5,6]");

    let value: Value = serde_json::from_str(&stdout_of(&[
        "locate", "--n", "2", "--point", "1/2,1/3", "--format", "json",
    ]))
    .unwrap();
    assert_valid("locate", &value);
    assert_eq!(value["perm"], serde_json::json!([1, 2]));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["verify", "--id", "no-such-identity", "--n", "2", "--K", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run(&["stats", "--r", "2", "--n", "3", "--element", "[1 1 2]"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["locate", "--n", "2", "--point", "3/2,1/2"]);
    assert_eq!(out.status.code(), Some(2));
}
