use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn quadmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadmon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let out = quadmon(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let text = std::fs::read_to_string(&path).expect("schema file");
    jsonschema::validator_for(&serde_json::from_str(&text).expect("schema JSON"))
        .expect("valid schema")
}

fn assert_valid(schema_name: &str, doc: &Value) {
    let v = schema(schema_name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
}

#[test]
fn classify_z4_has_six_classes() {
    let doc = json(&["classify", "--ring", "Z/4", "--format", "json"]);
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 6);
    let total: u64 = classes
        .iter()
        .map(|c| c["orbit_size"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 16);
}

#[test]
fn product_kummer_example() {
    let doc = json(&["product", "--ring", "Z", "--s", "0,-2", "--t", "0,-3"]);
    assert_eq!(doc["product"]["t"], "0");
    assert_eq!(doc["product"]["n"], "-24");
    let out = quadmon(&[
        "product", "--ring", "Z", "--s", "0,-2", "--t", "0,-3", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "t,n,disc\n0,-24,96\n");
}

#[test]
fn product_over_polynomial_ring() {
    let doc = json(&[
        "product",
        "--ring",
        "Z/2[x]/(x^2+x+1)",
        "--s",
        "[1,1],x",
        "--t",
        "x,1",
    ]);
    assert_eq!(doc["product"]["t"], "1");
    assert_eq!(doc["product"]["n"], "x+1");
}

#[test]
fn verify_prints_seven_pass_lines() {
    let out = quadmon(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for line in lines {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields.len(), 4, "{line}");
        assert_eq!(fields[1], "PASS");
    }
    let single = quadmon(&["verify", "--identity", "wp-closure"]);
    assert!(stdout(&single).starts_with("wp-closure PASS "));
}

#[test]
fn exit_codes() {
    assert_eq!(quadmon(&["classify", "--ring", "Q"]).status.code(), Some(2));
    let bad = quadmon(&["classify", "--ring", "Z/4[x]/(2x^2+1)"]);
    assert_eq!(bad.status.code(), Some(2));
    let infinite = quadmon(&["classify", "--ring", "Z"]);
    assert_eq!(infinite.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&infinite.stderr).contains("finite"));
    assert_eq!(quadmon(&["classify"]).status.code(), Some(2));
    assert_eq!(quadmon(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        quadmon(&["verify", "--identity", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        quadmon(&["fibers", "--ring", "Z/4", "--disc", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quadmon(&["product", "--ring", "Z", "--s", "1,2,3", "--t", "0,0"])
            .status
            .code(),
        Some(2)
    );
    let grammar = quadmon(&["disc", "--ring", "Z/"]);
    assert!(String::from_utf8_lossy(&grammar.stderr).contains("Z/<n>"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["classify", "--ring", "Z/12"][..],
        &["fibers", "--ring", "Z/4[x]/(x^2)"],
        &["disc", "--ring", "Z/8", "--format", "csv"],
        &["verify", "--format", "json"],
    ] {
        let a = quadmon(args);
        let b = quadmon(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("quadmon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z2.json");
    let out = quadmon(&[
        "classify",
        "--ring",
        "Z/2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["classes"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_validate_against_schemas() {
    for ring in ["Z/2", "Z/4", "Z/6", "Z/2[x]/(x^2+x+1)", "Z/4[x]/(x^2)"] {
        assert_valid(
            "classification.schema.json",
            &json(&["classify", "--ring", ring]),
        );
        assert_valid("disc.schema.json", &json(&["disc", "--ring", ring]));
        assert_valid("fiber.schema.json", &json(&["fibers", "--ring", ring]));
        assert_valid("as-group.schema.json", &json(&["as-group", "--ring", ring]));
        assert_valid("sec.schema.json", &json(&["sec", "--ring", ring]));
    }
    assert_valid(
        "fiber.schema.json",
        &json(&["fibers", "--ring", "Z/4", "--disc", "1"]),
    );
    assert_valid("as-group.schema.json", &json(&["as-group", "--ring", "Z"]));
    assert_valid(
        "sec.schema.json",
        &json(&["sec", "--ring", "Z", "--element", "-6"]),
    );
    assert_valid(
        "product.schema.json",
        &json(&["product", "--ring", "Z/4", "--s", "1,1", "--t", "1,1"]),
    );
    assert_valid("verify.schema.json", &json(&["verify", "--format", "json"]));
}

#[test]
fn schemas_reject_malformed_reports() {
    let v = schema("classification.schema.json");
    let bad: Value = serde_json::json!({ "ring": "Z/2", "classes": [{ "t": "0" }] });
    assert!(!v.is_valid(&bad));
}

#[test]
fn fibers_csv_for_z4() {
    let out = quadmon(&["fibers", "--ring", "Z/4", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("d,fiber_size,orbits,kernel_size"));
    // d = 0: AS acts trivially, so the action is neither free nor transitive
    assert_eq!(lines.next().unwrap(), "0,4,4,2,false,false,true,8,8");
    assert_eq!(lines.next().unwrap(), "1,2,1,1,true,true,true,2,2");
}
