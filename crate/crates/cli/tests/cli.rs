use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn starcat(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_starcat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn starcat");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> Value {
    let out = starcat(args, stdin);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    serde_json::from_str(&text).unwrap()
}

fn half() -> String {
    json!({
        "ring": "rational",
        "objects": { "A": { "weights": ["1"] } },
        "morphisms": { "f": { "dom": "A", "cod": "A", "matrix": [["1/2"]] } }
    })
    .to_string()
}

fn row_and_form() -> String {
    json!({
        "ring": "rational",
        "objects": {
            "A": { "weights": ["1", "1"] },
            "B": { "weights": ["1"] }
        },
        "morphisms": {
            "f": { "dom": "A", "cod": "B", "matrix": [["1", "1"]] },
            "h": { "dom": "A", "cod": "A", "matrix": [["1", "2"], ["2", "1"]] }
        }
    })
    .to_string()
}

#[test]
fn adjoint_of_unweighted_scalar() {
    let doc = ok(&["adjoint", "-n", "f"], &half());
    assert_eq!(doc["morphisms"]["adjoint_f"]["matrix"], json!([["1/2"]]));
    assert_eq!(doc["morphisms"]["f"]["matrix"], json!([["1/2"]]));
}

#[test]
fn codilator_of_one_half() {
    let doc = ok(&["codilator", "-n", "f"], &half());
    assert_eq!(doc["objects"]["codilator_f"]["weights"], json!(["1", "4/3"]));
    assert_eq!(doc["morphisms"]["codilator_f_s1"]["matrix"], json!([["1/2"], ["1"]]));
    assert_eq!(doc["morphisms"]["codilator_f_s2"]["matrix"], json!([["1"], ["0"]]));
}

#[test]
fn kernel_of_row() {
    let doc = ok(&["kernel", "-n", "f"], &row_and_form());
    let k = &doc["morphisms"]["kernel_f"];
    assert_eq!(k["matrix"], json!([["1"], ["-1"]]));
    let obj = k["dom"].as_str().unwrap();
    assert_eq!(doc["objects"][obj]["weights"], json!(["1/2"]));
}

#[test]
fn positivity_witness() {
    let doc = ok(&["positivity", "-n", "h"], &row_and_form());
    assert_eq!(doc["results"]["positivity_h"], json!({ "positive": false, "witness": ["-2", "1"], "value": "-3" }));
}

#[test]
fn woodbury_scalars() {
    let doc = json!({
        "ring": "rational",
        "objects": { "A": { "weights": ["1"] } },
        "morphisms": {
            "a": { "dom": "A", "cod": "A", "matrix": [["2"]] },
            "b": { "dom": "A", "cod": "A", "matrix": [["3"]] },
            "f": { "dom": "A", "cod": "A", "matrix": [["1"]] }
        }
    });
    let out = ok(&["schur", "-n", "a", "-n", "b", "-n", "f"], &doc.to_string());
    assert_eq!(out["morphisms"]["schur_a_b_f"]["matrix"], json!([["2/5"]]));
}

#[test]
fn file_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("doc.json");
    let output = dir.path().join("out.json");
    std::fs::write(&input, half()).unwrap();
    let out = starcat(&["adjoint", "--in", input.to_str().unwrap(), "--out", output.to_str().unwrap(), "-n", "f"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert!(doc["morphisms"].get("adjoint_f").is_some());
}

#[test]
fn output_round_trips() {
    let once = starcat(&["kernel", "-n", "f"], &row_and_form());
    assert_eq!(once.status.code(), Some(0));
    let text = String::from_utf8(once.stdout).unwrap();
    let again = starcat(&["classify", "-n", "f"], &text);
    let again: Value = serde_json::from_slice(&again.stdout).unwrap();
    let first: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(again["morphisms"], first["morphisms"]);
    assert_eq!(again["objects"], first["objects"]);
}

#[test]
fn output_is_canonical() {
    let scrambled = r#"{"morphisms":{"f":{"matrix":[["2/4"]],"cod":"A","dom":"A"}},"objects":{"A":{"weights":["1"]}},"ring":"rational"}"#;
    let a = starcat(&["adjoint", "-n", "f"], scrambled);
    let b = starcat(&["adjoint", "-n", "f"], &half());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(starcat(&["adjoint", "-n", "f"], "{not json").status.code(), Some(2));
    assert_eq!(starcat(&["compose", "-n", "f"], &half()).status.code(), Some(2));
    assert_eq!(starcat(&["adjoint", "-n", "missing"], &half()).status.code(), Some(2));
    assert_eq!(starcat(&["frobnicate"], &half()).status.code(), Some(2));

    let bad_literal = half().replace("1/2", "1/0");
    assert_eq!(starcat(&["adjoint", "-n", "f"], &bad_literal).status.code(), Some(2));

    let singular = starcat(&["invert", "-n", "f"], &row_and_form());
    assert_eq!(singular.status.code(), Some(1));
    assert!(!singular.stderr.is_empty());

    let not_mono = starcat(&["complement", "-n", "f"], &row_and_form());
    assert_eq!(not_mono.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&not_mono.stderr).contains("mono"));

    assert_eq!(starcat(&["adjoint", "--ring", "gaussian", "-n", "f"], &half()).status.code(), Some(1));
}

#[test]
fn version_and_help() {
    let v = starcat(&["--version"], "");
    assert_eq!(v.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&v.stdout).starts_with("starcat "));
    let h = starcat(&["--help"], "");
    assert_eq!(h.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&h.stdout).contains("codilator"));
}

#[test]
fn small_law_run() {
    let report = ok(&["laws", "--ring", "rational", "--seed", "3", "--cases", "4", "--max-dim", "3"], "");
    assert_eq!(report["total_failed"], json!(0));
    assert_eq!(report["cases"], json!(4));
    assert!(report["laws"].as_array().unwrap().len() > 40);
}
