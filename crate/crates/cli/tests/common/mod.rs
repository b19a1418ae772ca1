#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

/// Absolute fixture path; leaked so argument lists can borrow it freely.
pub fn fixture(name: &str) -> &'static str {
    let path = workspace_root().join("fixtures").join(name).to_string_lossy().into_owned();
    Box::leak(path.into_boxed_str())
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub json: Value,
}

pub fn sympow(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_sympow")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: not JSON ({e}): {stdout}"));
    Run { code: out.status.code().expect("exit code"), stdout, json }
}

/// Panics with every violation if `doc` does not match `schemas/<name>.schema.json`.
pub fn assert_schema(name: &str, doc: &Value) {
    let path = workspace_root().join("schemas").join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap_or_else(|e| panic!("{name}: bad schema: {e}"));
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{name}: {errors:#?}\n{doc:#}");
}

/// Runs a subcommand, checks the exit code and validates the output schema.
pub fn checked(schema: &str, args: &[&str], code: i32) -> Value {
    let run = sympow(args);
    assert_eq!(run.code, code, "{args:?}: {}", run.stdout);
    assert_schema(if code == 0 { schema } else { "error" }, &run.json);
    run.json
}

pub fn exponents(v: &Value) -> Vec<Vec<u32>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|row| row.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as u32).collect())
        .collect()
}
