use std::path::Path;

use assert_cmd::Command;
use serde_json::Value;

fn heckelab() -> Command {
    let mut c = Command::cargo_bin("heckelab").unwrap();
    c.env_remove("HECKELAB_LOG");
    c
}

fn run_ok(args: &[&str]) -> String {
    let out = heckelab().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    heckelab().args(args).output().unwrap().status.code().unwrap()
}

fn assert_valid(schema: &str, doc: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(schema);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect()
}

#[test]
fn dnumber_table_symbolic() {
    let rows = csv_rows(&run_ok(&["tables", "dnumbers", "--r-max", "1"]));
    assert_eq!(rows, vec![vec!["0", "1", "—"], vec!["1", "−2q²−q+1", "−q"]]);
}

#[test]
fn dnumber_table_at_integer_q() {
    // d_1(2) = −8 − 2 + 1, d•_1(2) = −2.
    let rows = csv_rows(&run_ok(&["tables", "dnumbers", "--r-max", "1", "--q", "2"]));
    assert_eq!(rows[1], vec!["1", "-9", "-2"]);
}

#[test]
fn satake_matrix_rank_two() {
    let doc: Value = serde_json::from_str(&run_ok(&["tables", "satake-matrix", "--N", "2", "--format", "json"])).unwrap();
    assert_valid("table.schema.json", &doc);
    // Unitriangular with off-diagonal entry 1 − q.
    assert_eq!(doc["rows"][0][1], serde_json::json!([[0, 1]]));
    assert_eq!(doc["rows"][1][1], serde_json::json!([[0, 1], [1, -1]]));
    assert_eq!(doc["rows"][1][2], serde_json::json!([[0, 1]]));
}

#[test]
fn operator_table_rank_three() {
    let rows = csv_rows(&run_ok(&["tables", "operators", "--N", "3"]));
    let icirc = rows.iter().find(|r| r[0] == "Icirc").unwrap();
    assert_eq!(icirc[2], "T1 + (q³+1)·T0");
    let doc: Value = serde_json::from_str(&run_ok(&["tables", "operators", "--N", "4", "--q", "3", "--format", "json"])).unwrap();
    assert_valid("table.schema.json", &doc);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(exit_code(&["verify", "--suite", "bogus"]), 2);
    assert_eq!(exit_code(&["verify", "--suite", "qidentities", "--k-max", "10"]), 0);
    assert_eq!(exit_code(&["verify", "--suite", "evalprops", "--N", "4", "--prime", "10"]), 1);
}

#[test]
fn verify_all_passes_and_validates() {
    let text = run_ok(&["verify", "--suite", "all", "--r-max", "4", "--q-max", "3", "--seed", "42"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_valid("report.schema.json", &doc);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn eval_even_icirc() {
    let p = 10007i64;
    let doc: Value =
        serde_json::from_str(&run_ok(&["eval", "--N", "2", "--op", "Icirc", "--alpha", "3", "--format", "json"])).unwrap();
    assert_valid("eval.schema.json", &doc);
    // q(α + α⁻¹ + 2) with q = 3 and 3⁻¹ = 3336 mod p.
    let expected = 3 * (3 + 3336 + 2) % p;
    assert_eq!(doc["phi"], expected);
    assert_eq!(doc["match"], true);
}

#[test]
fn eval_odd_tcirc() {
    let p = 10007i64;
    let doc: Value = serde_json::from_str(&run_ok(&[
        "eval", "--N", "3", "--op", "TcircOdd", "--alpha", "5", "--q", "2", "--format", "json",
    ]))
    .unwrap();
    // q²(α + α⁻¹ − 2) with 5⁻¹ = 4003.
    assert_eq!(doc["phi"], 4 * (5 + 4003 - 2) % p);
    assert_eq!(doc["match"], true);
}

#[test]
fn eval_rejects_zero_alpha() {
    assert_eq!(exit_code(&["eval", "--N", "2", "--op", "Icirc", "--alpha", "0"]), 2);
    assert_eq!(exit_code(&["eval", "--N", "2", "--op", "Tstar", "--alpha", "3"]), 2);
}

#[test]
fn counts_match_closed_forms() {
    let iso = csv_rows(&run_ok(&["count", "isotropic", "--q", "2", "--N", "2"]));
    assert_eq!(&iso[0][3..], ["3", "3", "true"]);
    let meet = csv_rows(&run_ok(&["count", "meeting", "--q", "2", "--N", "3", "--s", "1"]));
    assert_eq!(&meet[0][3..], ["8", "8", "true"]);
    let dl = csv_rows(&run_ok(&["count", "dl", "--q", "2", "--N", "2", "--dim", "1"]));
    assert_eq!(&dl[0][3..], ["3", "", ""]);
    let doc: Value =
        serde_json::from_str(&run_ok(&["count", "window", "--q", "2", "--N", "2", "--format", "json"])).unwrap();
    assert_valid("count.schema.json", &doc);
    assert_eq!(doc["count"], 33);
}

#[test]
fn count_over_budget_is_a_resource_error() {
    let out = heckelab().args(["count", "window", "--q", "3", "--N", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["verify", "--suite", "evalprops", "--N", "6", "--seed", "7"][..],
        &["tables", "operators", "--N", "5", "--format", "json"],
        &["eval", "--N", "5", "--op", "Icirc", "--alpha", "2,9"],
    ] {
        assert_eq!(run_ok(args), run_ok(args), "{args:?}");
    }
}

#[test]
fn config_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.toml");
    std::fs::write(&cfg, "format = \"json\"\n").unwrap();
    let out = dir.path().join("t.json");
    run_ok(&["--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap(), "tables", "dnumbers", "--r-max", "2"]);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_valid("table.schema.json", &doc);
    // A flag beats the file.
    let text = run_ok(&["--config", cfg.to_str().unwrap(), "--format", "csv", "tables", "dnumbers", "--r-max", "0"]);
    assert!(text.starts_with("r,d,d_bullet"));
    assert_eq!(exit_code(&["--out", "/nonexistent/dir/x", "tables", "dnumbers"]), 1);
}
