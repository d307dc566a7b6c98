use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxcanon"))
}

fn docs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs")
}

fn write_job(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn entry(table: &Value, degree: &[i64]) -> u64 {
    table["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["degree"] == serde_json::json!(degree))
        .unwrap()["dimension"]
        .as_u64()
        .unwrap()
}

const COX: &str = "cox_p1xp1.json";

fn example(name: &str) -> String {
    docs().join("examples").join(name).to_string_lossy().into_owned()
}

#[test]
fn canonical_table_of_cox_ring() {
    let out = run(&["canonical", "--input", &example(COX), "--box", "0:4,0:4"]);
    let v = json(&out);
    assert_eq!(entry(&v["table"], &[2, 2]), 1);
    assert_eq!(entry(&v["table"], &[3, 2]), 2);
    assert_eq!(v["table"]["box"], "0:4,0:4");
    assert_eq!(v["hypotheses"]["ample_witness"], serde_json::json!([1, 1]));
    assert_eq!(v["hypotheses"]["noetherian_assumed"], true);
}

#[test]
fn weighted_plane_freeness() {
    let v = json(&run(&["freeness", "--input", &example("weighted_plane.json")]));
    assert_eq!(v["free"], true);
    assert_eq!(v["generator_degree"], serde_json::json!([1, 2]));
    assert_eq!(v["twist"], serde_json::json!([-1, -2]));
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let fan = write_job(
        &dir,
        "fan.json",
        r#"{"variety": {"toric": {"rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[0,1]]}}, "divisors": [[1,0,0]]}"#,
    );
    let out = run(&["sections", "--input", fan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("incomplete"));

    let syntax = write_job(&dir, "syntax.json", "{\"variety\": ");
    assert_eq!(run(&["sections", "--input", syntax.to_str().unwrap()]).status.code(), Some(2));

    let unknown = write_job(
        &dir,
        "unknown.json",
        r#"{"variety": {"builtin": {"name": "del_pezzo_6"}}, "divisors": [], "colour": "red"}"#,
    );
    assert_eq!(run(&["classgroup", "--input", unknown.to_str().unwrap()]).status.code(), Some(2));

    let short = write_job(
        &dir,
        "short.json",
        r#"{"variety": {"builtin": {"name": "p1_product", "k": 2}}, "divisors": [[1, 0]]}"#,
    );
    assert_eq!(run(&["sections", "--input", short.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["sections", "--input", &example(COX), "--box", "3"]).status.code(), Some(2));
}

#[test]
fn dependent_classes_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_job(
        &dir,
        "dep.json",
        r#"{"variety": {"builtin": {"name": "p1_product", "k": 2}}, "divisors": [[1,0,0,0],[-1,0,0,0]]}"#,
    );
    let out = run(&["canonical", "--input", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dependent"));
}

#[test]
fn missing_witness_is_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_job(
        &dir,
        "axis.json",
        r#"{"variety": {"builtin": {"name": "p1_product", "k": 2}}, "divisors": [[1,0,0,0]]}"#,
    );
    let v = json(&run(&["canonical", "--input", p.to_str().unwrap()]));
    assert_eq!(v["hypotheses"]["ample_witness"], Value::Null);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_reproducible_and_sorted() {
    let a = run(&["sections", "--input", &example(COX)]);
    let b = run(&["sections", "--input", &example(COX)]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let degrees: Vec<Value> = v["table"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["degree"].clone())
        .collect();
    assert_eq!(degrees.len(), 121);
    assert_eq!(degrees[0], serde_json::json!([-5, -5]));
    assert_eq!(degrees[1], serde_json::json!([-5, -4]));
}

#[test]
fn csv_tables_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let status = run(&[
        "sections",
        "--input",
        &example(COX),
        "--box",
        "2:3",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(status.status.success());
    assert!(status.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text, "degree,dimension\n\"2,2\",9\n\"2,3\",12\n\"3,2\",12\n\"3,3\",16\n");
    let freeness_csv = run(&["freeness", "--input", &example(COX), "--format", "csv"]);
    assert_eq!(freeness_csv.status.code(), Some(2));
}

#[test]
fn restriction_report() {
    let v = json(&run(&["restrict", "--input", &example(COX), "--sublattice", "1,0"]));
    assert_eq!(v["agree"], false);
    assert_eq!(v["method"], "semigroup_interior");
    assert_eq!(entry(&v["subring_omega"], &[2]), 1);
    let v = json(&run(&["restrict", "--input", &example(COX), "--sublattice", "1,1"]));
    assert_eq!(v["agree"], true);
    assert_eq!(run(&["restrict", "--input", &example(COX)]).status.code(), Some(2));
}

#[test]
fn duality_probe_and_classgroup() {
    let v = json(&run(&["duality", "--input", &example(COX), "--box", "-6:6"]));
    assert_eq!(v["agree"], true);
    let v = json(&run(&["probe", "--input", &example(COX)]));
    assert_eq!(v["violations"], serde_json::json!([]));
    assert_eq!(v["pairs_checked"], 60);
    let v = json(&run(&["classgroup", "--input", &example("weighted_plane.json")]));
    assert_eq!(v["cl_r"]["torsion"], serde_json::json!([5]));
    assert_eq!(v["class_group"]["free_rank"], 2);
}

#[test]
fn q_divisor_job() {
    let v = json(&run(&["canonical", "--input", &example("half_point.json")]));
    assert_eq!(entry(&v["table"], &[4]), 1);
    assert_eq!(entry(&v["table"], &[7]), 3);
}

#[test]
fn examples_report() {
    let v = json(&run(&["examples"]));
    let free: Vec<(i64, i64)> = v["weighted_plane_235"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["free"] == true)
        .map(|c| (c["alpha"].as_i64().unwrap(), c["beta"].as_i64().unwrap()))
        .collect();
    assert_eq!(free, vec![(1, 1), (1, 2), (1, 5)]);
    assert_eq!(v["cox_p1xp1"]["twist"], serde_json::json!([-2, -2]));
    let blowups: Vec<bool> = v["point_blowup_p3"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["free"].as_bool().unwrap())
        .collect();
    assert_eq!(blowups, vec![true, true, false, false]);
}

#[test]
fn shipped_schema_and_examples() {
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(docs().join("jobspec.schema.json")).unwrap())
            .unwrap();
    let mut props: Vec<&String> = schema["properties"].as_object().unwrap().keys().collect();
    props.sort();
    assert_eq!(props, ["box", "divisors", "sublattice", "variety", "witness_bound"]);
    for entry in std::fs::read_dir(docs().join("examples")).unwrap() {
        let path = entry.unwrap().path();
        let out = run(&["classgroup", "--input", path.to_str().unwrap()]);
        assert!(out.status.success(), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
    }
}
