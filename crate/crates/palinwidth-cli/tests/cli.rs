//! End-to-end tests driving the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_palinwidth"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("valid json")
}

#[test]
fn width_sigma_class_a5_json_schema_and_values() {
    let out = run(&[
        "width",
        "--group",
        "A5",
        "--genset",
        "sigma-class",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    let object = report.as_object().unwrap();
    for key in [
        "group",
        "order",
        "genset",
        "palindrome_count",
        "width",
        "layers",
        "n_subgroup_order",
        "bounds",
        "verdicts",
        "timings_ms",
    ] {
        assert!(object.contains_key(key), "missing key {key}");
    }
    assert_eq!(report["group"], "A5");
    assert_eq!(report["order"], 60);
    assert_eq!(report["palindrome_count"], 16);
    assert_eq!(report["width"], 2);
    assert_eq!(report["layers"], serde_json::json!([1, 16, 60]));
    assert_eq!(report["n_subgroup_order"], 1);
    assert_eq!(report["bounds"]["involution"], 2);
    let coset = report["bounds"]["coset"].as_u64().unwrap();
    let covering = report["bounds"]["covering2x"].as_u64().unwrap();
    assert!(coset >= 2 && covering >= 2);
}

#[test]
fn width_lemma_augmented_a5_is_one() {
    let out = run(&[
        "width",
        "--group",
        "A5",
        "--genset",
        "lemma-augmented",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["width"], 1);
    assert_eq!(report["palindrome_count"], 60);
    assert_eq!(report["bounds"]["coset"], 1);
    assert!(report["genset"]
        .as_str()
        .unwrap()
        .contains("lemma-augmented"));
}

#[test]
fn width_of_abelian_catalog_group_is_one() {
    let out = run(&["width", "--group", "C6", "--format", "json"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["width"], 1);
    assert_eq!(report["order"], 6);
    assert_eq!(report["palindrome_count"], 6);
}

#[test]
fn reports_are_deterministic_modulo_timings() {
    let args = [
        "width",
        "--group",
        "PSL(2,7)",
        "--genset",
        "lemma-augmented",
        "--format",
        "json",
    ];
    let mut a = json(&run(&args));
    let mut b = json(&run(&args));
    a.as_object_mut().unwrap().remove("timings_ms");
    b.as_object_mut().unwrap().remove("timings_ms");
    assert_eq!(a, b);
}

#[test]
fn verify_passes_on_a5_and_is_quiet_about_failures() {
    let out = run(&["verify", "--group", "A5", "--format", "json"]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let report = json(&out);
    let verdicts = report["verdicts"].as_object().unwrap();
    for key in [
        "reversal_identities",
        "n_subgroup_palindromic",
        "conjugates_in_palindrome_square",
        "single_palindrome_width",
        "augmentation",
    ] {
        let value = verdicts[key].as_str().unwrap();
        assert!(value.starts_with("pass"), "{key}: {value}");
    }
    assert_eq!(
        verdicts["involution_facts"].as_str().unwrap(),
        "not applicable (generators are not a single involution class)"
    );
}

#[test]
fn verify_marks_non_simple_and_abelian_groups_not_applicable() {
    let out = run(&["verify", "--group", "S4", "--format", "json"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(
        report["verdicts"]["single_palindrome_width"],
        "not applicable (not simple)"
    );

    let out = run(&["verify", "--group", "C6", "--format", "json"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(
        report["verdicts"]["single_palindrome_width"],
        "not applicable (abelian)"
    );
    assert_eq!(
        report["verdicts"]["augmentation"],
        "not applicable (abelian)"
    );
}

#[test]
fn verify_reports_inconclusive_with_warning_and_exit_zero() {
    // C64's shortest relation has length 64, far beyond the cap.
    let out = run(&["verify", "--group", "C64", "--format", "json"]);
    assert!(out.status.success(), "inconclusive keeps exit 0");
    let report = json(&out);
    assert!(report["verdicts"]["reversal_identities"]
        .as_str()
        .unwrap()
        .starts_with("inconclusive"));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("warning"), "stderr: {stderr}");
}

#[test]
fn survey_rows_follow_input_order_with_n_over_4_column() {
    let out = run(&[
        "survey",
        "--group",
        "A5",
        "--group",
        "A6",
        "--group",
        "A7",
        "--genset",
        "sigma-class",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for (row, (name, n4)) in rows.iter().zip([("A5", 2), ("A6", 2), ("A7", 2)]) {
        assert_eq!(row["group"], name);
        assert_eq!(row["status"], "ok");
        assert_eq!(row["n_over_4"], n4);
        assert!(row["width"].as_u64().unwrap() >= n4);
    }
}

#[test]
fn survey_of_augmented_simple_groups_has_width_one_everywhere() {
    let out = run(&[
        "survey",
        "--group",
        "A5",
        "--group",
        "PSL(2,7)",
        "--genset",
        "lemma-augmented",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let rows = json(&out);
    for row in rows.as_array().unwrap() {
        assert_eq!(row["status"], "ok");
        assert_eq!(row["width"], 1, "group {}", row["group"]);
    }
}

#[test]
fn survey_isolates_per_row_failures() {
    let out = run(&[
        "survey",
        "--group",
        "A5",
        "--group",
        "C6",
        "--genset",
        "involution-class",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "row failures keep exit 0");
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows[0]["status"], "ok");
    assert_eq!(rows[1]["status"], "error");
    assert!(rows[1]["error"].as_str().unwrap().contains("simple"));
}

#[test]
fn survey_with_no_groups_is_an_empty_table() {
    let out = run(&["survey", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(json(&out), serde_json::json!([]));

    let out = run(&["survey", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1, "header only");
}

#[test]
fn csv_quotes_group_names_containing_commas() {
    let out = run(&["survey", "--group", "PSL(2,7)", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "group,order,genset,palindrome_count,width,layers,n_subgroup_order,\
         bound_involution,bound_coset,bound_covering2x,n_over_4,status,error"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("\"PSL(2,7)\","), "row: {row}");
    // The row still parses back into exactly 13 fields.
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(row.as_bytes());
    let record = reader.records().next().unwrap().unwrap();
    assert_eq!(record.len(), 13);
    assert_eq!(&record[0], "PSL(2,7)");
    assert_eq!(&record[1], "168");
}

#[test]
fn genset_file_input_works_end_to_end() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("palinwidth_cli_test_genset.txt");
    std::fs::write(
        &path,
        "# the symmetric group on three points\ndegree 3\nx = (1 2)\ny = (2 3)\n",
    )
    .unwrap();
    let out = run(&[
        "width",
        "--genset-file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["order"], 6);
    assert_eq!(report["group"], "palinwidth_cli_test_genset.txt");
    std::fs::remove_file(&path).ok();
}

#[test]
fn malformed_genset_file_exits_two_with_structured_error() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("palinwidth_cli_test_bad_genset.txt");
    std::fs::write(&path, "degree 3\nx = (1 2)(2 3)\n").unwrap();
    let out = run(&["width", "--genset-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    let err: serde_json::Value = serde_json::from_str(stderr.lines().next().unwrap()).unwrap();
    assert_eq!(err["error"]["kind"], "invalid-input");
    assert!(err["error"]["message"]
        .as_str()
        .unwrap()
        .contains("repeated point"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn unknown_group_exits_two() {
    let out = run(&["width", "--group", "Q8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_group_spec_exits_two() {
    let out = run(&["width"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["width", "--group", "A5", "--genset-file", "/nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_overflow_exits_three() {
    let out = run(&["width", "--group", "A9", "--max-order", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    let err: serde_json::Value = serde_json::from_str(stderr.lines().next().unwrap()).unwrap();
    assert_eq!(err["error"]["kind"], "capacity");
}

#[test]
fn zero_caps_are_invalid_input() {
    let out = run(&["width", "--group", "A5", "--max-order", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_caps_order_and_flag_overrides_it() {
    let out = binary()
        .args(["width", "--group", "A5"])
        .env("PALINWIDTH_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = binary()
        .args([
            "width",
            "--group",
            "A5",
            "--max-order",
            "100",
            "--format",
            "json",
        ])
        .env("PALINWIDTH_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("palinwidth_cli_test_report.json");
    std::fs::remove_file(&path).ok();
    let out = run(&[
        "width",
        "--group",
        "S3",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["order"], 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn sigma_class_requires_an_alternating_catalog_group() {
    let out = run(&["width", "--group", "S4", "--genset", "sigma-class"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["width", "--group", "A4", "--genset", "sigma-class"]);
    assert_eq!(out.status.code(), Some(2));
}
