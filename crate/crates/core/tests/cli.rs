//! End-to-end tests of the `valquiver` binary: formats, exit codes,
//! stdin/file/output plumbing, and byte-for-byte determinism.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_valquiver");

fn write_fixture(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

const START_3X3: &str = r#"{"matrix": [[0, 2, 0], [-2, 0, 1], [0, -1, 0]]}"#;
const TARGET_3X3: &str = r#"{"matrix": [[0, -2, 1], [2, 0, 0], [-1, 0, 0]]}"#;
const A2: &str = r#"{"matrix": [[0, 1], [-1, 0]]}"#;
const B2: &str = r#"{"matrix": [[0, 2], [-1, 0]]}"#;
const B2_NEG: &str = r#"{"matrix": [[0, -2], [1, 0]]}"#;
const MARKOV: &str = r#"{"matrix": [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]}"#;

#[test]
fn mutate_prints_the_known_rank3_result() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "m.json", START_3X3);
    let out = run(&["mutate", &input, "--word", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "[[0,-2,2],[2,0,-1],[-2,1,0]]\n");
}

#[test]
fn mutate_with_empty_word_echoes_the_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "m.json", START_3X3);
    let out = run(&["mutate", &input]);
    assert_eq!(stdout_of(&out), "[[0,2,0],[-2,0,1],[0,-1,0]]\n");
}

#[test]
fn mutate_twice_in_the_same_direction_echoes_the_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "m.json", START_3X3);
    let out = run(&["mutate", &input, "--word", "2,2"]);
    assert_eq!(stdout_of(&out), "[[0,2,0],[-2,0,1],[0,-1,0]]\n");
}

#[test]
fn mutate_preserves_the_input_kind_for_quivers() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(
        dir.path(),
        "q.json",
        r#"{"n": 2, "arrows": [{"from": 1, "to": 2, "v": [2, 1]}]}"#,
    );
    let out = run(&["mutate", &input, "--word", "1"]);
    let text = stdout_of(&out);
    // The reversed arrow carries the swapped valuation pair.
    assert!(text.contains("2 -> 1 (1,2)"), "direction must flip: {text}");
    assert!(text.contains("d = [1, 2]"), "weights must survive: {text}");

    let json = run(&["mutate", &input, "--word", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["arrows"][0]["from"], 2);
    assert_eq!(value["arrows"][0]["to"], 1);
}

#[test]
fn explore_summary_matches_the_known_pentagon_class() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "a2.json", A2);
    let out = run(&["explore", &input]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "labeled=10 clusters=5 variables=5 complete=true positive=true\n"
    );
}

#[test]
fn explore_reports_truncation_under_a_seed_cap() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "markov.json", MARKOV);
    let out = run(&["explore", &input, "--max-seeds", "100", "--max-depth", "100000"]);
    assert!(out.status.success(), "truncated exploration is still an answer");
    assert!(stdout_of(&out).contains("complete=false"));
}

#[test]
fn explore_emits_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "a2.json", A2);

    let dot = run(&["explore", &input, "--format", "dot"]);
    let text = stdout_of(&dot);
    assert!(text.starts_with("graph mutation_class {"));
    assert!(text.contains("s1 -- s2 [label=\"1\"];"));

    let verbose = run(&["explore", &input, "--format", "dot", "--verbose-labels"]);
    assert!(stdout_of(&verbose).contains("x1"), "verbose labels embed clusters");

    let json = run(&["explore", &input, "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["summary"]["labeled"], 10);
    assert_eq!(value["summary"]["clusters"], 5);
    assert_eq!(value["seeds"].as_array().unwrap().len(), 10);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "a2.json", A2);
    let first = run(&["explore", &input, "--format", "json"]);
    let second = run(&["explore", &input, "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);

    let v1 = run(&["verify", "relabeling", "--rng-seed", "9"]);
    let v2 = run(&["verify", "relabeling", "--rng-seed", "9"]);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn stdin_dash_reads_the_same_document() {
    let mut child = Command::new(BIN)
        .args(["explore", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(A2.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "labeled=10 clusters=5 variables=5 complete=true positive=true\n"
    );
}

#[test]
fn output_flag_writes_the_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "a2.json", A2);
    let target = dir.path().join("graph.dot");
    let out = run(&["explore", &input, "--format", "dot", "--output", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.starts_with("graph mutation_class {"));
}

#[test]
fn autgroup_reports_the_dihedral_group_of_order_six() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "b2.json", B2);
    let out = run(&["autgroup", &input]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("order=6"), "unexpected report: {text}");
    assert!(text.contains("(T1 T2)^3 = 1"), "missing relation: {text}");

    let json = run(&["autgroup", &input, "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["order"], 6);
    assert_eq!(value["table"].as_array().unwrap().len(), 6);
}

#[test]
fn autgroup_refuses_truncated_classes_with_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "markov.json", MARKOV);
    let out = run(&["autgroup", &input, "--max-seeds", "50", "--max-depth", "100000"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn certify_prints_a_certificate_for_the_worked_pair() {
    let dir = tempfile::tempdir().unwrap();
    let start = write_fixture(dir.path(), "start.json", START_3X3);
    let target = write_fixture(dir.path(), "target.json", TARGET_3X3);
    let out = run(&["certify", &start, &target]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("certified unreachable"), "got: {text}");
    assert!(text.contains("target violates the pattern at"), "got: {text}");

    let json = run(&["certify", &start, &target, "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["outcome"], "certified_unreachable");
    assert_eq!(
        value["certificate"]["justifications"].as_array().unwrap().len(),
        6
    );
}

#[test]
fn certify_equal_inputs_reaches_with_the_empty_word() {
    let dir = tempfile::tempdir().unwrap();
    let start = write_fixture(dir.path(), "b2.json", B2);
    let out = run(&["certify", &start, &start]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "reached: word = []\n");
}

#[test]
fn certify_finds_the_single_mutation_to_the_negated_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let start = write_fixture(dir.path(), "b2.json", B2);
    let target = write_fixture(dir.path(), "b2neg.json", B2_NEG);
    let out = run(&["certify", &start, &target]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "reached: word = [1]\n");
}

#[test]
fn similar_lists_witnesses_with_signs() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_fixture(dir.path(), "start.json", START_3X3);
    let b = write_fixture(dir.path(), "target.json", TARGET_3X3);
    let out = run(&["similar", &a, &b]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("similar = true"));
    assert!(text.contains("sigma = [2 1 3] sign = +1"), "got: {text}");

    let json = run(&["similar", &a, &b, "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["similar"], true);
    assert_eq!(value["witnesses"][0]["sigma"], serde_json::json!([2, 1, 3]));
    assert_eq!(value["witnesses"][0]["sign"], 1);
}

#[test]
fn similar_reports_false_without_failing() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_fixture(dir.path(), "a2.json", A2);
    let b = write_fixture(dir.path(), "b2.json", B2);
    let out = run(&["similar", &a, &b]);
    assert!(out.status.success(), "a negative answer is still an answer");
    assert_eq!(stdout_of(&out), "similar = false\n");
}

#[test]
fn verify_suite_passes_and_prints_a_summary() {
    let out = run(&["verify", "groups"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("suite=groups"));
    assert!(stdout_of(&out).contains(" ok"));
}

#[test]
fn expand_prints_laurent_clusters() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "b2.json", B2);
    let out = run(&["expand", &input, "--word", "1 2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("x1 = 1 + x2 / (x1)"), "got: {text}");
    assert!(text.contains("B = "), "the reached exchange matrix is shown: {text}");
}

#[test]
fn unreadable_input_and_bad_json_exit_2() {
    let out = run(&["explore", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = write_fixture(dir.path(), "bad.json", "{not json");
    let out = run(&["explore", &bad]);
    assert_eq!(out.status.code(), Some(2));

    let wrong_shape = write_fixture(dir.path(), "shape.json", r#"{"rows": []}"#);
    let out = run(&["explore", &wrong_shape]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mathematically_invalid_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let not_skew = write_fixture(dir.path(), "bad.json", r#"{"matrix": [[0, 1], [1, 0]]}"#);
    let out = run(&["explore", &not_skew]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error:"), "stderr explains the rejection: {err}");
}

#[test]
fn unknown_verify_suite_exits_2() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
