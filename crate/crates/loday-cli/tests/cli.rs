//! End-to-end tests against the compiled binary: exit codes, report JSON,
//! output files, determinism of reruns, and the seed environment variable.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn loday() -> Command {
    Command::new(env!("CARGO_BIN_EXE_loday"))
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn stdout_str(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 stdout")
}

fn stderr_str(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("process not killed by signal")
}

/// Runs the binary, asserting nothing; panics only if spawning fails.
fn run(args: &[&str]) -> Output {
    loday().args(args).output().expect("binary runs")
}

#[test]
fn help_exits_zero() {
    let output = run(&["--help"]);
    assert_eq!(code(&output), 0);
    assert!(stdout_str(&output).contains("Usage"));
}

#[test]
fn catalog_list_is_deterministic_and_complete() {
    let first = run(&["catalog", "list"]);
    assert_eq!(code(&first), 0);
    for name in loday_cli::catalog::names() {
        assert!(
            stdout_str(&first).contains(name),
            "listing mentions {name}"
        );
    }
    let second = run(&["catalog", "list"]);
    assert_eq!(first.stdout, second.stdout, "rerun is byte-identical");
}

#[test]
fn emitted_fixture_round_trips_through_check() {
    let emitted = run(&["catalog", "emit", "leib2"]);
    assert_eq!(code(&emitted), 0);
    let path = tmp("leib2-roundtrip.json");
    std::fs::write(&path, &emitted.stdout).unwrap();

    let checked = run(&["check", "--system", "leibniz", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&checked), 0, "stderr: {}", stderr_str(&checked));
    let report: serde_json::Value = serde_json::from_str(stdout_str(&checked)).unwrap();
    assert_eq!(report["exit_code"], 0);
    assert_eq!(report["verdicts"][0]["holds"], true);
}

#[test]
fn violated_system_reports_a_counterexample_and_exits_two() {
    // A one-dimensional idempotent product: x∘(y∘z) = e, but the derivation
    // expansion gives 2e, so the check must fail with a concrete witness.
    let path = tmp("idempotent.json");
    std::fs::write(
        &path,
        "{\n  \"dim\": 1,\n  \"products\": {\n    \"circ\": [\n      { \"i\": 0, \"j\": 0, \"k\": 0, \"c\": \"1\" }\n    ]\n  }\n}\n",
    )
    .unwrap();

    let checked = run(&["check", "--system", "leibniz", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&checked), 2);
    let report: serde_json::Value = serde_json::from_str(stdout_str(&checked)).unwrap();
    assert_eq!(report["verdicts"][0]["holds"], false);
    let counterexample = &report["verdicts"][0]["counterexample"];
    assert_eq!(counterexample["basis_tuple"], serde_json::json!([0, 0, 0]));
    assert_eq!(counterexample["defect"]["kind"], "vector");
}

#[test]
fn alternate_product_binding_finds_the_known_defect() {
    let emitted = run(&["catalog", "emit", "leib2"]);
    let path = tmp("leib2-binding.json");
    std::fs::write(&path, &emitted.stdout).unwrap();

    // leib2 is Leibniz but not Lie: antisymmetry fails on the nilpotent
    // generator with defect 2·e1.
    let checked = run(&[
        "check",
        "--system",
        "lie-algebra",
        "--products",
        "circ",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&checked), 2);
    let report: serde_json::Value = serde_json::from_str(stdout_str(&checked)).unwrap();
    let counterexample = &report["verdicts"][0]["counterexample"];
    assert_eq!(counterexample["equation"], "lie-algebra-1");
    assert_eq!(counterexample["basis_tuple"], serde_json::json!([0, 0]));
    assert_eq!(
        counterexample["defect"]["entries"],
        serde_json::json!(["0", "2"])
    );
}

#[test]
fn malformed_input_exits_one() {
    let path = tmp("malformed.json");
    std::fs::write(&path, "{ \"dim\": 2, ").unwrap();
    let checked = run(&["check", "--system", "leibniz", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&checked), 1);
    assert!(stderr_str(&checked).contains("error:"));
}

#[test]
fn unknown_system_exits_one() {
    let emitted = run(&["catalog", "emit", "leib2"]);
    let path = tmp("leib2-unknown-system.json");
    std::fs::write(&path, &emitted.stdout).unwrap();
    let checked = run(&["check", "--system", "nonsense", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&checked), 1);
    assert!(stderr_str(&checked).contains("error:"));
}

#[test]
fn suite_run_is_deterministic() {
    let args = ["verify-theorem", "prop-3-9", "--seed", "3", "--samples", "5"];
    let first = run(&args);
    assert_eq!(code(&first), 0, "stderr: {}", stderr_str(&first));
    let report: serde_json::Value = serde_json::from_str(stdout_str(&first)).unwrap();
    assert_eq!(report["holds"], true);

    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "rerun is byte-identical");
}

#[test]
fn seed_environment_variable_matches_the_flag() {
    let flagged = run(&["verify-theorem", "prop-2-22", "--seed", "9", "--samples", "4"]);
    let via_env = loday()
        .args(["verify-theorem", "prop-2-22", "--samples", "4"])
        .env("LODAY_SEED", "9")
        .output()
        .expect("binary runs");
    assert_eq!(code(&flagged), 0);
    assert_eq!(code(&via_env), 0);
    assert_eq!(flagged.stdout, via_env.stdout);
}

#[test]
fn unknown_suite_exits_one_and_lists_the_suites() {
    let output = run(&["verify-theorem", "prop-9-99"]);
    assert_eq!(code(&output), 1);
    let stderr = stderr_str(&output);
    assert!(stderr.contains("error:"));
    for id in loday_cli::suite::SUITES {
        assert!(stderr.contains(id), "stderr lists {id}");
    }
}

#[test]
fn construct_writes_the_expected_transform() {
    let emitted = run(&["catalog", "emit", "nov1"]);
    let input = tmp("nov1-construct.json");
    std::fs::write(&input, &emitted.stdout).unwrap();
    let output_path = tmp("nov1-minus2.json");

    let constructed = run(&[
        "construct",
        "--op",
        "minus2-transform",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&constructed), 0, "stderr: {}", stderr_str(&constructed));

    // e⊢e = e⊣e = e maps to x≻y = 2x⊢y + y⊣x = 3e and
    // x≺y = −x⊣y − 2y⊢x = −3e.
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&output_path).unwrap()).unwrap();
    assert_eq!(written["dim"], 1);
    assert_eq!(written["products"]["succ"][0]["c"], "3");
    assert_eq!(written["products"]["prec"][0]["c"], "-3");
}

#[test]
fn construct_without_required_mode_exits_one() {
    let emitted = run(&["catalog", "emit", "perm4"]);
    let input = tmp("perm4-no-mode.json");
    std::fs::write(&input, &emitted.stdout).unwrap();
    let constructed = run(&[
        "construct",
        "--op",
        "perm-to-leibniz",
        "--input",
        input.to_str().unwrap(),
        "--output",
        tmp("perm4-no-mode-out.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&constructed), 1);
    assert!(stderr_str(&constructed).contains("--mode"));
}

/// A bundle whose form is skew and nondegenerate but not a 2-cocycle over
/// its product (the rotation product on two generators).
fn non_cocycle_input() -> String {
    "{\n  \"dim\": 2,\n  \"products\": {\n    \"circ\": [\n      { \"i\": 0, \"j\": 1, \"k\": 1, \"c\": \"1\" },\n      { \"i\": 1, \"j\": 0, \"k\": 1, \"c\": \"-1\" }\n    ]\n  },\n  \"forms\": {\n    \"omega\": [\n      [\"0\", \"1\"],\n      [\"-1\", \"0\"]\n    ]\n  }\n}\n"
        .to_string()
}

#[test]
fn failed_precondition_exits_two_and_writes_nothing() {
    let input = tmp("non-cocycle.json");
    std::fs::write(&input, non_cocycle_input()).unwrap();
    let output_path = tmp("non-cocycle-out.json");

    let constructed = run(&[
        "construct",
        "--op",
        "levi-civita-from-cocycle",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&constructed), 2);
    assert!(!output_path.exists(), "no output on a failed precondition");
    let report: serde_json::Value = serde_json::from_str(stdout_str(&constructed)).unwrap();
    let verdicts = report["verdicts"].as_array().unwrap();
    assert!(verdicts
        .iter()
        .any(|v| v["target"].as_str().unwrap().contains("two-cocycle") && v["holds"] == false));
}

#[test]
fn force_skips_preconditions_and_writes() {
    let input = tmp("non-cocycle-forced.json");
    std::fs::write(&input, non_cocycle_input()).unwrap();
    let output_path = tmp("non-cocycle-forced-out.json");

    let constructed = run(&[
        "construct",
        "--op",
        "levi-civita-from-cocycle",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output_path.to_str().unwrap(),
        "--force",
    ]);
    assert_eq!(code(&constructed), 0, "stderr: {}", stderr_str(&constructed));
    assert!(output_path.exists(), "--force still writes the output");
    let report: serde_json::Value = serde_json::from_str(stdout_str(&constructed)).unwrap();
    let notes: Vec<&str> = report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|v| v["note"].as_str())
        .collect();
    assert!(notes.iter().any(|n| n.contains("skipped (--force)")));
}
