//! End-to-end tests of the `assort` binary and the runner library:
//! scenario handling, exit codes, report determinism, and witness replay.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use assort_cli::{run_scenario, RunOptions, Scenario};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_assort"))
}

fn scenario_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn strip_timing(report: &str) -> String {
    report
        .lines()
        .map(|line| {
            line.split_whitespace()
                .filter(|tok| !tok.starts_with("elapsed_ms="))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn certification_scenario_exits_zero() {
    let output = run(&[
        "--scenario",
        scenario_path("certify_public_reports.scn")
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("result=certified"), "{text}");
}

#[test]
fn refutation_scenario_exits_one_with_witness() {
    let output = run(&[
        "--scenario",
        scenario_path("refute_matched_report.scn").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("result=refuted"), "{text}");
    assert!(
        text.contains("witness assignment=(t2,t4,t5) deviator=j2 report=t1"),
        "{text}"
    );
}

#[test]
fn scale_equal_to_market_is_a_configuration_error() {
    let dir = std::env::temp_dir().join("assort-cli-test-bad-scale");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.scn");
    std::fs::write(&path, "n = 3\nl = 3\nmechanism = empty\n").unwrap();
    let output = run(&["--scenario", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains("must exceed"), "{err}");
}

#[test]
fn malformed_lines_are_reported_with_their_number() {
    let dir = std::env::temp_dir().join("assort-cli-test-malformed");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.scn");
    std::fs::write(&path, "n = 3\nl = 5\nmechanism such that\n").unwrap();
    let output = run(&["--scenario", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let path = scenario_path("refute_matched_report.scn");
    let a = run(&["--scenario", path.to_str().unwrap()]);
    let b = run(&["--scenario", path.to_str().unwrap()]);
    assert_eq!(strip_timing(&stdout_of(&a)), strip_timing(&stdout_of(&b)));
    // and under parallel evaluation
    let c = run(&["--scenario", path.to_str().unwrap(), "--jobs", "4"]);
    assert_eq!(strip_timing(&stdout_of(&a)), strip_timing(&stdout_of(&c)));
}

#[test]
fn refutation_witnesses_replay_to_the_same_verdict() {
    let path = scenario_path("refute_matched_report.scn");
    let scenario = Scenario::from_path(&path).unwrap();
    let (report, exit) = run_scenario(&scenario, &RunOptions::default()).unwrap();
    assert_eq!(exit, 1);
    let witness = report
        .records
        .iter()
        .find(|r| r.tag() == "witness")
        .expect("refutations carry a witness");
    let assignment: Vec<usize> = witness
        .get("assignment")
        .unwrap()
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|t| t.trim_start_matches('t').parse().unwrap())
        .collect();
    let deviator: usize = witness
        .get("deviator")
        .unwrap()
        .trim_start_matches('j')
        .parse()
        .unwrap();
    let report_rank: usize = witness
        .get("report")
        .unwrap()
        .trim_start_matches('t')
        .parse()
        .unwrap();
    let replayed =
        assort_cli::replay_witness(&scenario, &assignment, deviator, report_rank).unwrap();
    assert_eq!(replayed.to_string(), witness.get("outcome").unwrap());
}

#[test]
fn bundled_cases_all_match() {
    for id in assort_cli::REPRODUCE_IDS {
        let output = run(&["--reproduce", id]);
        assert_eq!(output.status.code(), Some(0), "reproduce {id} failed");
        let text = stdout_of(&output);
        assert!(!text.contains("match=false"), "{id}: {text}");
    }
}

#[test]
fn unknown_reproduce_id_is_a_configuration_error() {
    let output = run(&["--reproduce", "ex99"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_certifies_the_compatible_mechanisms() {
    let output = run(&[
        "--sweep",
        "--max-n",
        "3",
        "--max-l",
        "5",
        "--mechanism",
        "informative_public",
        "--mechanism",
        "lower_contour",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(!text.contains("result=refuted"), "{text}");
    assert!(text.contains("sweep rows=10 refuted=0"), "{text}");
}

#[test]
fn sweep_refutes_matched_report_and_empty() {
    let output = run(&[
        "--sweep",
        "--min-n",
        "3",
        "--max-n",
        "3",
        "--min-l",
        "7",
        "--max-l",
        "7",
        "--mechanism",
        "matched_report",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout_of(&output).contains("result=refuted"));

    let output = run(&[
        "--sweep",
        "--min-n",
        "2",
        "--max-n",
        "2",
        "--min-l",
        "3",
        "--max-l",
        "4",
        "--mechanism",
        "empty",
        "--policy",
        "minimal",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    // at L = 3 every improving overbid comes from the bottom type, which even
    // minimal information blocks; one more type breaks the mechanism
    assert!(
        text.contains("n=2 l=3 mechanism=empty policy=minimal regime=injective result=certified")
    );
    assert!(text.contains("n=2 l=4 mechanism=empty policy=minimal regime=injective result=refuted"));
}

#[test]
fn guardrails_stop_oversized_sweeps() {
    let output = run(&["--sweep", "--max-n", "6", "--max-l", "7"]);
    assert_eq!(output.status.code(), Some(2));
    // and --force overrides (kept tiny by the range choice)
    let output = run(&[
        "--sweep",
        "--min-n",
        "2",
        "--max-n",
        "2",
        "--min-l",
        "9",
        "--max-l",
        "9",
        "--mechanism",
        "lower_contour",
        "--force",
    ]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn pathological_scenario_runs_its_fixed_case() {
    let output = run(&[
        "--scenario",
        scenario_path("pathological_beliefs.scn").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(
        text.contains("mode=single_case result=successful"),
        "{text}"
    );
}

#[test]
fn two_sided_scenario_finds_the_counterexample() {
    let output = run(&[
        "--scenario",
        scenario_path("two_sided_counterexample.scn")
            .to_str()
            .unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout_of(&output);
    assert!(text.contains("kind=two_sided"), "{text}");
    assert!(text.contains("outcome=successful"), "{text}");
}

#[test]
fn quantified_reading_certifies_the_empty_mechanism() {
    // Quantifying a plan over every assignment consistent with the
    // deviator's own type: some assignment always leaves the overbid
    // pointless but never blocked, so the empty mechanism stays refuted;
    // the public mechanism is certified outright.
    let output = run(&[
        "--sweep",
        "--min-n",
        "3",
        "--max-n",
        "3",
        "--min-l",
        "4",
        "--max-l",
        "4",
        "--mechanism",
        "informative_public",
        "--quantify-over-positions",
    ]);
    assert_eq!(output.status.code(), Some(0));
}
