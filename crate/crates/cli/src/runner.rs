//! Executes scenarios, bundled reproductions, and verification sweeps.

use std::time::Instant;

use assort_core::{
    blocking_pairs, blocks, check_assumption_nt, deviation_state, evaluate_misreport, is_stable,
    minimal_stability_criterion, overconfident_top_firm_script, verify_ic, verify_ic_quantified,
    Announcer, Certification, FirmAssignment, FirmId, GeneralAssignment, InfoPolicy, Market,
    MatchingState, MechanismSpec, NtViolation, Outcome, Regime, TieBreak, TypeAssignment,
    TypeSpace, Universe, VerifyRun, WorkerId, WorkerType,
};

use crate::report::{Record, Report};
use crate::scenario::{Kind, Scenario, ScenarioError};

/// Exit statuses: 0 verified / golden match, 1 refuted in verify mode or
/// golden mismatch, 2 configuration error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub quantify_over_positions: bool,
}

fn tie_break_field(tau: &TieBreak) -> String {
    tau.ranks()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn witness_record(
    universe: &Universe,
    verdict: &assort_core::ManipulationVerdict,
    state: Option<&MatchingState>,
) -> Record {
    let position = assort_core::position(&verdict.assignment, verdict.deviator)
        .expect("witness deviator is in range");
    let swaps = assort_core::leapfrog_count(&verdict.assignment, verdict.deviator, verdict.report)
        .expect("witness deviator is in range");
    let mut record = Record::new("witness")
        .field("assignment", &verdict.assignment)
        .field("deviator", verdict.deviator)
        .field("report", verdict.report)
        .field("position", position)
        .field("swaps", swaps)
        .field("matching", &verdict.induced)
        .field("outcome", verdict.outcome);
    if let Some(state) = state {
        let sizes = universe
            .firm_ids()
            .map(|i| format!("{i}:{}", state.firm_info[i.index()].len()))
            .collect::<Vec<_>>()
            .join(",");
        record = record.field("info", sizes);
    }
    record
}

fn verdict_result(run: &VerifyRun) -> &'static str {
    if run.certification.is_certified() {
        "certified"
    } else {
        "refuted"
    }
}

/// Runs a parsed scenario. Verify mode exits 1 on refutation; fixed-case
/// mode exits 1 when the deviation is successful.
pub fn run_scenario(sc: &Scenario, opts: &RunOptions) -> Result<(Report, i32), ScenarioError> {
    match sc.kind {
        Kind::OneSided => run_one_sided(sc, opts),
        Kind::TwoSided => run_two_sided(sc),
    }
}

fn run_one_sided(sc: &Scenario, opts: &RunOptions) -> Result<(Report, i32), ScenarioError> {
    let market = Market::new(
        TypeSpace::with_len(sc.worker_types),
        assort_core::FirmRoster::with_len(sc.n),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let universe = market.universe();
    let policy = sc.build_policy(&universe)?;
    let tau = sc.tie_break_rule();
    let mech = MechanismSpec::new(sc.mechanism, tau.clone(), sc.regime);
    let mut report = Report::new();
    let start = Instant::now();

    if let Some(fixed) = &sc.fixed {
        let w = TypeAssignment::from_ranks(&fixed.assignment)
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let deviator = WorkerId::from_index(fixed.deviator - 1);
        let rep = WorkerType::from_rank(fixed.report);
        let (verdict, state) = deviation_state(&mech, &policy, &universe, &w, deviator, rep)
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let exit = if verdict.outcome.is_successful() {
            EXIT_REFUTED
        } else {
            EXIT_OK
        };
        report.push(
            Record::new("verdict")
                .field("kind", Kind::OneSided)
                .field("mechanism", sc.mechanism)
                .field("policy", &policy)
                .field("regime", sc.regime)
                .field("tie_break", tie_break_field(&tau))
                .field("n", sc.n)
                .field("l", sc.worker_types)
                .field("mode", "single_case")
                .field("result", verdict.outcome)
                .field("elapsed_ms", start.elapsed().as_millis()),
        );
        report.push(witness_record(&universe, &verdict, Some(&state)));
        return Ok((report, exit));
    }

    if opts.quantify_over_positions {
        let (plan, stats) = verify_ic_quantified(&mech, &policy, &universe)
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let result = if plan.is_none() {
            "certified"
        } else {
            "refuted"
        };
        report.push(
            Record::new("verdict")
                .field("kind", Kind::OneSided)
                .field("mechanism", sc.mechanism)
                .field("policy", &policy)
                .field("regime", sc.regime)
                .field("tie_break", tie_break_field(&tau))
                .field("n", sc.n)
                .field("l", sc.worker_types)
                .field("mode", "quantified")
                .field("result", result)
                .field("assignments", stats.assignments)
                .field("deviations", stats.deviations)
                .field("elapsed_ms", start.elapsed().as_millis()),
        );
        if let Some(plan) = plan {
            report.push(
                Record::new("plan")
                    .field("deviator", plan.deviator)
                    .field("own_type", plan.own_type)
                    .field("report", plan.report),
            );
            return Ok((report, EXIT_REFUTED));
        }
        return Ok((report, EXIT_OK));
    }

    let run =
        verify_ic(&mech, &policy, &universe).map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    report.push(
        Record::new("verdict")
            .field("kind", Kind::OneSided)
            .field("mechanism", sc.mechanism)
            .field("policy", &policy)
            .field("regime", sc.regime)
            .field("tie_break", tie_break_field(&tau))
            .field("n", sc.n)
            .field("l", sc.worker_types)
            .field("mode", "verify")
            .field("result", verdict_result(&run))
            .field("assignments", run.stats.assignments)
            .field("deviations", run.stats.deviations)
            .field("states", run.stats.states_built)
            .field("tie_checks", run.stats.tie_crosschecks)
            .field("elapsed_ms", start.elapsed().as_millis()),
    );
    match &run.certification {
        Certification::Certified => Ok((report, EXIT_OK)),
        Certification::Refuted(verdict) => {
            let (_, state) = deviation_state(
                &mech,
                &policy,
                &universe,
                &verdict.assignment,
                verdict.deviator,
                verdict.report,
            )
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
            report.push(witness_record(&universe, verdict, Some(&state)));
            Ok((report, EXIT_REFUTED))
        }
    }
}

fn run_two_sided(sc: &Scenario) -> Result<(Report, i32), ScenarioError> {
    let s = sc.firm_types.expect("validated at parse time");
    let market = assort_core::TwoSidedMarket::desk(sc.n, sc.worker_types, s)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let tau = sc.tie_break_rule();
    let mut report = Report::new();
    let start = Instant::now();
    if let Some(fixed) = &sc.fixed {
        let worker_universe = market
            .worker_universe()
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let firm_universe = market
            .firm_universe()
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let firms = FirmAssignment::from_ranks(
            fixed
                .firm_assignment
                .as_ref()
                .expect("validated at parse time"),
        )
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let workers = TypeAssignment::from_ranks(&fixed.assignment)
            .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let general = GeneralAssignment { firms, workers };
        let verdict = assort_core::evaluate_worker_misreport(
            &worker_universe,
            &firm_universe,
            &general,
            WorkerId::from_index(fixed.deviator - 1),
            WorkerType::from_rank(fixed.report),
            &tau,
            sc.worker_info,
        )
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
        let exit = if verdict.outcome.is_successful() {
            EXIT_REFUTED
        } else {
            EXIT_OK
        };
        report.push(
            Record::new("verdict")
                .field("kind", Kind::TwoSided)
                .field("n", sc.n)
                .field("l", sc.worker_types)
                .field("s", s)
                .field("mode", "single_case")
                .field("result", verdict.outcome)
                .field("elapsed_ms", start.elapsed().as_millis()),
        );
        report.push(
            Record::new("witness")
                .field("firm_assignment", &verdict.general.firms)
                .field("assignment", &verdict.general.workers)
                .field("deviator", verdict.deviator)
                .field("report", verdict.report)
                .field("matching", &verdict.induced)
                .field("outcome", verdict.outcome),
        );
        return Ok((report, exit));
    }
    let (witness, evaluated) = assort_core::verify_two_sided(&market, &tau, sc.worker_info)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let result = if witness.is_none() {
        "certified"
    } else {
        "refuted"
    };
    report.push(
        Record::new("verdict")
            .field("kind", Kind::TwoSided)
            .field("n", sc.n)
            .field("l", sc.worker_types)
            .field("s", s)
            .field("mode", "verify")
            .field("result", result)
            .field("deviations", evaluated)
            .field("elapsed_ms", start.elapsed().as_millis()),
    );
    match witness {
        None => Ok((report, EXIT_OK)),
        Some(verdict) => {
            report.push(
                Record::new("witness")
                    .field("firm_assignment", &verdict.general.firms)
                    .field("assignment", &verdict.general.workers)
                    .field("deviator", verdict.deviator)
                    .field("report", verdict.report)
                    .field("matching", &verdict.induced)
                    .field("outcome", verdict.outcome),
            );
            Ok((report, EXIT_REFUTED))
        }
    }
}

/// Sweep configuration: inclusive ranges, a mechanism list, and guardrails.
#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub min_n: usize,
    pub max_n: usize,
    pub min_l: Option<usize>,
    pub max_l: usize,
    pub mechanisms: Vec<Announcer>,
    pub policy: InfoPolicy,
    pub regime: Regime,
    pub force: bool,
    pub quantify_over_positions: bool,
}

/// One row per (n, L, mechanism): certified or refuted, with timing.
pub fn run_sweep(opts: &SweepOptions) -> Result<(Report, i32), ScenarioError> {
    if !opts.force && (opts.max_n > 5 || opts.max_l > 8) {
        return Err(ScenarioError::Invalid(format!(
            "sweep guardrail: n <= 5 and l <= 8 (requested n <= {}, l <= {}); pass --force to override",
            opts.max_n, opts.max_l
        )));
    }
    if opts.min_n < 1 || opts.min_n > opts.max_n {
        return Err(ScenarioError::Invalid(format!(
            "empty sweep range: n in {}..={}",
            opts.min_n, opts.max_n
        )));
    }
    let mut report = Report::new();
    let start = Instant::now();
    let mut rows = 0usize;
    let mut refuted_rows = 0usize;
    for n in opts.min_n..=opts.max_n {
        let first_l = opts.min_l.unwrap_or(n + 1).max(n + 1);
        for l in first_l..=opts.max_l {
            let universe = Universe::build(&TypeSpace::with_len(l), n)
                .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
            for &announcer in &opts.mechanisms {
                let mech = MechanismSpec::with_identity(announcer, n, opts.regime);
                let row_start = Instant::now();
                let result = if opts.quantify_over_positions {
                    let (plan, _) = verify_ic_quantified(&mech, &opts.policy, &universe)
                        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
                    plan.is_none()
                } else {
                    verify_ic(&mech, &opts.policy, &universe)
                        .map_err(|e| ScenarioError::Invalid(e.to_string()))?
                        .certification
                        .is_certified()
                };
                rows += 1;
                if !result {
                    refuted_rows += 1;
                }
                report.push(
                    Record::new("row")
                        .field("n", n)
                        .field("l", l)
                        .field("mechanism", announcer)
                        .field("policy", &opts.policy)
                        .field("regime", opts.regime)
                        .field("result", if result { "certified" } else { "refuted" })
                        .field("elapsed_ms", row_start.elapsed().as_millis()),
                );
            }
        }
    }
    report.push(
        Record::new("sweep")
            .field("rows", rows)
            .field("refuted", refuted_rows)
            .field("elapsed_ms", start.elapsed().as_millis()),
    );
    let exit = if refuted_rows == 0 {
        EXIT_OK
    } else {
        EXIT_REFUTED
    };
    Ok((report, exit))
}

/// The bundled scenario identifiers.
pub const REPRODUCE_IDS: &[&str] = &["ex1", "ex2", "ex3", "ex4", "prop1", "prop3", "ex6"];

/// Runs a bundled scenario and asserts its expected conclusion; exits 0 on a
/// match and 1 on a mismatch.
pub fn run_reproduce(id: &str) -> Result<(Report, i32), ScenarioError> {
    match id {
        "ex1" => reproduce_ex1(),
        "ex2" => reproduce_ex2(),
        "ex3" => reproduce_ex3(),
        "ex4" => reproduce_ex4(),
        "prop1" => reproduce_prop1(),
        "prop3" => reproduce_prop3(),
        "ex6" => reproduce_ex6(),
        other => Err(ScenarioError::Invalid(format!(
            "unknown reproduce id `{other}` (known: {})",
            REPRODUCE_IDS.join(", ")
        ))),
    }
}

fn golden(id: &str, description: &str, expect: &str, got: &str) -> (Record, bool) {
    let matched = expect == got;
    (
        Record::new("golden")
            .field("id", id.to_string())
            .field("description", description.to_string())
            .field("expect", expect.to_string())
            .field("got", got.to_string())
            .field("match", matched),
        matched,
    )
}

fn exit_of(all_matched: bool) -> i32 {
    if all_matched {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}

/// Without announcements, the second-ranked worker's overbid succeeds and the
/// verifier refutes the mechanism.
fn reproduce_ex1() -> Result<(Report, i32), ScenarioError> {
    let universe = Universe::build(&TypeSpace::with_len(4), 3)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mech = MechanismSpec::with_identity(Announcer::Empty, 3, Regime::Injective);
    let run = verify_ic(&mech, &InfoPolicy::Minimal, &universe)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mut report = Report::new();
    let mut ok = true;
    let (rec, matched) = golden(
        "ex1",
        "empty_announcements_refuted",
        "refuted",
        verdict_result(&run),
    );
    ok &= matched;
    report.push(rec);
    if let Some(witness) = run.certification.witness() {
        let position = assort_core::position(&witness.assignment, witness.deviator).unwrap();
        let swaps =
            assort_core::leapfrog_count(&witness.assignment, witness.deviator, witness.report)
                .unwrap();
        let (rec, matched) = golden(
            "ex1",
            "witness_is_a_second_position_swap1_overbid",
            "position=2,swaps=1",
            &format!("position={position},swaps={swaps}"),
        );
        ok &= matched;
        report.push(rec);
        report.push(witness_record(&universe, witness, None));
    } else {
        ok = false;
    }
    Ok((report, exit_of(ok)))
}

/// Under public reports with rationalizable updating, the same overbid is
/// blocked by the top firm and the displaced worker.
fn reproduce_ex2() -> Result<(Report, i32), ScenarioError> {
    let universe = Universe::build(&TypeSpace::with_len(4), 3)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mech = MechanismSpec::with_identity(Announcer::InformativePublic, 3, Regime::Injective);
    let w = TypeAssignment::from_ranks(&[2, 3, 4]).unwrap();
    let verdict = evaluate_misreport(
        &mech,
        &InfoPolicy::Rationalizable,
        &universe,
        &w,
        WorkerId::from_index(1),
        WorkerType::from_rank(1),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mut report = Report::new();
    let (rec, ok) = golden(
        "ex2",
        "overbid_blocked_by_top_firm_and_displaced_worker",
        "blocked(i1,j1)",
        &verdict.outcome.to_string(),
    );
    report.push(rec);
    report.push(witness_record(&universe, &verdict, None));
    Ok((report, exit_of(ok)))
}

/// A scripted information structure that ignores announcements violates the
/// payoff-relevance bound and lets the overbid through.
fn reproduce_ex3() -> Result<(Report, i32), ScenarioError> {
    let universe = Universe::build(&TypeSpace::with_len(4), 2)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let script = overconfident_top_firm_script(&universe);
    let policy = InfoPolicy::Pathological(script);
    let mech = MechanismSpec::with_identity(Announcer::InformativePublic, 2, Regime::Injective);
    let w = TypeAssignment::from_ranks(&[2, 3]).unwrap();
    let verdict = evaluate_misreport(
        &mech,
        &policy,
        &universe,
        &w,
        WorkerId::from_index(1),
        WorkerType::from_rank(1),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mut report = Report::new();
    let mut ok = true;
    let (rec, matched) = golden(
        "ex3",
        "overbid_succeeds_under_scripted_beliefs",
        "successful",
        &verdict.outcome.to_string(),
    );
    ok &= matched;
    report.push(rec);
    report.push(witness_record(&universe, &verdict, None));
    let nt = check_assumption_nt(&policy, &mech, &universe)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (rec, matched) = golden(
        "ex3",
        "nontrivial_updating_violated",
        "violated",
        if nt.holds() { "holds" } else { "violated" },
    );
    ok &= matched;
    report.push(rec);
    let canonical = NtViolation {
        assignment: w.clone(),
        deviator: WorkerId::from_index(1),
        report: WorkerType::from_rank(1),
        firm: FirmId::from_index(0),
    };
    let (rec, matched) = golden(
        "ex3",
        "canonical_violation_witness_reported",
        "present",
        if nt.violations.contains(&canonical) {
            "present"
        } else {
            "absent"
        },
    );
    ok &= matched;
    report.push(rec);
    for violation in &nt.violations {
        report.push(
            Record::new("nt_witness")
                .field("assignment", &violation.assignment)
                .field("deviator", violation.deviator)
                .field("report", violation.report)
                .field("firm", violation.firm),
        );
    }
    Ok((report, exit_of(ok)))
}

/// The third-ranked worker's swap-1 and swap-2 manipulations are both
/// blocked under public reports.
fn reproduce_ex4() -> Result<(Report, i32), ScenarioError> {
    let universe = Universe::build(&TypeSpace::with_len(5), 3)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mech = MechanismSpec::with_identity(Announcer::InformativePublic, 3, Regime::Injective);
    let policy = InfoPolicy::Rationalizable;
    let w = TypeAssignment::from_ranks(&[2, 4, 5]).unwrap();
    let deviator = WorkerId::from_index(2);
    let mut report = Report::new();
    let mut ok = true;

    let swap1 = evaluate_misreport(
        &mech,
        &policy,
        &universe,
        &w,
        deviator,
        WorkerType::from_rank(3),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (rec, matched) = golden(
        "ex4",
        "swap1_blocked_by_the_bypassed_firm",
        "blocked(i2,j2)",
        &swap1.outcome.to_string(),
    );
    ok &= matched;
    report.push(rec);
    report.push(witness_record(&universe, &swap1, None));

    let (swap2, state) = deviation_state(
        &mech,
        &policy,
        &universe,
        &w,
        deviator,
        WorkerType::from_rank(1),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (rec, matched) = golden(
        "ex4",
        "swap2_blocked_by_the_top_firm",
        "blocked(i1,j1)",
        &swap2.outcome.to_string(),
    );
    ok &= matched;
    report.push(rec);
    // the displaced runner-up also blocks the same state
    let runner_up_blocks = blocks(
        FirmId::from_index(0),
        WorkerId::from_index(1),
        &state,
        &universe,
    );
    let (rec, matched) = golden(
        "ex4",
        "top_firm_also_blocks_with_the_runner_up",
        "true",
        &runner_up_blocks.to_string(),
    );
    ok &= matched;
    report.push(rec);
    report.push(witness_record(&universe, &swap2, Some(&state)));
    Ok((report, exit_of(ok)))
}

/// The closed-form stability criterion for minimally informative states
/// agrees with the exhaustive blocking check.
fn reproduce_prop1() -> Result<(Report, i32), ScenarioError> {
    let mut report = Report::new();
    let mut ok = true;
    for n in [2usize, 3] {
        for l in [n + 1, n + 2] {
            let universe = Universe::build(&TypeSpace::with_len(l), n)
                .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
            let mut states = 0usize;
            let mut mismatches = 0usize;
            for w in universe.assignments() {
                for mu in assort_core::Matching::enumerate_perfect(n) {
                    let state = MatchingState::minimal(w.clone(), mu.clone(), &universe);
                    states += 1;
                    if is_stable(&state, &universe).is_stable()
                        != minimal_stability_criterion(w, &mu, &universe)
                    {
                        mismatches += 1;
                    }
                }
            }
            let (rec, matched) = golden(
                "prop1",
                &format!("criterion_matches_blocking_check_n{n}_l{l}"),
                "0",
                &mismatches.to_string(),
            );
            ok &= matched;
            report.push(rec.field("states", states));
        }
    }
    Ok((report, exit_of(ok)))
}

/// Revealing only the matched report is not enough at three workers: the
/// verifier refutes the mechanism and the canonical deviation survives with
/// its confounding assignment.
fn reproduce_prop3() -> Result<(Report, i32), ScenarioError> {
    let universe = Universe::build(&TypeSpace::with_len(7), 3)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mech = MechanismSpec::with_identity(Announcer::MatchedReport, 3, Regime::Injective);
    let policy = InfoPolicy::Rationalizable;
    let mut report = Report::new();
    let mut ok = true;
    let run =
        verify_ic(&mech, &policy, &universe).map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (rec, matched) = golden(
        "prop3",
        "matched_report_refuted",
        "refuted",
        verdict_result(&run),
    );
    ok &= matched;
    report.push(rec);
    let w = TypeAssignment::from_ranks(&[2, 4, 5]).unwrap();
    let (verdict, state) = deviation_state(
        &mech,
        &policy,
        &universe,
        &w,
        WorkerId::from_index(1),
        WorkerType::from_rank(1),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (rec, matched) = golden(
        "prop3",
        "canonical_deviation_successful",
        "successful",
        &verdict.outcome.to_string(),
    );
    ok &= matched;
    report.push(rec);
    let confound = TypeAssignment::from_ranks(&[5, 4, 3]).unwrap();
    let confound_present = universe
        .id_of(&confound)
        .map(|id| state.firm_info[0].contains(id as usize))
        .unwrap_or(false);
    let (rec, matched) = golden(
        "prop3",
        "confounding_assignment_survives_in_top_firm_beliefs",
        "present",
        if confound_present {
            "present"
        } else {
            "absent"
        },
    );
    ok &= matched;
    report.push(rec);
    report.push(witness_record(&universe, &verdict, Some(&state)));
    Ok((report, exit_of(ok)))
}

/// With private types on both sides, the overbid succeeds; collapsing the
/// worker-side uncertainty restores the block.
fn reproduce_ex6() -> Result<(Report, i32), ScenarioError> {
    let run = assort_core::canonical_counterexample()
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let mut report = Report::new();
    let mut ok = true;
    let (rec, matched) = golden(
        "ex6",
        "two_sided_overbid_successful",
        "successful",
        &run.verdict.outcome.to_string(),
    );
    ok &= matched;
    report.push(rec);
    report.push(
        Record::new("witness")
            .field("firm_assignment", &run.verdict.general.firms)
            .field("assignment", &run.verdict.general.workers)
            .field("deviator", run.verdict.deviator)
            .field("report", run.verdict.report)
            .field("matching", &run.verdict.induced)
            .field("outcome", run.verdict.outcome),
    );
    let (rec, matched) = golden(
        "ex6",
        "collapsed_worker_information_restores_the_block",
        "blocked(i1,j1)",
        &run.collapsed.outcome.to_string(),
    );
    ok &= matched;
    report.push(rec);
    Ok((report, exit_of(ok)))
}

/// Replays a refutation witness through the single-deviation evaluator;
/// used by tests and available to scripts for auditing reports.
pub fn replay_witness(
    sc: &Scenario,
    assignment: &[usize],
    deviator: usize,
    report_rank: usize,
) -> Result<Outcome, ScenarioError> {
    let market = Market::new(
        TypeSpace::with_len(sc.worker_types),
        assort_core::FirmRoster::with_len(sc.n),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let universe = market.universe();
    let policy = sc.build_policy(&universe)?;
    let mech = MechanismSpec::new(sc.mechanism, sc.tie_break_rule(), sc.regime);
    let w = TypeAssignment::from_ranks(assignment)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let verdict = evaluate_misreport(
        &mech,
        &policy,
        &universe,
        &w,
        WorkerId::from_index(deviator - 1),
        WorkerType::from_rank(report_rank),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    Ok(verdict.outcome)
}

/// All blocking pairs of the state induced by a fixed case, for stability
/// traces.
pub fn fixed_case_blocking_pairs(sc: &Scenario) -> Result<Vec<(FirmId, WorkerId)>, ScenarioError> {
    let fixed = sc
        .fixed
        .as_ref()
        .ok_or_else(|| ScenarioError::Invalid("scenario has no fixed case".into()))?;
    let market = Market::new(
        TypeSpace::with_len(sc.worker_types),
        assort_core::FirmRoster::with_len(sc.n),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let universe = market.universe();
    let policy = sc.build_policy(&universe)?;
    let mech = MechanismSpec::new(sc.mechanism, sc.tie_break_rule(), sc.regime);
    let w = TypeAssignment::from_ranks(&fixed.assignment)
        .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    let (_, state) = deviation_state(
        &mech,
        &policy,
        &universe,
        &w,
        WorkerId::from_index(fixed.deviator - 1),
        WorkerType::from_rank(fixed.report),
    )
    .map_err(|e| ScenarioError::Invalid(e.to_string()))?;
    Ok(blocking_pairs(&state, &universe))
}
