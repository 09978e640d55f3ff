//! Announcement rules, mechanism assembly, manipulation verdicts, and the
//! exhaustive incentive-compatibility verifier.
//!
//! The verifier sweeps deviator positions from 2 upward. Verdicts for a
//! position feed the rationalizable information constructor at higher
//! positions: once every swap class at a position is verified unsuccessful,
//! firms exclude candidate assignments in which a detected misreport would
//! fall in such a class.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::information::{payoff_relevant_set, Announcement, InfoPolicy};
use crate::market::{
    leapfrog_count, position, substitute, AssignmentId, FirmId, Regime, ReportProfile, TieBreak,
    TypeAssignment, Universe, WorkerId, WorkerType,
};
use crate::matching::{assortative_match, augment_reports, ExpandedTypeSpace, Matching};
use crate::stability::{is_stable, MatchingState, Stability};

/// The announcement rule of a mechanism.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Announcer {
    /// No announcements at all.
    Empty,
    /// The entire set of reported types, to every firm.
    InformativePublic,
    /// To each firm except the lowest: the reports weakly below its matched
    /// worker's report.
    LowerContour,
    /// To each firm except the lowest: its matched worker's report only.
    MatchedReport,
}

impl fmt::Display for Announcer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Announcer::Empty => write!(f, "empty"),
            Announcer::InformativePublic => write!(f, "informative_public"),
            Announcer::LowerContour => write!(f, "lower_contour"),
            Announcer::MatchedReport => write!(f, "matched_report"),
        }
    }
}

/// A matching mechanism: the assortative rule with a tie-breaking order,
/// an announcement rule, and the class of report profiles it accepts.
#[derive(Clone, Debug)]
pub struct MechanismSpec {
    pub announcer: Announcer,
    pub tie_break: TieBreak,
    pub regime: Regime,
}

impl MechanismSpec {
    pub fn new(announcer: Announcer, tie_break: TieBreak, regime: Regime) -> Self {
        MechanismSpec {
            announcer,
            tie_break,
            regime,
        }
    }

    /// The given announcer with the identity tie-break.
    pub fn with_identity(announcer: Announcer, n: usize, regime: Regime) -> Self {
        MechanismSpec::new(announcer, TieBreak::identity(n), regime)
    }
}

/// Per-firm announcement payloads; workers always receive the empty
/// announcement in the one-sided model.
#[derive(Clone, Debug, PartialEq)]
pub struct Announcements {
    firms: Vec<Announcement>,
}

impl Announcements {
    pub fn firm(&self, i: FirmId) -> &Announcement {
        &self.firms[i.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (FirmId, &Announcement)> {
        self.firms
            .iter()
            .enumerate()
            .map(|(k, a)| (FirmId::from_index(k), a))
    }
}

/// Evaluates the mechanism's announcement rule at a report profile.
pub fn announce(mech: &MechanismSpec, r: &ReportProfile) -> Announcements {
    let n = r.len();
    let last = FirmId::from_index(n - 1);
    let firms = (0..n)
        .map(FirmId::from_index)
        .map(|i| match mech.announcer {
            Announcer::Empty => Announcement::empty(),
            Announcer::InformativePublic => Announcement::from_types(r.reports().iter().copied()),
            Announcer::LowerContour => {
                if i == last {
                    Announcement::empty()
                } else {
                    let mu = assortative_match(r, &mech.tie_break);
                    let own = r.get(mu.worker_of(i).expect("perfect"));
                    Announcement::from_types(r.reports().iter().copied().filter(|&t| own >= t))
                }
            }
            Announcer::MatchedReport => {
                if i == last {
                    Announcement::empty()
                } else {
                    let mu = assortative_match(r, &mech.tie_break);
                    Announcement::from_types([r.get(mu.worker_of(i).expect("perfect"))])
                }
            }
        })
        .collect();
    Announcements { firms }
}

/// The number of workers an upward report `t` by `j` leapfrogs at `w`.
pub fn swap_count(w: &TypeAssignment, j: WorkerId, t: WorkerType) -> Result<usize> {
    let own = w.get(j)?;
    if t <= own {
        return Err(Error::NotUpwardMisreport {
            current: own,
            report: t,
        });
    }
    leapfrog_count(w, j, t)
}

/// The trichotomy for a single deviation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    /// The deviation does not land the worker a strictly better firm.
    NotImproving,
    /// The induced state is blocked by this pair.
    Blocked(FirmId, WorkerId),
    /// The deviation improves the match and the induced state is stable.
    Successful,
}

impl Outcome {
    pub fn is_successful(self) -> bool {
        matches!(self, Outcome::Successful)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::NotImproving => write!(f, "not_improving"),
            Outcome::Blocked(i, j) => write!(f, "blocked({i},{j})"),
            Outcome::Successful => write!(f, "successful"),
        }
    }
}

/// A fully evaluated deviation: outcome plus its context.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManipulationVerdict {
    pub outcome: Outcome,
    pub assignment: TypeAssignment,
    pub deviator: WorkerId,
    pub report: WorkerType,
    pub induced: Matching,
}

/// Manipulability classification of deviation classes, staged by deviator
/// position. A class `(position, swaps)` counts as classified once every
/// deviation at that position has been evaluated; `frontier` is the first
/// unclassified position.
#[derive(Clone, Debug)]
pub struct SwapCells {
    n: usize,
    frontier: usize,
    manipulable: Vec<bool>,
}

impl SwapCells {
    /// No classified positions.
    pub fn none(n: usize) -> Self {
        SwapCells {
            n,
            frontier: 2,
            manipulable: vec![false; n * n],
        }
    }

    /// The first position whose classes are not yet classified.
    pub fn frontier(&self) -> usize {
        self.frontier
    }

    pub fn cell_manipulable(&self, position: usize, swaps: usize) -> bool {
        debug_assert!(position >= 2 && position <= self.n);
        debug_assert!(swaps >= 1 && swaps < position);
        self.manipulable[(position - 1) * self.n + (swaps - 1)]
    }

    fn advance(&mut self, frontier: usize) {
        debug_assert!(frontier >= self.frontier);
        self.frontier = frontier;
    }

    fn mark(&mut self, position: usize, swaps: usize) {
        self.manipulable[(position - 1) * self.n + (swaps - 1)] = true;
    }
}

/// One evaluated deviation inside a staged sweep.
#[derive(Clone, Debug)]
pub(crate) struct CellRecord {
    pub assignment: AssignmentId,
    pub deviator: WorkerId,
    pub report: WorkerType,
    pub outcome: Outcome,
    pub swaps: usize,
    pub state_built: bool,
    pub tie_crosschecked: bool,
    pub nt_violations: Vec<FirmId>,
}

pub(crate) struct StageOpts {
    pub up_to_position: usize,
    pub stop_at_refutation: bool,
    pub check_nt: bool,
}

pub(crate) struct StagedRun {
    pub records: Vec<CellRecord>,
    pub cells: SwapCells,
}

/// Sweeps deviator positions `2..=up_to_position` in order. Within a stage
/// the cells are independent and evaluated in parallel; the stage's verdicts
/// are merged into the classification table in a single-writer post-pass, in
/// deterministic order.
pub(crate) fn run_stages(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
    opts: StageOpts,
) -> Result<StagedRun> {
    let n = universe.n();
    let mut cells = SwapCells::none(n);
    let mut records: Vec<CellRecord> = Vec::new();
    for stage in 2..=opts.up_to_position.min(n) {
        cells.advance(stage);
        let mut stage_cells: Vec<(AssignmentId, WorkerId, WorkerType)> = Vec::new();
        for (idx, w) in universe.assignments().iter().enumerate() {
            let id = idx as AssignmentId;
            let deviator = universe
                .worker_ids()
                .find(|&j| universe.position_of(id, j) == stage)
                .expect("positions are a bijection");
            for t in universe.types() {
                if t == w.type_of(deviator) {
                    continue;
                }
                if mech.regime == Regime::Injective && w.types().contains(&t) {
                    continue;
                }
                stage_cells.push((id, deviator, t));
            }
        }
        let stage_records: Vec<Result<CellRecord>> = stage_cells
            .par_iter()
            .map(|&(id, j, t)| {
                evaluate_cell(mech, policy, universe, id, j, t, &cells, opts.check_nt)
            })
            .collect();
        let mut refuted = false;
        for record in stage_records {
            let record = record?;
            if record.outcome.is_successful() {
                cells.mark(stage, record.swaps);
                refuted = true;
            }
            records.push(record);
        }
        if refuted && opts.stop_at_refutation {
            break;
        }
    }
    Ok(StagedRun { records, cells })
}

/// Evaluates one deviation against the classification table of the lower
/// positions.
#[allow(clippy::too_many_arguments)]
fn evaluate_cell(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
    id: AssignmentId,
    deviator: WorkerId,
    report: WorkerType,
    cells: &SwapCells,
    check_nt: bool,
) -> Result<CellRecord> {
    let w = universe.assignment(id);
    let truthful = ReportProfile::truthful(w);
    let r = substitute(w, deviator, report)?;
    let mu0 = assortative_match(&truthful, &mech.tie_break);
    let mu1 = assortative_match(&r, &mech.tie_break);
    let mut tie_crosschecked = false;
    if !r.is_injective() {
        crosscheck_tie_pairing(mech, universe, &r, &mu1);
        tie_crosschecked = true;
    }
    let improving = mu1
        .firm_of(deviator)
        .expect("perfect")
        .beats(mu0.firm_of(deviator));
    let swaps = leapfrog_count(w, deviator, report)?;
    if !improving && !check_nt {
        return Ok(CellRecord {
            assignment: id,
            deviator,
            report,
            outcome: Outcome::NotImproving,
            swaps,
            state_built: false,
            tie_crosschecked,
            nt_violations: Vec::new(),
        });
    }
    let state = MatchingState::with_policy(policy, mech, universe, w.clone(), &r, cells)?;
    let nt_violations = if check_nt {
        nt_violations_of(mech, universe, &state, &r)
    } else {
        Vec::new()
    };
    let outcome = if !improving {
        Outcome::NotImproving
    } else {
        match is_stable(&state, universe) {
            Stability::Stable => Outcome::Successful,
            Stability::Blocked(i, j) => Outcome::Blocked(i, j),
        }
    };
    Ok(CellRecord {
        assignment: id,
        deviator,
        report,
        outcome,
        swaps,
        state_built: true,
        tie_crosschecked,
        nt_violations,
    })
}

/// Double-entry check on tie-broken matchings: the pairing computed by the
/// direct tie-broken sort must equal the pairing of the augmented (tie-free)
/// profile under the identity order.
fn crosscheck_tie_pairing(
    mech: &MechanismSpec,
    universe: &Universe,
    r: &ReportProfile,
    direct: &Matching,
) {
    let space = ExpandedTypeSpace::new(universe.type_count(), universe.n());
    let augmented = augment_reports(r, &mech.tie_break, &space)
        .expect("single deviations coincide at most pairwise");
    let reduced = assortative_match(&augmented, &TieBreak::identity(universe.n()));
    assert_eq!(
        direct, &reduced,
        "tie-broken pairing diverged from the augmented-profile pairing at {r}"
    );
}

/// Firms whose built set escapes the payoff-relevant bound while the
/// nontrivial-updating trigger holds.
fn nt_violations_of(
    mech: &MechanismSpec,
    universe: &Universe,
    state: &MatchingState,
    r: &ReportProfile,
) -> Vec<FirmId> {
    let mut out = Vec::new();
    let last = universe.last_firm();
    for i in universe.firm_ids() {
        if i == last {
            continue;
        }
        let matched = match state.matching.worker_of(i) {
            Some(j) => j,
            None => continue,
        };
        let observed = state.assignment.type_of(matched);
        let rep = r.get(matched);
        let revealed = announce(mech, r).firm(i).contains(rep);
        if !revealed || rep <= observed || observed <= universe.lowest_type() {
            continue;
        }
        let bound = payoff_relevant_set(observed, rep, matched, universe)
            .expect("detected misreports are upward");
        if !state.firm_info[i.index()].is_subset_of(&bound) {
            out.push(i);
        }
    }
    out
}

/// Verification statistics for reporting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyStats {
    pub assignments: usize,
    pub deviations: usize,
    pub states_built: usize,
    pub tie_crosschecks: usize,
}

/// The verifier's result: a certificate of incentive compatibility, or the
/// first successful manipulation in deterministic order (assignment, then
/// deviator, then report from the top of the scale down), found at the
/// lowest refuted position.
#[derive(Clone, Debug)]
pub enum Certification {
    Certified,
    Refuted(ManipulationVerdict),
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified)
    }

    pub fn witness(&self) -> Option<&ManipulationVerdict> {
        match self {
            Certification::Certified => None,
            Certification::Refuted(v) => Some(v),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyRun {
    pub certification: Certification,
    pub stats: VerifyStats,
}

fn stats_of(universe: &Universe, records: &[CellRecord]) -> VerifyStats {
    VerifyStats {
        assignments: universe.len(),
        deviations: records.len(),
        states_built: records.iter().filter(|r| r.state_built).count(),
        tie_crosschecks: records.iter().filter(|r| r.tie_crosschecked).count(),
    }
}

fn verdict_of(
    universe: &Universe,
    mech: &MechanismSpec,
    record: &CellRecord,
) -> ManipulationVerdict {
    let w = universe.assignment(record.assignment).clone();
    let r = substitute(&w, record.deviator, record.report).expect("record is well-formed");
    let induced = assortative_match(&r, &mech.tie_break);
    ManipulationVerdict {
        outcome: record.outcome,
        assignment: w,
        deviator: record.deviator,
        report: record.report,
        induced,
    }
}

/// Exhaustively verifies incentive compatibility of the mechanism under the
/// given information policy.
pub fn verify_ic(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
) -> Result<VerifyRun> {
    let run = run_stages(
        mech,
        policy,
        universe,
        StageOpts {
            up_to_position: universe.n(),
            stop_at_refutation: true,
            check_nt: false,
        },
    )?;
    let stats = stats_of(universe, &run.records);
    let witness = run
        .records
        .iter()
        .find(|rec| rec.outcome.is_successful())
        .map(|rec| verdict_of(universe, mech, rec));
    Ok(VerifyRun {
        certification: match witness {
            Some(v) => Certification::Refuted(v),
            None => Certification::Certified,
        },
        stats,
    })
}

/// [`verify_ic`] specialized to the lower-contour announcer.
pub fn verify_lower_contour(
    universe: &Universe,
    policy: &InfoPolicy,
    tie_break: TieBreak,
    regime: Regime,
) -> Result<VerifyRun> {
    let mech = MechanismSpec::new(Announcer::LowerContour, tie_break, regime);
    verify_ic(&mech, policy, universe)
}

/// Evaluates a single misreport: `NotImproving` when the deviation does not
/// land a strictly better firm, otherwise `Blocked` with the first blocking
/// pair of the induced state, otherwise `Successful`.
///
/// Under the rationalizable policy the verdict classification for every
/// lower position is rebuilt first, so a verdict here replays exactly what
/// the exhaustive verifier concluded for the same deviation.
pub fn evaluate_misreport(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
    w: &TypeAssignment,
    deviator: WorkerId,
    report: WorkerType,
) -> Result<ManipulationVerdict> {
    let (record, _) = evaluate_with_context(mech, policy, universe, w, deviator, report)?;
    Ok(verdict_of(universe, mech, &record))
}

/// As [`evaluate_misreport`], but also returns the induced matching state,
/// for inspection of the firms' information sets.
pub fn deviation_state(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
    w: &TypeAssignment,
    deviator: WorkerId,
    report: WorkerType,
) -> Result<(ManipulationVerdict, MatchingState)> {
    let (record, state) = evaluate_with_context(mech, policy, universe, w, deviator, report)?;
    Ok((verdict_of(universe, mech, &record), state))
}

fn evaluate_with_context(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
    w: &TypeAssignment,
    deviator: WorkerId,
    report: WorkerType,
) -> Result<(CellRecord, MatchingState)> {
    if report.rank() > universe.type_count() {
        return Err(Error::TypeOutOfRange {
            rank: report.rank(),
            len: universe.type_count(),
        });
    }
    let own = w.get(deviator)?;
    if mech.regime == Regime::Injective && report != own && w.types().contains(&report) {
        return Err(Error::ReportNotAllowed {
            worker: deviator,
            report,
        });
    }
    let id = universe.id_of(w).ok_or(Error::TypeOutOfRange {
        rank: w.types().iter().map(|t| t.rank()).max().unwrap_or(0),
        len: universe.type_count(),
    })?;
    let p = position(w, deviator)?;
    let mut cells = if matches!(policy, InfoPolicy::Rationalizable) && p > 2 {
        run_stages(
            mech,
            policy,
            universe,
            StageOpts {
                up_to_position: p - 1,
                stop_at_refutation: false,
                check_nt: false,
            },
        )?
        .cells
    } else {
        SwapCells::none(universe.n())
    };
    cells.advance(p.max(2));
    let record = evaluate_cell(mech, policy, universe, id, deviator, report, &cells, false)?;
    let r = substitute(w, deviator, report)?;
    let state = MatchingState::with_policy(policy, mech, universe, w.clone(), &r, &cells)?;
    Ok((record, state))
}

/// One cell of the position/swap manipulability table.
#[derive(Clone, Debug)]
pub struct PositionSwapCell {
    pub position: usize,
    pub swaps: usize,
    pub manipulable: bool,
    pub witness: Option<ManipulationVerdict>,
}

/// The full position/swap table: for every position `p` and swap class
/// `k < p`, whether some deviator at position `p` has a successful swap-`k`
/// manipulation, with the first witness when one exists.
pub fn position_swap_report(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
) -> Result<Vec<PositionSwapCell>> {
    let run = run_stages(
        mech,
        policy,
        universe,
        StageOpts {
            up_to_position: universe.n(),
            stop_at_refutation: false,
            check_nt: false,
        },
    )?;
    let mut out = Vec::new();
    for p in 2..=universe.n() {
        for k in 1..=p - 1 {
            let witness = run
                .records
                .iter()
                .find(|rec| {
                    rec.outcome.is_successful()
                        && rec.swaps == k
                        && universe.position_of(rec.assignment, rec.deviator) == p
                })
                .map(|rec| verdict_of(universe, mech, rec));
            out.push(PositionSwapCell {
                position: p,
                swaps: k,
                manipulable: witness.is_some(),
                witness,
            });
        }
    }
    Ok(out)
}

/// A deviation plan quantified over every assignment giving the deviator her
/// own type: deviate only when no possible assignment leads to a blocked
/// state and at least one strictly improves the match.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DeviationPlan {
    pub deviator: WorkerId,
    pub own_type: WorkerType,
    pub report: WorkerType,
}

/// Verifies incentive compatibility under the position-quantified reading:
/// a plan refutes the mechanism only if it is safe at every assignment the
/// deviator deems possible.
pub fn verify_ic_quantified(
    mech: &MechanismSpec,
    policy: &InfoPolicy,
    universe: &Universe,
) -> Result<(Option<DeviationPlan>, VerifyStats)> {
    let run = run_stages(
        mech,
        policy,
        universe,
        StageOpts {
            up_to_position: universe.n(),
            stop_at_refutation: false,
            check_nt: false,
        },
    )?;
    let stats = stats_of(universe, &run.records);
    for deviator in universe.worker_ids() {
        for own in universe.types() {
            for report in universe.types() {
                if report <= own {
                    continue;
                }
                let relevant: Vec<&CellRecord> = run
                    .records
                    .iter()
                    .filter(|rec| {
                        rec.deviator == deviator
                            && rec.report == report
                            && universe.assignment(rec.assignment).type_of(deviator) == own
                    })
                    .collect();
                let improving = relevant
                    .iter()
                    .any(|rec| !matches!(rec.outcome, Outcome::NotImproving));
                let ever_blocked = relevant
                    .iter()
                    .any(|rec| matches!(rec.outcome, Outcome::Blocked(_, _)));
                if improving && !ever_blocked {
                    return Ok((
                        Some(DeviationPlan {
                            deviator,
                            own_type: own,
                            report,
                        }),
                        stats,
                    ));
                }
            }
        }
    }
    Ok((None, stats))
}
