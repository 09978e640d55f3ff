//! Information sets, announcements, payoff-relevant assignment sets,
//! nontrivial updating, and the rationalizable information-structure
//! constructor used by the verifier.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bitset::IndexSet;
use crate::error::{Error, Result};
use crate::market::{
    AssignmentId, FirmId, ReportProfile, TypeAssignment, Universe, WorkerId, WorkerType,
};
use crate::matching::{assortative_match, Matching};
use crate::mechanism::{announce, Announcer, MechanismSpec, SwapCells};

/// A set of type assignments an agent deems possible.
pub type InformationSet = IndexSet;

/// An announcement payload: a finite set of worker-type values.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Announcement {
    payload: BTreeSet<WorkerType>,
}

impl Announcement {
    pub fn empty() -> Self {
        Announcement::default()
    }

    pub fn from_types(types: impl IntoIterator<Item = WorkerType>) -> Self {
        Announcement {
            payload: types.into_iter().collect(),
        }
    }

    pub fn contains(&self, t: WorkerType) -> bool {
        self.payload.contains(&t)
    }

    pub fn is_empty(&self) -> bool {
        self.payload.is_empty()
    }

    pub fn len(&self) -> usize {
        self.payload.len()
    }

    pub fn types(&self) -> impl Iterator<Item = WorkerType> + '_ {
        self.payload.iter().copied()
    }
}

impl fmt::Display for Announcement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, t) in self.payload.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}}")
    }
}

/// An explicit per-firm belief script: for a firm observing a given matched
/// worker of a given type, the exact list of assignments it deems possible.
/// Firms absent from the script fall back to the consistency set.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BeliefScript {
    entries: BTreeMap<(FirmId, WorkerId, usize), Vec<TypeAssignment>>,
}

impl BeliefScript {
    pub fn new() -> Self {
        BeliefScript::default()
    }

    pub fn insert(
        &mut self,
        firm: FirmId,
        matched: WorkerId,
        observed: WorkerType,
        candidates: Vec<TypeAssignment>,
    ) {
        self.entries
            .insert((firm, matched, observed.rank()), candidates);
    }

    pub fn scripts_firm(&self, firm: FirmId) -> bool {
        self.entries.keys().any(|(i, _, _)| *i == firm)
    }

    pub fn entry(
        &self,
        firm: FirmId,
        matched: WorkerId,
        observed: WorkerType,
    ) -> Option<&Vec<TypeAssignment>> {
        self.entries.get(&(firm, matched, observed.rank()))
    }
}

/// Selects which constructor builds the firms' information sets.
#[derive(Clone, Debug, PartialEq)]
pub enum InfoPolicy {
    /// Consistency with the observed matched type only.
    Minimal,
    /// Consistency, the upward-reporting axiom on inferable reports, and the
    /// payoff-relevance bound of nontrivial updating.
    NontrivialOnly,
    /// NontrivialOnly plus exclusion of candidates in which the detected
    /// misreport would fall in a deviation class already verified
    /// unsuccessful at strictly lower positions.
    Rationalizable,
    /// An explicit scripted information structure (used to exhibit failures
    /// of nontrivial updating).
    Pathological(BeliefScript),
}

impl fmt::Display for InfoPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfoPolicy::Minimal => write!(f, "minimal"),
            InfoPolicy::NontrivialOnly => write!(f, "nt_only"),
            InfoPolicy::Rationalizable => write!(f, "rationalizable"),
            InfoPolicy::Pathological(_) => write!(f, "pathological"),
        }
    }
}

/// The assignments consistent with what firm `i` observes: the type of its
/// matched worker. An unmatched firm observes nothing and the set
/// degenerates to the whole universe.
pub fn consistency_set(
    w: &TypeAssignment,
    mu: &Matching,
    i: FirmId,
    universe: &Universe,
) -> InformationSet {
    match mu.worker_of(i) {
        Some(j) => universe.consistency_with(j, w.type_of(j)).clone(),
        None => universe.full_set(),
    }
}

/// The assignments at which an upward misreport `rj` by worker `j` of type
/// `wj` could pay off: some other worker's type lies in `(wj, rj]`.
pub fn payoff_relevant_set(
    wj: WorkerType,
    rj: WorkerType,
    j: WorkerId,
    universe: &Universe,
) -> Result<IndexSet> {
    if rj <= wj {
        return Err(Error::NotUpwardMisreport {
            current: wj,
            report: rj,
        });
    }
    let mut set = universe.consistency_with(j, wj).clone();
    set.retain(|idx| {
        let cand = universe.assignment(idx as AssignmentId);
        cand.workers()
            .any(|k| k != j && cand.type_of(k) > wj && rj >= cand.type_of(k))
    });
    Ok(set)
}

/// The sub-profile of reports firm `i` can attribute to identified workers,
/// given the mechanism's announcement at `r` and the public matching.
///
/// The informative public rule reveals the whole profile; the lower-contour
/// rule reveals the reports weakly below the firm's matched report; the
/// matched-report rule reveals only the firm's own matched report; empty
/// announcements reveal nothing. The lowest firm receives nothing under the
/// private rules.
pub fn infer_reports(
    mech: &MechanismSpec,
    r: &ReportProfile,
    i: FirmId,
) -> BTreeMap<WorkerId, WorkerType> {
    let n = r.len();
    let mut out = BTreeMap::new();
    let last = FirmId::from_index(n - 1);
    match mech.announcer {
        Announcer::Empty => {}
        Announcer::InformativePublic => {
            for k in 0..n {
                let j = WorkerId::from_index(k);
                out.insert(j, r.get(j));
            }
        }
        Announcer::LowerContour => {
            if i != last {
                let mu = assortative_match(r, &mech.tie_break);
                let own = r.get(mu.worker_of(i).expect("assortative matching is perfect"));
                for k in 0..n {
                    let j = WorkerId::from_index(k);
                    if own >= r.get(j) {
                        out.insert(j, r.get(j));
                    }
                }
            }
        }
        Announcer::MatchedReport => {
            if i != last {
                let mu = assortative_match(r, &mech.tie_break);
                let j = mu.worker_of(i).expect("assortative matching is perfect");
                out.insert(j, r.get(j));
            }
        }
    }
    out
}

/// As [`infer_reports`], but validates a supplied payload against the one
/// the mechanism would have produced. A mismatch signals that the announcer
/// did not follow the committed rule.
pub fn infer_reports_checked(
    mech: &MechanismSpec,
    r: &ReportProfile,
    i: FirmId,
    payload: &Announcement,
) -> Result<BTreeMap<WorkerId, WorkerType>> {
    let expected = announce(mech, r);
    if expected.firm(i) != payload {
        return Err(Error::PayloadIntegrity);
    }
    Ok(infer_reports(mech, r, i))
}

/// Builds firm `i`'s information set for the state induced by `r` at the
/// realized assignment `w`.
///
/// `cells` carries the manipulability classification of deviation classes at
/// positions already verified; policies other than `Rationalizable` ignore
/// it.
pub fn build_information_set(
    policy: &InfoPolicy,
    mech: &MechanismSpec,
    universe: &Universe,
    w: &TypeAssignment,
    r: &ReportProfile,
    i: FirmId,
    cells: &SwapCells,
) -> Result<InformationSet> {
    let mu = assortative_match(r, &mech.tie_break);
    match policy {
        InfoPolicy::Minimal => Ok(consistency_set(w, &mu, i, universe)),
        InfoPolicy::Pathological(script) => scripted_set(script, universe, w, &mu, i),
        InfoPolicy::NontrivialOnly => Ok(filtered_set(mech, universe, w, r, &mu, i, cells, false)),
        InfoPolicy::Rationalizable => {
            let last = universe.last_firm();
            if mech.announcer == Announcer::MatchedReport && i != last {
                Ok(matched_report_projection(
                    mech, universe, w, r, &mu, i, cells,
                ))
            } else {
                Ok(filtered_set(mech, universe, w, r, &mu, i, cells, true))
            }
        }
    }
}

fn scripted_set(
    script: &BeliefScript,
    universe: &Universe,
    w: &TypeAssignment,
    mu: &Matching,
    i: FirmId,
) -> Result<InformationSet> {
    if !script.scripts_firm(i) {
        return Ok(consistency_set(w, mu, i, universe));
    }
    let matched = mu.worker_of(i).expect("assortative matching is perfect");
    let observed = w.type_of(matched);
    let candidates = script
        .entry(i, matched, observed)
        .ok_or(Error::ScriptMissingEntry {
            firm: i,
            worker: matched,
            observed,
        })?;
    if candidates.is_empty() {
        return Err(Error::ScriptInvalidEntry { firm: i });
    }
    let mut set = universe.empty_set();
    for cand in candidates {
        let idx = universe
            .id_of(cand)
            .ok_or(Error::ScriptInvalidEntry { firm: i })?;
        if cand.type_of(matched) != observed {
            return Err(Error::ScriptInvalidEntry { firm: i });
        }
        set.insert(idx as usize);
    }
    Ok(set)
}

/// Consistency, upward-reporting on inferable reports, the payoff-relevance
/// bound when the firm detects its matched worker's upward misreport, and,
/// when `rationalizable`, exclusion of candidates whose implied deviation
/// class is already verified unsuccessful at a lower position.
#[allow(clippy::too_many_arguments)]
fn filtered_set(
    mech: &MechanismSpec,
    universe: &Universe,
    w: &TypeAssignment,
    r: &ReportProfile,
    mu: &Matching,
    i: FirmId,
    cells: &SwapCells,
    rationalizable: bool,
) -> InformationSet {
    let matched = mu.worker_of(i).expect("assortative matching is perfect");
    let observed = w.type_of(matched);
    let inferable = infer_reports(mech, r, i);
    let detected = match inferable.get(&matched) {
        Some(&rep) if rep > observed => Some(rep),
        _ => None,
    };
    let nt_active =
        detected.is_some() && i != universe.last_firm() && observed > universe.lowest_type();
    let mut set = universe.consistency_with(matched, observed).clone();
    set.retain(|idx| {
        let cand = universe.assignment(idx as AssignmentId);
        for (&j, &rep) in &inferable {
            if cand.type_of(j) > rep {
                return false;
            }
        }
        if let Some(rep) = detected {
            let leapfrogged = cand
                .workers()
                .filter(|&k| k != matched && cand.type_of(k) > observed && rep >= cand.type_of(k))
                .count();
            if nt_active && leapfrogged == 0 {
                return false;
            }
            if rationalizable && leapfrogged >= 1 {
                let pos = universe.position_of(idx as AssignmentId, matched);
                if pos < cells.frontier() && !cells.cell_manipulable(pos, leapfrogged) {
                    return false;
                }
            }
        }
        true
    });
    set
}

/// Candidate space for the matched-report announcer: pairs of an assignment
/// and a report profile that reproduce everything the firm observes (the
/// matching, its matched worker's type and report), respect upward
/// reporting, and contain no deviation already verified pointless or
/// unsuccessful. More than one worker may misreport inside a candidate pair.
/// The result is the projection onto assignments.
fn matched_report_projection(
    mech: &MechanismSpec,
    universe: &Universe,
    w: &TypeAssignment,
    r: &ReportProfile,
    mu: &Matching,
    i: FirmId,
    cells: &SwapCells,
) -> InformationSet {
    let matched = mu.worker_of(i).expect("assortative matching is perfect");
    let observed = w.type_of(matched);
    let own_report = r.get(matched);
    let order: Vec<WorkerId> = universe
        .firm_ids()
        .map(|f| mu.worker_of(f).expect("perfect"))
        .collect();
    let mut projected = universe.empty_set();
    for idx in universe.consistency_with(matched, observed).clone().iter() {
        let cand = universe.assignment(idx as AssignmentId);
        if supporting_reports_exist(mech, universe, cand, &order, matched, own_report, cells) {
            projected.insert(idx);
        }
    }
    projected
}

/// Depth-first search for one report profile supporting the candidate
/// assignment: reports run weakly downward along the published matching
/// (ties ordered by the tie-break), the firm's own matched report is pinned,
/// every report is weakly above the candidate's true type, and no implied
/// misreport falls in a deviation class already classified unsuccessful.
/// The observed deviator additionally satisfies the payoff-relevance bound.
fn supporting_reports_exist(
    mech: &MechanismSpec,
    universe: &Universe,
    cand: &TypeAssignment,
    order: &[WorkerId],
    matched: WorkerId,
    own_report: WorkerType,
    cells: &SwapCells,
) -> bool {
    fn admissible(
        universe: &Universe,
        cand: &TypeAssignment,
        j: WorkerId,
        rep: WorkerType,
        matched: WorkerId,
        cells: &SwapCells,
    ) -> bool {
        let own = cand.type_of(j);
        if own > rep {
            return false; // upward reporting
        }
        if rep == own {
            return true; // truthful
        }
        let leapfrogged = cand
            .workers()
            .filter(|&k| k != j && cand.type_of(k) > own && rep >= cand.type_of(k))
            .count();
        let pos = cand.types().iter().filter(|&&t| t > own).count() + 1;
        if (2..cells.frontier()).contains(&pos)
            && (leapfrogged == 0 || !cells.cell_manipulable(pos, leapfrogged))
        {
            return false; // this deviation class is classified unsuccessful
        }
        if j == matched && leapfrogged == 0 && own > universe.lowest_type() {
            return false; // payoff-relevance bound on the detected misreport
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        mech: &MechanismSpec,
        universe: &Universe,
        cand: &TypeAssignment,
        order: &[WorkerId],
        matched: WorkerId,
        own_report: WorkerType,
        cells: &SwapCells,
        slot: usize,
        prev: Option<(WorkerId, WorkerType)>,
    ) -> bool {
        if slot == order.len() {
            return true;
        }
        let j = order[slot];
        let choices: Vec<WorkerType> = if j == matched {
            vec![own_report]
        } else {
            universe.types().collect()
        };
        for rep in choices {
            if let Some((prev_worker, prev_rep)) = prev {
                let ordered = prev_rep > rep
                    || (prev_rep == rep
                        && mech.regime == crate::market::Regime::Full
                        && mech.tie_break.precedes(prev_worker, j));
                if !ordered {
                    continue;
                }
            }
            if !admissible(universe, cand, j, rep, matched, cells) {
                continue;
            }
            if dfs(
                mech,
                universe,
                cand,
                order,
                matched,
                own_report,
                cells,
                slot + 1,
                Some((j, rep)),
            ) {
                return true;
            }
        }
        false
    }

    dfs(
        mech, universe, cand, order, matched, own_report, cells, 0, None,
    )
}

/// The scripted information structure used to exhibit a failure of
/// nontrivial updating in a two-worker market: the top firm always believes
/// its matched worker has the highest assigned type, except when the
/// observed type is the lowest in the scale, in which case every consistent
/// assignment stays (the other worker is above it regardless). Announcements
/// never refine these beliefs.
pub fn overconfident_top_firm_script(universe: &Universe) -> BeliefScript {
    let mut script = BeliefScript::new();
    let top = FirmId::from_index(0);
    let lowest = universe.lowest_type();
    for worker in universe.worker_ids() {
        for observed in universe.types() {
            let candidates: Vec<TypeAssignment> = universe
                .assignments()
                .iter()
                .filter(|cand| cand.type_of(worker) == observed)
                .filter(|cand| {
                    observed == lowest
                        || cand
                            .workers()
                            .all(|k| k == worker || cand.type_of(k) < observed)
                })
                .cloned()
                .collect();
            if !candidates.is_empty() {
                script.insert(top, worker, observed, candidates);
            }
        }
    }
    script
}

/// A context at which the payoff-relevance bound fails for some firm.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NtViolation {
    pub assignment: TypeAssignment,
    pub deviator: WorkerId,
    pub report: WorkerType,
    pub firm: FirmId,
}

/// Outcome of sweeping the nontrivial-updating condition over every
/// assignment, single upward deviation, and firm.
#[derive(Clone, Debug)]
pub struct NtCheck {
    pub violations: Vec<NtViolation>,
}

impl NtCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the nontrivial-updating bound for the information structure the
/// policy induces: whenever a firm other than the lowest sees its matched
/// worker's report, that report exceeds the observed type, and the observed
/// type is not the lowest possible, the built set must sit inside the
/// payoff-relevant set.
pub fn check_assumption_nt(
    policy: &InfoPolicy,
    mech: &MechanismSpec,
    universe: &Universe,
) -> Result<NtCheck> {
    let run = crate::mechanism::run_stages(
        mech,
        policy,
        universe,
        crate::mechanism::StageOpts {
            up_to_position: universe.n(),
            stop_at_refutation: false,
            check_nt: true,
        },
    )?;
    let mut violations = Vec::new();
    for record in &run.records {
        for &firm in &record.nt_violations {
            violations.push(NtViolation {
                assignment: universe.assignment(record.assignment).clone(),
                deviator: record.deviator,
                report: record.report,
                firm,
            });
        }
    }
    Ok(NtCheck { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::{substitute, Regime, TieBreak, TypeSpace};

    fn universe(n: usize, l: usize) -> Universe {
        Universe::build(&TypeSpace::with_len(l), n).unwrap()
    }

    fn w(ranks: &[usize]) -> TypeAssignment {
        TypeAssignment::from_ranks(ranks).unwrap()
    }

    fn t(rank: usize) -> WorkerType {
        WorkerType::from_rank(rank)
    }

    fn j(k: usize) -> WorkerId {
        WorkerId::from_index(k - 1)
    }

    fn i(k: usize) -> FirmId {
        FirmId::from_index(k - 1)
    }

    fn mech(announcer: Announcer, n: usize, regime: Regime) -> MechanismSpec {
        MechanismSpec::new(announcer, TieBreak::identity(n), regime)
    }

    #[test]
    fn consistency_fixes_one_slot() {
        // at L = n = 3, fixing one worker's type leaves the 2! arrangements
        let space = TypeSpace::with_len(3);
        let universe = Universe::build(&space, 3).unwrap();
        let a = w(&[1, 2, 3]);
        let mu = assortative_match(&ReportProfile::truthful(&a), &TieBreak::identity(3));
        for firm in universe.firm_ids() {
            assert_eq!(consistency_set(&a, &mu, firm, &universe).len(), 2);
        }
    }

    #[test]
    fn consistency_count_at_l4() {
        let universe = universe(3, 4);
        let a = w(&[1, 2, 3]);
        let mu = assortative_match(&ReportProfile::truthful(&a), &TieBreak::identity(3));
        let set = consistency_set(&a, &mu, i(2), &universe);
        // oracle: maps fixing w'(j2)=t2, others injective from the other 3 types
        let oracle = universe
            .assignments()
            .iter()
            .filter(|c| c.type_of(j(2)) == t(2))
            .count();
        assert_eq!(oracle, 6);
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn consistency_includes_an_assignment_with_the_matched_worker_on_top() {
        // the overbid scenario: i1 holds j2 and cannot rule out that j2 is
        // the highest type (the scale must leave two types below the
        // observed one for that to be expressible)
        let universe = universe(3, 5);
        let a = w(&[2, 3, 4]);
        let r = substitute(&a, j(2), t(1)).unwrap();
        let mu = assortative_match(&r, &TieBreak::identity(3));
        let set = consistency_set(&a, &mu, i(1), &universe);
        let has_top = set.iter().any(|idx| {
            let cand = universe.assignment(idx as AssignmentId);
            cand.workers()
                .all(|k| k == j(2) || cand.type_of(k) < cand.type_of(j(2)))
        });
        assert!(has_top);
    }

    #[test]
    fn unmatched_firms_learn_nothing() {
        let universe = universe(2, 4);
        let a = w(&[2, 3]);
        let empty = crate::Matching::unmatched(2);
        let set = consistency_set(&a, &empty, i(1), &universe);
        assert_eq!(set.len(), universe.len());
    }

    #[test]
    fn payoff_relevance_filters_by_the_open_interval() {
        // brute-force oracle at L=5: fixing w'(j2)=t3, reports up to t1
        let universe = universe(3, 5);
        let set = payoff_relevant_set(t(3), t(1), j(2), &universe).unwrap();
        let oracle: Vec<_> = universe
            .assignments()
            .iter()
            .filter(|c| {
                c.type_of(j(2)) == t(3)
                    && c.workers()
                        .any(|k| k != j(2) && c.type_of(k) > t(3) && t(1) >= c.type_of(k))
            })
            .collect();
        let fixing = universe
            .assignments()
            .iter()
            .filter(|c| c.type_of(j(2)) == t(3))
            .count();
        assert_eq!(fixing, 12);
        assert_eq!(oracle.len(), 10);
        assert_eq!(set.len(), 10);
    }

    #[test]
    fn payoff_relevance_at_l4_keeps_every_consistent_assignment() {
        // at L=4 and n=3 injectivity forces someone above t3 in every
        // candidate, so nothing is filtered
        let universe = universe(3, 4);
        let set = payoff_relevant_set(t(3), t(1), j(2), &universe).unwrap();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn payoff_relevance_needs_an_upward_report() {
        let universe = universe(3, 4);
        assert!(payoff_relevant_set(t(2), t(2), j(1), &universe).is_err());
        assert!(payoff_relevant_set(t(1), t(2), j(1), &universe).is_err());
        // nothing sits above the top type in any candidate
        let above_top = universe
            .assignments()
            .iter()
            .filter(|c| c.type_of(j(1)) == t(1))
            .filter(|c| c.workers().any(|k| k != j(1) && c.type_of(k) > t(1)))
            .count();
        assert_eq!(above_top, 0);
    }

    #[test]
    fn inference_by_announcer() {
        let a = w(&[2, 3, 4]);
        let r = substitute(&a, j(2), t(1)).unwrap();
        // informative public: the whole profile, identities included
        let full = infer_reports(
            &mech(Announcer::InformativePublic, 3, Regime::Injective),
            &r,
            i(1),
        );
        assert_eq!(full.len(), 3);
        assert_eq!(full[&j(2)], t(1));
        // matched report: only the firm's own worker
        let own = infer_reports(
            &mech(Announcer::MatchedReport, 3, Regime::Injective),
            &r,
            i(1),
        );
        assert_eq!(own.len(), 1);
        assert_eq!(own[&j(2)], t(1));
        // empty: nothing
        assert!(infer_reports(&mech(Announcer::Empty, 3, Regime::Injective), &r, i(1)).is_empty());
        // lower contour at the truthful profile: i2 sees {t2, t3} as reports
        // of j2 and j3; the last firm sees nothing
        let truthful = ReportProfile::truthful(&w(&[1, 2, 3]));
        let lc = infer_reports(
            &mech(Announcer::LowerContour, 3, Regime::Injective),
            &truthful,
            i(2),
        );
        assert_eq!(lc.len(), 2);
        assert_eq!(lc[&j(2)], t(2));
        assert_eq!(lc[&j(3)], t(3));
        assert!(infer_reports(
            &mech(Announcer::LowerContour, 3, Regime::Injective),
            &truthful,
            i(3)
        )
        .is_empty());
    }

    #[test]
    fn doctored_payloads_are_rejected() {
        let a = w(&[2, 3, 4]);
        let r = substitute(&a, j(2), t(1)).unwrap();
        let m = mech(Announcer::InformativePublic, 3, Regime::Injective);
        let good = announce(&m, &r);
        assert!(infer_reports_checked(&m, &r, i(1), good.firm(i(1))).is_ok());
        let doctored = Announcement::from_types([t(1), t(2)]);
        assert_eq!(
            infer_reports_checked(&m, &r, i(1), &doctored),
            Err(Error::PayloadIntegrity)
        );
    }

    #[test]
    fn rationalizable_overbid_beliefs_pin_the_runner_up() {
        // after j2's overbid at (t2,t3,t4), firm i1's candidates all place
        // j1 above the observed t3, enabling the block
        let universe = universe(3, 4);
        let a = w(&[2, 3, 4]);
        let r = substitute(&a, j(2), t(1)).unwrap();
        let m = mech(Announcer::InformativePublic, 3, Regime::Injective);
        let set = build_information_set(
            &InfoPolicy::Rationalizable,
            &m,
            &universe,
            &a,
            &r,
            i(1),
            &SwapCells::none(3),
        )
        .unwrap();
        assert!(!set.is_empty());
        for idx in set.iter() {
            let cand = universe.assignment(idx as AssignmentId);
            assert!(cand.type_of(j(1)) > cand.type_of(j(2)));
        }
        // the truth is among the candidates
        assert!(set.contains(universe.id_of(&a).unwrap() as usize));
    }

    #[test]
    fn scripted_beliefs_reproduce_the_pathological_structure() {
        // the scripted firm believes its matched worker is on top unless the
        // observed type is the lowest
        let universe = universe(2, 4);
        let script = overconfident_top_firm_script(&universe);
        let a = w(&[2, 3]);
        let r = substitute(&a, j(2), t(1)).unwrap();
        let m = mech(Announcer::InformativePublic, 2, Regime::Injective);
        let set = build_information_set(
            &InfoPolicy::Pathological(script),
            &m,
            &universe,
            &a,
            &r,
            i(1),
            &SwapCells::none(2),
        )
        .unwrap();
        let members: Vec<&TypeAssignment> = set
            .iter()
            .map(|idx| universe.assignment(idx as AssignmentId))
            .collect();
        assert_eq!(members, vec![&w(&[4, 3])]);
    }

    #[test]
    fn missing_script_entries_are_configuration_errors() {
        let universe = universe(2, 4);
        let mut script = BeliefScript::new();
        script.insert(i(1), j(2), t(3), vec![w(&[4, 3])]);
        let a = w(&[2, 4]);
        let r = substitute(&a, j(2), t(1)).unwrap();
        let m = mech(Announcer::InformativePublic, 2, Regime::Injective);
        let err = build_information_set(
            &InfoPolicy::Pathological(script),
            &m,
            &universe,
            &a,
            &r,
            i(1),
            &SwapCells::none(2),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ScriptMissingEntry { .. }));
    }
}
