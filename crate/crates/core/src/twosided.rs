//! Private types on both sides of the market: general type assignments,
//! two-sided reports, the extended assortative mechanism with public report
//! announcements, and the counterexample showing it loses incentive
//! compatibility.
//!
//! The module targets scenario-level refutation: worker-side deviations at a
//! fixed or swept general assignment. Blocking is formalized symmetrically,
//! with certainty required on both sides of a candidate pair.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::IndexSet;
use crate::error::{Error, Result};
use crate::market::{FirmId, TieBreak, TypeAssignment, TypeSpace, Universe, WorkerId, WorkerType};
use crate::matching::Matching;
use crate::mechanism::Outcome;

/// A firm type, identified by rank in the firm scale (one-based; `s1` best).
/// Ordered like worker types: a smaller rank compares as greater.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FirmType {
    rank: u16,
}

impl FirmType {
    pub fn from_rank(rank: usize) -> Self {
        debug_assert!(rank >= 1);
        FirmType { rank: rank as u16 }
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }
}

impl PartialOrd for FirmType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FirmType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.rank.cmp(&self.rank)
    }
}

impl fmt::Display for FirmType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.rank)
    }
}

/// The ordered finite scale of possible firm types.
#[derive(Clone, Debug, PartialEq)]
pub struct FirmScale {
    magnitudes: Vec<f64>,
}

impl FirmScale {
    pub fn new(magnitudes: Vec<f64>) -> Result<Self> {
        let decreasing = magnitudes.windows(2).all(|w| w[0] > w[1]);
        let positive = magnitudes.iter().all(|&m| m.is_finite() && m > 0.0);
        if magnitudes.is_empty() || !decreasing || !positive {
            return Err(Error::InvalidScale);
        }
        Ok(FirmScale { magnitudes })
    }

    pub fn with_len(len: usize) -> Self {
        FirmScale {
            magnitudes: (0..len).map(|l| (len - l) as f64).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.magnitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magnitudes.is_empty()
    }

    pub fn types(&self) -> impl Iterator<Item = FirmType> {
        (1..=self.len()).map(FirmType::from_rank)
    }
}

/// An injective map from firms to firm types.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FirmAssignment {
    types: Vec<FirmType>,
}

impl FirmAssignment {
    pub fn new(types: Vec<FirmType>) -> Result<Self> {
        let mut seen = types.iter().map(|t| t.rank()).collect::<Vec<_>>();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidScale);
        }
        Ok(FirmAssignment { types })
    }

    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        FirmAssignment::new(ranks.iter().map(|&r| FirmType::from_rank(r)).collect())
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn type_of(&self, i: FirmId) -> FirmType {
        self.types[i.index()]
    }

    pub fn types(&self) -> &[FirmType] {
        &self.types
    }
}

impl fmt::Display for FirmAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.types.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// A general type assignment: both sides' types are private.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralAssignment {
    pub firms: FirmAssignment,
    pub workers: TypeAssignment,
}

/// Reports from both sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoSidedReport {
    pub firms: Vec<FirmType>,
    pub workers: Vec<WorkerType>,
}

impl TwoSidedReport {
    pub fn truthful(general: &GeneralAssignment) -> Self {
        TwoSidedReport {
            firms: general.firms.types().to_vec(),
            workers: general.workers.types().to_vec(),
        }
    }
}

/// A market with private types on both sides; both scales must exceed the
/// side size.
#[derive(Clone, Debug)]
pub struct TwoSidedMarket {
    worker_space: TypeSpace,
    firm_scale: FirmScale,
    n: usize,
}

impl TwoSidedMarket {
    pub fn new(n: usize, worker_space: TypeSpace, firm_scale: FirmScale) -> Result<Self> {
        if worker_space.len() <= n {
            return Err(Error::ScaleNotLargerThanMarket {
                workers: n,
                types: worker_space.len(),
            });
        }
        if firm_scale.len() <= n {
            return Err(Error::ScaleNotLargerThanMarket {
                workers: n,
                types: firm_scale.len(),
            });
        }
        Ok(TwoSidedMarket {
            worker_space,
            firm_scale,
            n,
        })
    }

    pub fn desk(n: usize, worker_types: usize, firm_types: usize) -> Result<Self> {
        TwoSidedMarket::new(
            n,
            TypeSpace::with_len(worker_types),
            FirmScale::with_len(firm_types),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn worker_space(&self) -> &TypeSpace {
        &self.worker_space
    }

    pub fn firm_scale(&self) -> &FirmScale {
        &self.firm_scale
    }

    pub fn worker_universe(&self) -> Result<Universe> {
        Universe::build(&self.worker_space, self.n)
    }

    pub fn firm_universe(&self) -> Result<FirmUniverse> {
        FirmUniverse::build(&self.firm_scale, self.n)
    }
}

/// The enumerated universe of firm-type assignments.
#[derive(Clone, Debug)]
pub struct FirmUniverse {
    n: usize,
    assignments: Vec<FirmAssignment>,
    index: HashMap<FirmAssignment, u32>,
}

impl FirmUniverse {
    pub fn build(scale: &FirmScale, n: usize) -> Result<Self> {
        if scale.len() < n {
            return Err(Error::TypeSpaceTooSmall {
                workers: n,
                types: scale.len(),
            });
        }
        let mut assignments = Vec::new();
        let mut used = vec![false; scale.len()];
        let mut current: Vec<FirmType> = Vec::with_capacity(n);
        fn recurse(
            depth: usize,
            n: usize,
            len: usize,
            used: &mut [bool],
            current: &mut Vec<FirmType>,
            out: &mut Vec<FirmAssignment>,
        ) {
            if depth == n {
                out.push(FirmAssignment {
                    types: current.clone(),
                });
                return;
            }
            for rank in 1..=len {
                if !used[rank - 1] {
                    used[rank - 1] = true;
                    current.push(FirmType::from_rank(rank));
                    recurse(depth + 1, n, len, used, current, out);
                    current.pop();
                    used[rank - 1] = false;
                }
            }
        }
        recurse(0, n, scale.len(), &mut used, &mut current, &mut assignments);
        let index = assignments
            .iter()
            .enumerate()
            .map(|(idx, f)| (f.clone(), idx as u32))
            .collect();
        Ok(FirmUniverse {
            n,
            assignments,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn assignments(&self) -> &[FirmAssignment] {
        &self.assignments
    }

    pub fn assignment(&self, id: u32) -> &FirmAssignment {
        &self.assignments[id as usize]
    }

    pub fn id_of(&self, f: &FirmAssignment) -> Option<u32> {
        self.index.get(f).copied()
    }
}

/// The assortative rule on two-sided reports: firms sorted by reported type,
/// workers sorted by reported type, ties on either side resolved by the
/// tie-breaking order applied to that side's indices, and the k-th firm
/// matched with the k-th worker.
pub fn two_sided_match(r: &TwoSidedReport, tau: &TieBreak) -> Matching {
    let n = r.firms.len();
    debug_assert_eq!(n, r.workers.len());
    let mut firm_order: Vec<usize> = (0..n).collect();
    firm_order.sort_by(|&a, &b| {
        r.firms[b]
            .cmp(&r.firms[a])
            .then_with(|| tau.ranks()[a].cmp(&tau.ranks()[b]))
    });
    let mut worker_order: Vec<usize> = (0..n).collect();
    worker_order.sort_by(|&a, &b| {
        r.workers[b]
            .cmp(&r.workers[a])
            .then_with(|| tau.ranks()[a].cmp(&tau.ranks()[b]))
    });
    let pairs: Vec<(FirmId, WorkerId)> = firm_order
        .into_iter()
        .zip(worker_order)
        .map(|(i, j)| (FirmId::from_index(i), WorkerId::from_index(j)))
        .collect();
    Matching::with_pairs(n, &pairs).expect("sorted sides pair bijectively")
}

/// Whether workers' firm-side information comes from the announced reports
/// or is collapsed to the realized firm types.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WorkerInfoMode {
    Inferred,
    Collapsed,
}

/// A two-sided matching state: firms hold candidate worker assignments,
/// workers hold candidate firm assignments.
#[derive(Clone, Debug)]
pub struct TwoSidedState {
    pub general: GeneralAssignment,
    pub matching: Matching,
    pub firm_info: Vec<IndexSet>,
    pub worker_info: Vec<IndexSet>,
}

/// Builds the state induced by a report profile under the extended
/// mechanism, which publishes all reported types on both sides.
///
/// Firms update as in the one-sided model: consistency with the observed
/// matched type, upward reporting, and the payoff-relevance bound upon
/// detecting the matched worker's upward misreport. Workers symmetrically
/// observe their matched firm's type and bound candidate firm types from
/// above by the announced firm reports.
pub fn build_two_sided_state(
    worker_universe: &Universe,
    firm_universe: &FirmUniverse,
    general: &GeneralAssignment,
    r: &TwoSidedReport,
    tau: &TieBreak,
    mode: WorkerInfoMode,
) -> TwoSidedState {
    let n = worker_universe.n();
    let matching = two_sided_match(r, tau);
    let lowest = worker_universe.lowest_type();
    let mut firm_info = Vec::with_capacity(n);
    for i in (0..n).map(FirmId::from_index) {
        let matched = matching.worker_of(i).expect("perfect");
        let observed = general.workers.type_of(matched);
        let reported = r.workers[matched.index()];
        let detected = reported > observed;
        let mut set = worker_universe.consistency_with(matched, observed).clone();
        set.retain(|idx| {
            let cand = worker_universe.assignment(idx as u32);
            for j in cand.workers() {
                if cand.type_of(j) > r.workers[j.index()] {
                    return false;
                }
            }
            if detected && observed > lowest {
                let leapfrogged = cand
                    .workers()
                    .filter(|&k| {
                        k != matched && cand.type_of(k) > observed && reported >= cand.type_of(k)
                    })
                    .count();
                if leapfrogged == 0 {
                    return false;
                }
            }
            true
        });
        firm_info.push(set);
    }
    let mut worker_info = Vec::with_capacity(n);
    for j in (0..n).map(WorkerId::from_index) {
        let matched = matching.firm_of(j).expect("perfect");
        let observed = general.firms.type_of(matched);
        let set = match mode {
            WorkerInfoMode::Collapsed => IndexSet::from_indices(
                firm_universe.len(),
                [firm_universe
                    .id_of(&general.firms)
                    .expect("realized firm assignment is in the universe")
                    as usize],
            ),
            WorkerInfoMode::Inferred => {
                let mut set = IndexSet::full(firm_universe.len());
                set.retain(|idx| {
                    let cand = firm_universe.assignment(idx as u32);
                    if cand.type_of(matched) != observed {
                        return false;
                    }
                    (0..firm_universe.n())
                        .map(FirmId::from_index)
                        .all(|i| r.firms[i.index()] >= cand.type_of(i))
                });
                set
            }
        };
        worker_info.push(set);
    }
    TwoSidedState {
        general: general.clone(),
        matching,
        firm_info,
        worker_info,
    }
}

/// Symmetric blocking: the worker must be certain, across her candidate firm
/// assignments, that firm `i` beats her current match, and the firm must be
/// certain, across its candidate worker assignments, that `j` beats its
/// current match.
pub fn two_sided_blocks(
    i: FirmId,
    j: WorkerId,
    state: &TwoSidedState,
    worker_universe: &Universe,
    firm_universe: &FirmUniverse,
) -> bool {
    if state.matching.worker_of(i) == Some(j) {
        return false;
    }
    let own_firm = state.matching.firm_of(j).expect("perfect");
    let worker_certain = state.worker_info[j.index()].iter().all(|idx| {
        let cand = firm_universe.assignment(idx as u32);
        cand.type_of(i) > cand.type_of(own_firm)
    });
    if !worker_certain {
        return false;
    }
    let own_worker = state.matching.worker_of(i).expect("perfect");
    state.firm_info[i.index()].iter().all(|idx| {
        let cand = worker_universe.assignment(idx as u32);
        cand.type_of(j) > cand.type_of(own_worker)
    })
}

/// First blocking pair in scan order (firms then workers by index), if any.
pub fn two_sided_stability(
    state: &TwoSidedState,
    worker_universe: &Universe,
    firm_universe: &FirmUniverse,
) -> Option<(FirmId, WorkerId)> {
    for i in (0..worker_universe.n()).map(FirmId::from_index) {
        for j in (0..worker_universe.n()).map(WorkerId::from_index) {
            if two_sided_blocks(i, j, state, worker_universe, firm_universe) {
                return Some((i, j));
            }
        }
    }
    None
}

/// A fully evaluated worker-side deviation in the two-sided model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoSidedVerdict {
    pub outcome: Outcome,
    pub general: GeneralAssignment,
    pub deviator: WorkerId,
    pub report: WorkerType,
    pub induced: Matching,
}

/// Evaluates a worker's misreport at a general assignment, firms reporting
/// truthfully and the other workers as well.
pub fn evaluate_worker_misreport(
    worker_universe: &Universe,
    firm_universe: &FirmUniverse,
    general: &GeneralAssignment,
    deviator: WorkerId,
    report: WorkerType,
    tau: &TieBreak,
    mode: WorkerInfoMode,
) -> Result<TwoSidedVerdict> {
    if report.rank() > worker_universe.type_count() {
        return Err(Error::TypeOutOfRange {
            rank: report.rank(),
            len: worker_universe.type_count(),
        });
    }
    general.workers.get(deviator)?;
    let truthful = TwoSidedReport::truthful(general);
    let mut reports = truthful.clone();
    reports.workers[deviator.index()] = report;
    let mu0 = two_sided_match(&truthful, tau);
    let mu1 = two_sided_match(&reports, tau);
    let old = general
        .firms
        .type_of(mu0.firm_of(deviator).expect("perfect"));
    let new = general
        .firms
        .type_of(mu1.firm_of(deviator).expect("perfect"));
    let outcome = if !(new > old) {
        Outcome::NotImproving
    } else {
        let state =
            build_two_sided_state(worker_universe, firm_universe, general, &reports, tau, mode);
        match two_sided_stability(&state, worker_universe, firm_universe) {
            Some((i, j)) => Outcome::Blocked(i, j),
            None => Outcome::Successful,
        }
    };
    Ok(TwoSidedVerdict {
        outcome,
        general: general.clone(),
        deviator,
        report,
        induced: mu1,
    })
}

/// Sweeps every general assignment and worker deviation; returns the first
/// successful manipulation, with the number of deviations evaluated.
pub fn verify_two_sided(
    market: &TwoSidedMarket,
    tau: &TieBreak,
    mode: WorkerInfoMode,
) -> Result<(Option<TwoSidedVerdict>, usize)> {
    let worker_universe = market.worker_universe()?;
    let firm_universe = market.firm_universe()?;
    let mut evaluated = 0usize;
    for firms in firm_universe.assignments() {
        for workers in worker_universe.assignments() {
            let general = GeneralAssignment {
                firms: firms.clone(),
                workers: workers.clone(),
            };
            for deviator in worker_universe.worker_ids() {
                for report in worker_universe.types() {
                    if report == workers.type_of(deviator) {
                        continue;
                    }
                    evaluated += 1;
                    let verdict = evaluate_worker_misreport(
                        &worker_universe,
                        &firm_universe,
                        &general,
                        deviator,
                        report,
                        tau,
                        mode,
                    )?;
                    if verdict.outcome.is_successful() {
                        return Ok((Some(verdict), evaluated));
                    }
                }
            }
        }
    }
    Ok((None, evaluated))
}

/// Both runs of the canonical two-sided counterexample: two firms of middle
/// types, two workers, the lower worker overbidding to the top.
#[derive(Clone, Debug)]
pub struct CounterexampleRun {
    /// The deviation with inferred worker-side information: successful.
    pub verdict: TwoSidedVerdict,
    /// The same deviation with worker information collapsed to the truth:
    /// blocked.
    pub collapsed: TwoSidedVerdict,
}

/// The canonical refutation of the extended mechanism: with both sides
/// private, the worker `j2` of type `t3` overbids to `t1` at firm types
/// `(s2, s3)` and worker types `(t2, t3)`, and no pair can block.
pub fn canonical_counterexample() -> Result<CounterexampleRun> {
    let market = TwoSidedMarket::desk(2, 4, 4)?;
    let worker_universe = market.worker_universe()?;
    let firm_universe = market.firm_universe()?;
    let general = GeneralAssignment {
        firms: FirmAssignment::from_ranks(&[2, 3])?,
        workers: TypeAssignment::from_ranks(&[2, 3])?,
    };
    let tau = TieBreak::identity(2);
    let deviator = WorkerId::from_index(1);
    let report = WorkerType::from_rank(1);
    let verdict = evaluate_worker_misreport(
        &worker_universe,
        &firm_universe,
        &general,
        deviator,
        report,
        &tau,
        WorkerInfoMode::Inferred,
    )?;
    let collapsed = evaluate_worker_misreport(
        &worker_universe,
        &firm_universe,
        &general,
        deviator,
        report,
        &tau,
        WorkerInfoMode::Collapsed,
    )?;
    Ok(CounterexampleRun { verdict, collapsed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::Regime;

    fn t(rank: usize) -> WorkerType {
        WorkerType::from_rank(rank)
    }

    fn s(rank: usize) -> FirmType {
        FirmType::from_rank(rank)
    }

    fn j(k: usize) -> WorkerId {
        WorkerId::from_index(k - 1)
    }

    fn i(k: usize) -> FirmId {
        FirmId::from_index(k - 1)
    }

    fn canonical_general() -> GeneralAssignment {
        GeneralAssignment {
            firms: FirmAssignment::from_ranks(&[2, 3]).unwrap(),
            workers: TypeAssignment::from_ranks(&[2, 3]).unwrap(),
        }
    }

    #[test]
    fn truthful_two_sided_match_is_assortative() {
        let general = canonical_general();
        let mu = two_sided_match(&TwoSidedReport::truthful(&general), &TieBreak::identity(2));
        assert_eq!(mu.worker_of(i(1)), Some(j(1)));
        assert_eq!(mu.worker_of(i(2)), Some(j(2)));
    }

    #[test]
    fn an_overbid_flips_the_pairing() {
        let general = canonical_general();
        let mut r = TwoSidedReport::truthful(&general);
        r.workers[1] = t(1);
        let mu = two_sided_match(&r, &TieBreak::identity(2));
        assert_eq!(mu.worker_of(i(1)), Some(j(2)));
        assert_eq!(mu.worker_of(i(2)), Some(j(1)));
    }

    #[test]
    fn single_pair_markets_have_a_unique_matching() {
        let r = TwoSidedReport {
            firms: vec![s(3)],
            workers: vec![t(2)],
        };
        let mu = two_sided_match(&r, &TieBreak::identity(1));
        assert_eq!(mu.worker_of(i(1)), Some(j(1)));
    }

    #[test]
    fn counterexample_deviation_succeeds() {
        let run = canonical_counterexample().unwrap();
        assert_eq!(run.verdict.outcome, Outcome::Successful);
        assert_eq!(run.collapsed.outcome, Outcome::Blocked(i(1), j(1)),);
    }

    #[test]
    fn counterexample_blocking_analysis() {
        let market = TwoSidedMarket::desk(2, 4, 4).unwrap();
        let worker_universe = market.worker_universe().unwrap();
        let firm_universe = market.firm_universe().unwrap();
        let general = canonical_general();
        let tau = TieBreak::identity(2);
        let mut r = TwoSidedReport::truthful(&general);
        r.workers[1] = t(1);
        let state = build_two_sided_state(
            &worker_universe,
            &firm_universe,
            &general,
            &r,
            &tau,
            WorkerInfoMode::Inferred,
        );
        // the displaced worker j1 cannot rule out that i1's true type is s4
        let has_low_top_firm = state.worker_info[0]
            .iter()
            .any(|idx| firm_universe.assignment(idx as u32).type_of(i(1)) == s(4));
        assert!(has_low_top_firm);
        assert!(!two_sided_blocks(
            i(1),
            j(1),
            &state,
            &worker_universe,
            &firm_universe
        ));
        // the deviator knows her matched firm's true type and that i2's
        // reported type bounds its true type from above
        assert!(!two_sided_blocks(
            i(2),
            j(2),
            &state,
            &worker_universe,
            &firm_universe
        ));
        assert_eq!(
            two_sided_stability(&state, &worker_universe, &firm_universe),
            None
        );
    }

    #[test]
    fn truthful_reports_never_improve() {
        let market = TwoSidedMarket::desk(2, 4, 4).unwrap();
        let worker_universe = market.worker_universe().unwrap();
        let firm_universe = market.firm_universe().unwrap();
        let general = canonical_general();
        let tau = TieBreak::identity(2);
        for deviator in worker_universe.worker_ids() {
            let own = general.workers.type_of(deviator);
            let verdict = evaluate_worker_misreport(
                &worker_universe,
                &firm_universe,
                &general,
                deviator,
                own,
                &tau,
                WorkerInfoMode::Inferred,
            )
            .unwrap();
            assert_eq!(verdict.outcome, Outcome::NotImproving);
        }
    }

    #[test]
    fn sweep_refutes_the_extended_mechanism() {
        let market = TwoSidedMarket::desk(2, 4, 4).unwrap();
        let (witness, _) =
            verify_two_sided(&market, &TieBreak::identity(2), WorkerInfoMode::Inferred).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn degenerates_to_the_one_sided_verifier() {
        // Firm reports forced truthful and worker firm-side information
        // collapsed to the truth: every worker deviation gets the same
        // outcome kind as in the one-sided model, for every monotone firm
        // assignment, and the same blocking pair once firms are relabeled by
        // their type order.
        let market = TwoSidedMarket::desk(2, 4, 4).unwrap();
        let worker_universe = market.worker_universe().unwrap();
        let firm_universe = market.firm_universe().unwrap();
        let tau = TieBreak::identity(2);
        let one_sided = crate::mechanism::MechanismSpec::with_identity(
            crate::mechanism::Announcer::InformativePublic,
            2,
            Regime::Injective,
        );
        for firms in firm_universe.assignments() {
            // relabeling map: two-sided firm index -> rank among true types
            let mut by_type: Vec<usize> = (0..2).collect();
            by_type.sort_by(|&a, &b| firms.types()[b].cmp(&firms.types()[a]));
            for workers in worker_universe.assignments() {
                let general = GeneralAssignment {
                    firms: firms.clone(),
                    workers: workers.clone(),
                };
                for deviator in worker_universe.worker_ids() {
                    for report in worker_universe.types() {
                        if report == workers.type_of(deviator) || workers.types().contains(&report)
                        {
                            continue;
                        }
                        let two = evaluate_worker_misreport(
                            &worker_universe,
                            &firm_universe,
                            &general,
                            deviator,
                            report,
                            &tau,
                            WorkerInfoMode::Collapsed,
                        )
                        .unwrap();
                        let one = crate::mechanism::evaluate_misreport(
                            &one_sided,
                            &crate::information::InfoPolicy::NontrivialOnly,
                            &worker_universe,
                            workers,
                            deviator,
                            report,
                        )
                        .unwrap();
                        match (two.outcome, one.outcome) {
                            (Outcome::NotImproving, Outcome::NotImproving) => {}
                            (Outcome::Successful, Outcome::Successful) => {}
                            (Outcome::Blocked(fi2, w2), Outcome::Blocked(fi1, w1)) => {
                                assert_eq!(w2, w1);
                                assert_eq!(by_type[fi1.index()], fi2.index());
                            }
                            (a, b) => panic!(
                                "two-sided {a:?} vs one-sided {b:?} at {workers} {firms} {deviator} {report}"
                            ),
                        }
                    }
                }
            }
        }
    }
}
