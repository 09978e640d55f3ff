//! Matching states, individual rationality, blocking, and stability.

use crate::information::{build_information_set, consistency_set, InfoPolicy, InformationSet};
use crate::market::{AssignmentId, FirmId, ReportProfile, TypeAssignment, Universe, WorkerId};
use crate::matching::{assortative_match, Matching};
use crate::mechanism::{MechanismSpec, SwapCells};
use crate::Result;

/// A matching state: the realized assignment, the matching, and per-agent
/// information sets over the assignment universe.
///
/// Worker sets carry no announcement-driven refinement in the one-sided
/// model (workers receive empty announcements); they are kept for the
/// extension with private firm types.
#[derive(Clone, Debug)]
pub struct MatchingState {
    pub assignment: TypeAssignment,
    pub matching: Matching,
    pub firm_info: Vec<InformationSet>,
    pub worker_info: Vec<InformationSet>,
}

impl MatchingState {
    /// The minimally informative state: every firm knows exactly the type of
    /// its matched worker.
    pub fn minimal(assignment: TypeAssignment, matching: Matching, universe: &Universe) -> Self {
        let firm_info = universe
            .firm_ids()
            .map(|i| consistency_set(&assignment, &matching, i, universe))
            .collect();
        let worker_info = universe
            .worker_ids()
            .map(|j| universe.consistency_with(j, assignment.type_of(j)).clone())
            .collect();
        MatchingState {
            assignment,
            matching,
            firm_info,
            worker_info,
        }
    }

    /// The state induced by a report profile under a mechanism and an
    /// information policy. The matching is the assortative one on the
    /// reports; firm sets come from the policy, worker sets from their own
    /// type observation.
    pub fn with_policy(
        policy: &InfoPolicy,
        mech: &MechanismSpec,
        universe: &Universe,
        assignment: TypeAssignment,
        reports: &ReportProfile,
        cells: &SwapCells,
    ) -> Result<Self> {
        let matching = assortative_match(reports, &mech.tie_break);
        let firm_info = universe
            .firm_ids()
            .map(|i| build_information_set(policy, mech, universe, &assignment, reports, i, cells))
            .collect::<Result<Vec<_>>>()?;
        let worker_info = universe
            .worker_ids()
            .map(|j| universe.consistency_with(j, assignment.type_of(j)).clone())
            .collect();
        Ok(MatchingState {
            assignment,
            matching,
            firm_info,
            worker_info,
        })
    }

    /// Every agent weakly prefers its match to staying alone; with positive
    /// types this is exactly "everyone is matched".
    pub fn is_individually_rational(&self) -> bool {
        self.matching.is_perfect()
    }
}

/// Whether the pair `(i, j)` blocks the state: the worker strictly prefers
/// firm `i` to her current match (firm types are public), and firm `i` is
/// certain, across every assignment it deems possible, that `j` beats its
/// current match.
pub fn blocks(i: FirmId, j: WorkerId, state: &MatchingState, universe: &Universe) -> bool {
    if state.matching.worker_of(i) == Some(j) {
        return false;
    }
    if !i.beats(state.matching.firm_of(j)) {
        return false;
    }
    let own = state.matching.worker_of(i);
    let info = &state.firm_info[i.index()];
    if info.is_empty() {
        return false; // certainty needs at least one candidate world
    }
    info.iter().all(|idx| {
        let cand = universe.assignment(idx as AssignmentId);
        match own {
            Some(m) => cand.type_of(j) > cand.type_of(m),
            // an unmatched firm holds the type-0 option, which any worker beats
            None => true,
        }
    })
}

/// The stability verdict, with the lexicographically first blocking pair
/// (firms by descending type, then workers by index) as witness.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stability {
    Stable,
    Blocked(FirmId, WorkerId),
}

impl Stability {
    pub fn is_stable(self) -> bool {
        matches!(self, Stability::Stable)
    }

    pub fn witness(self) -> Option<(FirmId, WorkerId)> {
        match self {
            Stability::Stable => None,
            Stability::Blocked(i, j) => Some((i, j)),
        }
    }
}

pub fn is_stable(state: &MatchingState, universe: &Universe) -> Stability {
    for i in universe.firm_ids() {
        for j in universe.worker_ids() {
            if blocks(i, j, state, universe) {
                return Stability::Blocked(i, j);
            }
        }
    }
    Stability::Stable
}

/// Every blocking pair, in witness order.
pub fn blocking_pairs(state: &MatchingState, universe: &Universe) -> Vec<(FirmId, WorkerId)> {
    let mut out = Vec::new();
    for i in universe.firm_ids() {
        for j in universe.worker_ids() {
            if blocks(i, j, state, universe) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Closed-form stability criterion for minimally informative states: stable
/// exactly when the worker holding the lowest possible type, if present, is
/// matched to the lowest firm.
pub fn minimal_stability_criterion(w: &TypeAssignment, mu: &Matching, universe: &Universe) -> bool {
    match w.worker_with(universe.lowest_type()) {
        Some(j) => mu.firm_of(j) == Some(universe.last_firm()),
        None => true,
    }
}
