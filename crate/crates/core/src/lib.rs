//! Two-sided matching under one-sided incomplete information.
//!
//! Firms' types are commonly known; workers' types are private and observed
//! by a firm only for its own matched worker. A mechanism maps reported
//! types to the assortative matching plus per-firm announcements, and a
//! worker's misreport succeeds only when it improves her match *and* the
//! induced matching state has no blocking pair under the firms' updated
//! information sets.
//!
//! The crate models the market ([`market`]), the assortative rule and its
//! tie-breaking ([`matching`]), announcement-driven information sets
//! ([`information`]), blocking and stability ([`stability`]), and an
//! exhaustive incentive-compatibility verifier over desk-scale markets
//! ([`mechanism`]). [`twosided`] extends the model to private types on both
//! sides, where the verifier finds a counterexample.

pub mod bitset;
pub mod error;
pub mod information;
pub mod market;
pub mod matching;
pub mod mechanism;
pub mod stability;
pub mod twosided;

pub use bitset::IndexSet;
pub use error::{Error, Result};
pub use information::{
    build_information_set, check_assumption_nt, consistency_set, infer_reports,
    infer_reports_checked, overconfident_top_firm_script, payoff_relevant_set, Announcement,
    BeliefScript, InfoPolicy, InformationSet, NtCheck, NtViolation,
};
pub use market::{
    enumerate_assignments, leapfrog_count, position, substitute, AssignmentId, FirmId, FirmRoster,
    Market, Regime, ReportProfile, TieBreak, TypeAssignment, TypeSpace, Universe, WorkerId,
    WorkerType,
};
pub use matching::{
    assortative_match, augment_reports, expand_assignment, is_assortative_at, ExpandedTypeSpace,
    Matching,
};
pub use mechanism::{
    announce, deviation_state, evaluate_misreport, position_swap_report, swap_count, verify_ic,
    verify_ic_quantified, verify_lower_contour, Announcements, Announcer, Certification,
    DeviationPlan, ManipulationVerdict, MechanismSpec, Outcome, PositionSwapCell, SwapCells,
    VerifyRun, VerifyStats,
};
pub use stability::{
    blocking_pairs, blocks, is_stable, minimal_stability_criterion, MatchingState, Stability,
};
pub use twosided::{
    build_two_sided_state, canonical_counterexample, evaluate_worker_misreport, two_sided_blocks,
    two_sided_match, two_sided_stability, verify_two_sided, CounterexampleRun, FirmAssignment,
    FirmScale, FirmType, FirmUniverse, GeneralAssignment, TwoSidedMarket, TwoSidedReport,
    TwoSidedState, TwoSidedVerdict, WorkerInfoMode,
};
