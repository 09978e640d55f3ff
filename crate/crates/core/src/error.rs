use thiserror::Error;

use crate::market::{FirmId, WorkerId, WorkerType};

/// Domain errors surfaced by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type space too small: {workers} workers need at least {workers} of {types} types")]
    TypeSpaceTooSmall { workers: usize, types: usize },
    #[error("market needs strictly more worker types than workers: n = {workers}, L = {types}")]
    ScaleNotLargerThanMarket { workers: usize, types: usize },
    #[error("scale magnitudes must be strictly decreasing and positive")]
    InvalidScale,
    #[error("unknown worker {0}")]
    UnknownWorker(WorkerId),
    #[error("type rank {rank} outside scale of {len} types")]
    TypeOutOfRange { rank: usize, len: usize },
    #[error("report {report} is not strictly above type {current}")]
    NotUpwardMisreport {
        current: WorkerType,
        report: WorkerType,
    },
    #[error("report {report} by {worker} collides with another report; not allowed here")]
    ReportNotAllowed {
        worker: WorkerId,
        report: WorkerType,
    },
    #[error("tie-break is not a permutation of 1..={0}")]
    InvalidTieBreak(usize),
    #[error("report {value} coincides {count} times; at most two-way coincidence is supported")]
    ExcessiveCoincidence { value: WorkerType, count: usize },
    #[error("announcement payload is inconsistent with the published matching")]
    PayloadIntegrity,
    #[error("belief script has no entry for firm {firm} observing {observed} on {worker}")]
    ScriptMissingEntry {
        firm: FirmId,
        worker: WorkerId,
        observed: WorkerType,
    },
    #[error("belief script entry for firm {firm} is empty or contradicts its observation")]
    ScriptInvalidEntry { firm: FirmId },
    #[error("expected equal side sizes, got {firms} firms and {workers} workers")]
    SideSizeMismatch { firms: usize, workers: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
