//! Matchings and the assortative matching rule, plus the expanded-type
//! construction that reduces tie-broken matchings to tie-free ones.

use std::fmt;

use crate::error::{Error, Result};
use crate::market::{
    FirmId, FirmRoster, ReportProfile, TieBreak, TypeAssignment, WorkerId, WorkerType,
};

/// A matching: an involutive pairing of firms and workers in which unmatched
/// agents are paired with themselves (represented as `None`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matching {
    worker_of: Vec<Option<WorkerId>>,
    firm_of: Vec<Option<FirmId>>,
}

impl Matching {
    /// The empty matching on `n` firms and `n` workers.
    pub fn unmatched(n: usize) -> Self {
        Matching {
            worker_of: vec![None; n],
            firm_of: vec![None; n],
        }
    }

    /// A perfect matching given, per firm index, the matched worker.
    pub fn perfect(workers: Vec<WorkerId>) -> Result<Self> {
        let n = workers.len();
        let mut firm_of = vec![None; n];
        for (i, &j) in workers.iter().enumerate() {
            if j.index() >= n || firm_of[j.index()].is_some() {
                return Err(Error::SideSizeMismatch {
                    firms: n,
                    workers: n,
                });
            }
            firm_of[j.index()] = Some(FirmId::from_index(i));
        }
        Ok(Matching {
            worker_of: workers.into_iter().map(Some).collect(),
            firm_of,
        })
    }

    pub fn with_pairs(n: usize, pairs: &[(FirmId, WorkerId)]) -> Result<Self> {
        let mut m = Matching::unmatched(n);
        for &(i, j) in pairs {
            if i.index() >= n
                || j.index() >= n
                || m.worker_of[i.index()].is_some()
                || m.firm_of[j.index()].is_some()
            {
                return Err(Error::SideSizeMismatch {
                    firms: n,
                    workers: n,
                });
            }
            m.worker_of[i.index()] = Some(j);
            m.firm_of[j.index()] = Some(i);
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.worker_of.len()
    }

    pub fn worker_of(&self, i: FirmId) -> Option<WorkerId> {
        self.worker_of[i.index()]
    }

    pub fn firm_of(&self, j: WorkerId) -> Option<FirmId> {
        self.firm_of[j.index()]
    }

    pub fn is_perfect(&self) -> bool {
        self.worker_of.iter().all(|w| w.is_some())
    }

    /// Matched pairs in firm order.
    pub fn pairs(&self) -> impl Iterator<Item = (FirmId, WorkerId)> + '_ {
        self.worker_of
            .iter()
            .enumerate()
            .filter_map(|(i, j)| j.map(|j| (FirmId::from_index(i), j)))
    }

    /// All perfect matchings on `n` firms and workers, in lexicographic
    /// order of the per-firm worker vector.
    pub fn enumerate_perfect(n: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut current: Vec<WorkerId> = Vec::with_capacity(n);
        fn recurse(
            n: usize,
            used: &mut [bool],
            current: &mut Vec<WorkerId>,
            out: &mut Vec<Matching>,
        ) {
            if current.len() == n {
                out.push(Matching::perfect(current.clone()).expect("permutation"));
                return;
            }
            for idx in 0..n {
                if !used[idx] {
                    used[idx] = true;
                    current.push(WorkerId::from_index(idx));
                    recurse(n, used, current, out);
                    current.pop();
                    used[idx] = false;
                }
            }
        }
        recurse(n, &mut used, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// The assortative matching rule: workers sorted by reported type, ties
/// resolved by the tie-breaking order, and the k-th worker in that order
/// matched to the k-th firm.
pub fn assortative_match(reports: &ReportProfile, tau: &TieBreak) -> Matching {
    debug_assert_eq!(reports.len(), tau.len());
    let mut order: Vec<WorkerId> = (0..reports.len()).map(WorkerId::from_index).collect();
    order.sort_by(|&a, &b| {
        reports
            .get(b)
            .cmp(&reports.get(a))
            .then_with(|| tau.rank_of(a).cmp(&tau.rank_of(b)))
    });
    Matching::perfect(order).expect("sorted permutation")
}

/// Whether `mu` is assortative at `w`: higher firms hold higher-typed
/// workers, in both directions.
pub fn is_assortative_at(mu: &Matching, w: &TypeAssignment, roster: &FirmRoster) -> bool {
    debug_assert!(mu.is_perfect());
    let along_firms: Vec<WorkerType> = roster
        .firms()
        .filter_map(|i| mu.worker_of(i).map(|j| w.type_of(j)))
        .collect();
    along_firms.windows(2).all(|pair| pair[0] > pair[1])
}

/// The expanded type scale: each base type `t_l` splits into `n` copies
/// `t_{l,1} > ... > t_{l,n}`, every copy of a higher base type above every
/// copy of a lower one. Expanded types are ranks in `1..=L*n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpandedTypeSpace {
    base_len: usize,
    n: usize,
}

impl ExpandedTypeSpace {
    pub fn new(base_len: usize, n: usize) -> Self {
        ExpandedTypeSpace { base_len, n }
    }

    pub fn len(&self) -> usize {
        self.base_len * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The expanded type `t_{l,k}`.
    pub fn expand(&self, base: WorkerType, copy: usize) -> WorkerType {
        debug_assert!(copy >= 1 && copy <= self.n);
        WorkerType::from_rank((base.rank() - 1) * self.n + copy)
    }

    /// The base type a given expanded type is a copy of.
    pub fn base_of(&self, expanded: WorkerType) -> WorkerType {
        WorkerType::from_rank((expanded.rank() - 1) / self.n + 1)
    }
}

/// Maps `w` into the expanded scale: worker `j_k` of type `t_l` receives
/// `t_{l,tau(k)}`. Injective by construction and order-embedding on workers
/// with distinct base types.
pub fn expand_assignment(
    w: &TypeAssignment,
    tau: &TieBreak,
    space: &ExpandedTypeSpace,
) -> TypeAssignment {
    let types = w
        .workers()
        .map(|j| space.expand(w.type_of(j), tau.rank_of(j)))
        .collect();
    TypeAssignment::new(types).expect("expansion is injective")
}

/// Maps a report profile into the expanded scale the same way. The result is
/// injective, so the assortative rule on it needs no tie-breaking, and the
/// induced firm-worker pairing equals the tie-broken pairing on the base
/// profile. Rejects profiles with any three-way (or deeper) coincidence,
/// which single-deviation report profiles never produce.
pub fn augment_reports(
    reports: &ReportProfile,
    tau: &TieBreak,
    space: &ExpandedTypeSpace,
) -> Result<ReportProfile> {
    for &value in reports.reports() {
        let count = reports.reports().iter().filter(|&&x| x == value).count();
        if count > 2 {
            return Err(Error::ExcessiveCoincidence { value, count });
        }
    }
    let augmented = reports
        .reports()
        .iter()
        .enumerate()
        .map(|(k, &t)| space.expand(t, tau.rank_of(WorkerId::from_index(k))))
        .collect();
    Ok(ReportProfile::new(augmented))
}
