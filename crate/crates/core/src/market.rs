//! Type scales, type assignments, report profiles, tie-breaking orders, and
//! the enumerated assignment universe.
//!
//! Workers and firms carry dense indices; `j1` is worker index 0, `i1` is the
//! firm of the highest type. Worker types are identified by their rank in the
//! ordered scale (`t1` is the best type); magnitudes exist for display only,
//! since every predicate in the model depends only on the order.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::IndexSet;
use crate::error::{Error, Result};

/// A worker, identified by index. Displayed one-based: `j1`, `j2`, ...
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WorkerId(usize);

impl WorkerId {
    pub fn from_index(index: usize) -> Self {
        WorkerId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn number(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for WorkerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j{}", self.number())
    }
}

/// A firm, identified by index. Firm types are commonly known and strictly
/// decreasing in the index, so `i1` (index 0) is the best firm.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FirmId(usize);

impl FirmId {
    pub fn from_index(index: usize) -> Self {
        FirmId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    /// One-based rank; rank 1 is the firm of the highest type.
    pub fn rank(self) -> usize {
        self.0 + 1
    }

    /// True when `self` has a strictly higher type than `other`, where `None`
    /// stands for the unmatched option of type 0.
    pub fn beats(self, other: Option<FirmId>) -> bool {
        match other {
            Some(o) => self.0 < o.0,
            None => true,
        }
    }
}

impl fmt::Display for FirmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i{}", self.rank())
    }
}

/// A worker type, identified by rank in the scale (one-based; `t1` best).
///
/// The ordering is the preference order over types: `t1 > t2 > ... > tL`,
/// i.e. a *smaller* rank compares as *greater*. This lets predicates read
/// like the model's inequalities.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WorkerType {
    rank: u16,
}

impl WorkerType {
    pub fn from_rank(rank: usize) -> Self {
        debug_assert!(rank >= 1);
        WorkerType { rank: rank as u16 }
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }
}

impl PartialOrd for WorkerType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WorkerType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.rank.cmp(&self.rank)
    }
}

impl fmt::Display for WorkerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.rank)
    }
}

/// The ordered finite scale of possible worker types.
#[derive(Clone, Debug, PartialEq)]
pub struct TypeSpace {
    magnitudes: Vec<f64>,
}

impl TypeSpace {
    /// Builds a scale from explicit quality magnitudes, highest first.
    pub fn new(magnitudes: Vec<f64>) -> Result<Self> {
        let decreasing = magnitudes.windows(2).all(|w| w[0] > w[1]);
        let positive = magnitudes.iter().all(|&m| m.is_finite() && m > 0.0);
        if magnitudes.is_empty() || !decreasing || !positive {
            return Err(Error::InvalidScale);
        }
        Ok(TypeSpace { magnitudes })
    }

    /// The default desk scale: `t_l` has magnitude `L + 1 - l`.
    pub fn with_len(len: usize) -> Self {
        TypeSpace {
            magnitudes: (0..len).map(|l| (len - l) as f64).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.magnitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magnitudes.is_empty()
    }

    pub fn types(&self) -> impl Iterator<Item = WorkerType> {
        (1..=self.len()).map(WorkerType::from_rank)
    }

    pub fn contains(&self, t: WorkerType) -> bool {
        t.rank() >= 1 && t.rank() <= self.len()
    }

    pub fn lowest(&self) -> WorkerType {
        WorkerType::from_rank(self.len())
    }

    pub fn magnitude(&self, t: WorkerType) -> f64 {
        self.magnitudes[t.rank() - 1]
    }

    /// Rank lookup by magnitude.
    pub fn rank_of(&self, magnitude: f64) -> Option<WorkerType> {
        self.magnitudes
            .iter()
            .position(|&m| m == magnitude)
            .map(|idx| WorkerType::from_rank(idx + 1))
    }
}

/// The commonly known firms `i1 ... in` with strictly decreasing types.
#[derive(Clone, Debug, PartialEq)]
pub struct FirmRoster {
    magnitudes: Vec<f64>,
}

impl FirmRoster {
    pub fn new(magnitudes: Vec<f64>) -> Result<Self> {
        let decreasing = magnitudes.windows(2).all(|w| w[0] > w[1]);
        let positive = magnitudes.iter().all(|&m| m.is_finite() && m > 0.0);
        if magnitudes.is_empty() || !decreasing || !positive {
            return Err(Error::InvalidScale);
        }
        Ok(FirmRoster { magnitudes })
    }

    /// The default desk roster: `s_l` has magnitude `n + 1 - l`.
    pub fn with_len(len: usize) -> Self {
        FirmRoster {
            magnitudes: (0..len).map(|l| (len - l) as f64).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.magnitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.magnitudes.is_empty()
    }

    pub fn firms(&self) -> impl Iterator<Item = FirmId> {
        (0..self.len()).map(FirmId::from_index)
    }

    pub fn last(&self) -> FirmId {
        FirmId::from_index(self.len() - 1)
    }

    pub fn magnitude(&self, i: FirmId) -> f64 {
        self.magnitudes[i.index()]
    }
}

/// A market: `n` firms, `n` workers, and a type scale with more types than
/// workers. Unequal side sizes are not part of the model and are rejected.
#[derive(Clone, Debug)]
pub struct Market {
    space: TypeSpace,
    roster: FirmRoster,
}

impl Market {
    pub fn new(space: TypeSpace, roster: FirmRoster) -> Result<Self> {
        if space.len() <= roster.len() {
            return Err(Error::ScaleNotLargerThanMarket {
                workers: roster.len(),
                types: space.len(),
            });
        }
        Ok(Market { space, roster })
    }

    /// Desk-scale market with default magnitudes.
    pub fn desk(n: usize, type_count: usize) -> Result<Self> {
        Market::new(TypeSpace::with_len(type_count), FirmRoster::with_len(n))
    }

    pub fn n(&self) -> usize {
        self.roster.len()
    }

    pub fn type_count(&self) -> usize {
        self.space.len()
    }

    pub fn space(&self) -> &TypeSpace {
        &self.space
    }

    pub fn roster(&self) -> &FirmRoster {
        &self.roster
    }

    pub fn universe(&self) -> Universe {
        Universe::build(&self.space, self.n()).expect("market invariant guarantees L > n")
    }
}

/// An injective map from workers to worker types; the hidden state of the
/// market.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TypeAssignment {
    types: Vec<WorkerType>,
}

impl TypeAssignment {
    pub fn new(types: Vec<WorkerType>) -> Result<Self> {
        let mut seen = types.iter().map(|t| t.rank()).collect::<Vec<_>>();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidScale);
        }
        Ok(TypeAssignment { types })
    }

    /// Convenience constructor from one-based ranks.
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        TypeAssignment::new(ranks.iter().map(|&r| WorkerType::from_rank(r)).collect())
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn workers(&self) -> impl Iterator<Item = WorkerId> {
        (0..self.len()).map(WorkerId::from_index)
    }

    pub fn get(&self, j: WorkerId) -> Result<WorkerType> {
        self.types
            .get(j.index())
            .copied()
            .ok_or(Error::UnknownWorker(j))
    }

    /// Unchecked lookup for workers known to exist.
    pub fn type_of(&self, j: WorkerId) -> WorkerType {
        self.types[j.index()]
    }

    pub fn types(&self) -> &[WorkerType] {
        &self.types
    }

    pub fn worker_with(&self, t: WorkerType) -> Option<WorkerId> {
        self.types
            .iter()
            .position(|&x| x == t)
            .map(WorkerId::from_index)
    }
}

impl fmt::Display for TypeAssignment {
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

/// Which report profiles a mechanism accepts: only valid type assignments, or
/// all of `T^n` with ties resolved by the tie-breaking order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Regime {
    Injective,
    Full,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Injective => write!(f, "injective"),
            Regime::Full => write!(f, "full"),
        }
    }
}

/// A profile of reported types. Unlike a type assignment, reports may
/// coincide; `regime()` tells which class the profile falls in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReportProfile {
    reports: Vec<WorkerType>,
}

impl ReportProfile {
    pub fn new(reports: Vec<WorkerType>) -> Self {
        ReportProfile { reports }
    }

    /// The truthful profile at `w`.
    pub fn truthful(w: &TypeAssignment) -> Self {
        ReportProfile {
            reports: w.types().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }

    pub fn get(&self, j: WorkerId) -> WorkerType {
        self.reports[j.index()]
    }

    pub fn reports(&self) -> &[WorkerType] {
        &self.reports
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.reports.iter().map(|t| t.rank()).collect::<Vec<_>>();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn regime(&self) -> Regime {
        if self.is_injective() {
            Regime::Injective
        } else {
            Regime::Full
        }
    }

    pub fn as_assignment(&self) -> Option<TypeAssignment> {
        TypeAssignment::new(self.reports.clone()).ok()
    }
}

impl fmt::Display for ReportProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.reports.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// A tie-breaking order: a bijection on worker numbers. Worker `j_k` carries
/// rank `tau(k)`, and a smaller rank takes precedence (is matched to the
/// higher firm among coincident reports).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TieBreak {
    ranks: Vec<usize>,
}

impl TieBreak {
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r < 1 || r > n || seen[r - 1] {
                return Err(Error::InvalidTieBreak(n));
            }
            seen[r - 1] = true;
        }
        Ok(TieBreak { ranks })
    }

    pub fn identity(n: usize) -> Self {
        TieBreak {
            ranks: (1..=n).collect(),
        }
    }

    pub fn reversed(n: usize) -> Self {
        TieBreak {
            ranks: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank_of(&self, j: WorkerId) -> usize {
        self.ranks[j.index()]
    }

    pub fn precedes(&self, a: WorkerId, b: WorkerId) -> bool {
        self.rank_of(a) < self.rank_of(b)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }
}

/// All injective maps from `n` workers into the scale, in lexicographic
/// order by worker index then type rank.
pub fn enumerate_assignments(space: &TypeSpace, n: usize) -> Result<Vec<TypeAssignment>> {
    if space.len() < n {
        return Err(Error::TypeSpaceTooSmall {
            workers: n,
            types: space.len(),
        });
    }
    let mut out = Vec::new();
    let mut used = vec![false; space.len()];
    let mut current: Vec<WorkerType> = Vec::with_capacity(n);
    fn recurse(
        depth: usize,
        n: usize,
        len: usize,
        used: &mut [bool],
        current: &mut Vec<WorkerType>,
        out: &mut Vec<TypeAssignment>,
    ) {
        if depth == n {
            out.push(TypeAssignment {
                types: current.clone(),
            });
            return;
        }
        for rank in 1..=len {
            if !used[rank - 1] {
                used[rank - 1] = true;
                current.push(WorkerType::from_rank(rank));
                recurse(depth + 1, n, len, used, current, out);
                current.pop();
                used[rank - 1] = false;
            }
        }
    }
    recurse(0, n, space.len(), &mut used, &mut current, &mut out);
    Ok(out)
}

/// One-based position of `j` in `w`: one plus the number of workers with a
/// strictly higher assigned type.
pub fn position(w: &TypeAssignment, j: WorkerId) -> Result<usize> {
    let own = w.get(j)?;
    Ok(1 + w.types().iter().filter(|&&t| t > own).count())
}

/// The number of workers a report `t` by `j` would leapfrog at `w`: those
/// with types strictly above `w(j)` and weakly below `t`. Zero whenever `t`
/// is not strictly above `w(j)`.
pub fn leapfrog_count(w: &TypeAssignment, j: WorkerId, t: WorkerType) -> Result<usize> {
    let own = w.get(j)?;
    Ok(w.types().iter().filter(|&&x| x > own && t >= x).count())
}

/// The profile equal to `w` except that `j` reports `t`.
pub fn substitute(w: &TypeAssignment, j: WorkerId, t: WorkerType) -> Result<ReportProfile> {
    w.get(j)?;
    let mut reports = w.types().to_vec();
    reports[j.index()] = t;
    Ok(ReportProfile::new(reports))
}

/// Dense index of an assignment within its enumerated universe.
pub type AssignmentId = u32;

/// The enumerated assignment universe of a market, with precomputed
/// consistency bitsets and position tables.
#[derive(Clone, Debug)]
pub struct Universe {
    n: usize,
    type_count: usize,
    assignments: Vec<TypeAssignment>,
    index: HashMap<TypeAssignment, AssignmentId>,
    consistency: Vec<IndexSet>,
    positions: Vec<u8>,
}

impl Universe {
    pub fn build(space: &TypeSpace, n: usize) -> Result<Self> {
        let assignments = enumerate_assignments(space, n)?;
        let index: HashMap<TypeAssignment, AssignmentId> = assignments
            .iter()
            .enumerate()
            .map(|(idx, w)| (w.clone(), idx as AssignmentId))
            .collect();
        let type_count = space.len();
        let mut consistency = vec![IndexSet::empty(assignments.len()); n * type_count];
        let mut positions = vec![0u8; assignments.len() * n];
        for (idx, w) in assignments.iter().enumerate() {
            for j in w.workers() {
                let t = w.type_of(j);
                consistency[j.index() * type_count + (t.rank() - 1)].insert(idx);
                positions[idx * n + j.index()] = position(w, j).expect("worker in range") as u8;
            }
        }
        Ok(Universe {
            n,
            type_count,
            assignments,
            index,
            consistency,
            positions,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn type_count(&self) -> usize {
        self.type_count
    }

    pub fn lowest_type(&self) -> WorkerType {
        WorkerType::from_rank(self.type_count)
    }

    pub fn last_firm(&self) -> FirmId {
        FirmId::from_index(self.n - 1)
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn assignments(&self) -> &[TypeAssignment] {
        &self.assignments
    }

    pub fn assignment(&self, id: AssignmentId) -> &TypeAssignment {
        &self.assignments[id as usize]
    }

    pub fn id_of(&self, w: &TypeAssignment) -> Option<AssignmentId> {
        self.index.get(w).copied()
    }

    /// All assignments giving worker `j` the type `t`.
    pub fn consistency_with(&self, j: WorkerId, t: WorkerType) -> &IndexSet {
        &self.consistency[j.index() * self.type_count + (t.rank() - 1)]
    }

    pub fn position_of(&self, id: AssignmentId, j: WorkerId) -> usize {
        self.positions[id as usize * self.n + j.index()] as usize
    }

    pub fn full_set(&self) -> IndexSet {
        IndexSet::full(self.assignments.len())
    }

    pub fn empty_set(&self) -> IndexSet {
        IndexSet::empty(self.assignments.len())
    }

    pub fn worker_ids(&self) -> impl Iterator<Item = WorkerId> {
        (0..self.n).map(WorkerId::from_index)
    }

    pub fn firm_ids(&self) -> impl Iterator<Item = FirmId> {
        (0..self.n).map(FirmId::from_index)
    }

    pub fn types(&self) -> impl Iterator<Item = WorkerType> {
        (1..=self.type_count).map(WorkerType::from_rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ranks: &[usize]) -> TypeAssignment {
        TypeAssignment::from_ranks(ranks).unwrap()
    }

    #[test]
    fn type_order_follows_the_scale() {
        let t1 = WorkerType::from_rank(1);
        let t2 = WorkerType::from_rank(2);
        let t5 = WorkerType::from_rank(5);
        assert!(t1 > t2);
        assert!(t2 > t5);
        assert!(t5 < t1);
        assert_eq!(t2.max(t5), t2);
    }

    #[test]
    fn enumeration_counts_are_falling_factorials() {
        // 4 * 3 * 2
        let space = TypeSpace::with_len(4);
        assert_eq!(enumerate_assignments(&space, 3).unwrap().len(), 24);
        // 3! permutations
        let space = TypeSpace::with_len(3);
        assert_eq!(enumerate_assignments(&space, 3).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_cross_checked_against_recursive_count() {
        // Independent oracle: the recurrence f(L, n) = L * f(L-1, n-1)
        // counts distinct injective maps worker-by-worker.
        fn f(l: usize, n: usize) -> usize {
            if n == 0 {
                1
            } else if l == 0 {
                0
            } else {
                l * f(l - 1, n - 1)
            }
        }
        assert_eq!(f(7, 3), 210);
        let space = TypeSpace::with_len(7);
        let all = enumerate_assignments(&space, 3).unwrap();
        assert_eq!(all.len(), 210);
        // and they are pairwise distinct
        let mut seen = all.clone();
        seen.sort_by_key(|a| a.types().iter().map(|t| t.rank()).collect::<Vec<_>>());
        seen.dedup();
        assert_eq!(seen.len(), 210);
    }

    #[test]
    fn enumeration_rejects_small_scales() {
        let space = TypeSpace::with_len(2);
        assert_eq!(
            enumerate_assignments(&space, 3),
            Err(Error::TypeSpaceTooSmall {
                workers: 3,
                types: 2
            })
        );
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let space = TypeSpace::with_len(3);
        let all = enumerate_assignments(&space, 2).unwrap();
        let got: Vec<Vec<usize>> = all
            .iter()
            .map(|a| a.types().iter().map(|t| t.rank()).collect())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 3],
                vec![3, 1],
                vec![3, 2]
            ]
        );
    }

    #[test]
    fn positions_match_the_ranked_order() {
        let a = w(&[1, 2, 3]);
        assert_eq!(position(&a, WorkerId::from_index(0)).unwrap(), 1);
        assert_eq!(position(&a, WorkerId::from_index(1)).unwrap(), 2);
        // the assignment used in the matched-report counterexample
        let b = w(&[2, 4, 5]);
        assert_eq!(position(&b, WorkerId::from_index(1)).unwrap(), 2);
        assert!(position(&a, WorkerId::from_index(9)).is_err());
    }

    #[test]
    fn position_is_a_bijection_onto_one_to_n() {
        let space = TypeSpace::with_len(5);
        for a in enumerate_assignments(&space, 4).unwrap() {
            let mut seen: Vec<usize> = a.workers().map(|j| position(&a, j).unwrap()).collect();
            seen.sort_unstable();
            assert_eq!(seen, vec![1, 2, 3, 4]);
        }
    }

    #[test]
    fn position_classes_partition_the_consistent_assignments() {
        // For fixed j and type, the position classes partition the set of
        // assignments agreeing with that type.
        for (l, n) in [(4usize, 3usize), (5, 3), (6, 4)] {
            let space = TypeSpace::with_len(l);
            let all = enumerate_assignments(&space, n).unwrap();
            let j = WorkerId::from_index(1);
            let t = WorkerType::from_rank(2);
            let consistent: Vec<&TypeAssignment> =
                all.iter().filter(|a| a.type_of(j) == t).collect();
            let mut total = 0;
            for q in 1..=n {
                total += consistent
                    .iter()
                    .filter(|a| position(a, j).unwrap() == q)
                    .count();
            }
            assert_eq!(total, consistent.len());
        }
    }

    #[test]
    fn substitution_examples() {
        let a = w(&[1, 2, 3]);
        let j2 = WorkerId::from_index(1);
        // identity substitution returns the same profile
        let same = substitute(&a, j2, WorkerType::from_rank(2)).unwrap();
        assert_eq!(same.reports(), a.types());
        assert_eq!(same.regime(), Regime::Injective);
        // a fresh report stays injective
        let fresh = substitute(&a, j2, WorkerType::from_rank(4)).unwrap();
        assert_eq!(fresh.regime(), Regime::Injective);
        // a collision with another worker's type flips to the full regime
        let b = w(&[2, 3]);
        let collide = substitute(&b, WorkerId::from_index(1), WorkerType::from_rank(2)).unwrap();
        assert_eq!(collide.regime(), Regime::Full);
        assert!(collide.as_assignment().is_none());
    }

    #[test]
    fn scales_expose_magnitudes_and_rank_lookup() {
        let space = TypeSpace::with_len(4);
        assert_eq!(space.magnitude(WorkerType::from_rank(1)), 4.0);
        assert_eq!(space.magnitude(WorkerType::from_rank(4)), 1.0);
        assert_eq!(space.rank_of(3.0), Some(WorkerType::from_rank(2)));
        assert_eq!(space.rank_of(9.0), None);
        assert!(TypeSpace::new(vec![3.0, 3.0]).is_err());
        assert!(TypeSpace::new(vec![2.0, -1.0]).is_err());
        assert!(TypeSpace::new(vec![5.0, 2.5, 1.0]).is_ok());
    }

    #[test]
    fn tie_break_validation() {
        assert!(TieBreak::new(vec![2, 1, 3]).is_ok());
        assert!(TieBreak::new(vec![1, 1, 3]).is_err());
        assert!(TieBreak::new(vec![0, 1, 2]).is_err());
        let rev = TieBreak::reversed(3);
        assert_eq!(rev.ranks(), &[3, 2, 1]);
        assert!(rev.precedes(WorkerId::from_index(2), WorkerId::from_index(0)));
    }

    #[test]
    fn market_requires_more_types_than_workers() {
        assert!(Market::desk(3, 3).is_err());
        assert!(Market::desk(3, 4).is_ok());
    }

    #[test]
    fn universe_consistency_and_positions() {
        let space = TypeSpace::with_len(4);
        let universe = Universe::build(&space, 3).unwrap();
        assert_eq!(universe.len(), 24);
        let j2 = WorkerId::from_index(1);
        let t2 = WorkerType::from_rank(2);
        let consistent = universe.consistency_with(j2, t2);
        assert_eq!(consistent.len(), 6);
        for idx in consistent.iter() {
            assert_eq!(universe.assignment(idx as AssignmentId).type_of(j2), t2);
        }
        let a = w(&[2, 4, 3]);
        let id = universe.id_of(&a).unwrap();
        assert_eq!(universe.position_of(id, WorkerId::from_index(1)), 3);
    }

    #[test]
    fn leapfrog_counts() {
        let a = w(&[1, 2, 3]);
        let j2 = WorkerId::from_index(1);
        // reporting above the top leapfrogs exactly the top worker
        assert_eq!(leapfrog_count(&a, j2, WorkerType::from_rank(1)).unwrap(), 1);
        // a downward report leapfrogs nobody
        assert_eq!(leapfrog_count(&a, j2, WorkerType::from_rank(4)).unwrap(), 0);
    }
}
