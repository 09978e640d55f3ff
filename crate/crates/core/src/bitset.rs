//! Compact bitsets over an enumerated universe of candidates.
//!
//! Information sets are subsets of a small, fixed enumeration (all type
//! assignments of a market), so plain word-packed bitsets make the set
//! algebra exact and cheap.

const WORD: usize = 64;

/// A set of indices into a fixed-size universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    words: Vec<u64>,
    universe: usize,
}

impl IndexSet {
    pub fn empty(universe: usize) -> Self {
        IndexSet {
            words: vec![0; universe.div_ceil(WORD)],
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (k, word) in set.words.iter_mut().enumerate() {
            let remaining = universe - k * WORD;
            *word = if remaining >= WORD {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for idx in indices {
            set.insert(idx);
        }
        set
    }

    pub fn universe_len(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, idx: usize) {
        debug_assert!(idx < self.universe);
        self.words[idx / WORD] |= 1 << (idx % WORD);
    }

    pub fn remove(&mut self, idx: usize) {
        debug_assert!(idx < self.universe);
        self.words[idx / WORD] &= !(1 << (idx % WORD));
    }

    pub fn contains(&self, idx: usize) -> bool {
        idx < self.universe && self.words[idx / WORD] & (1 << (idx % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &IndexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Drops every member for which the predicate is false.
    pub fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        let doomed: Vec<usize> = self.iter().filter(|&idx| !keep(idx)).collect();
        for idx in doomed {
            self.remove(idx);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let low = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(k * WORD + low)
                }
            })
        })
    }
}

impl std::fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
