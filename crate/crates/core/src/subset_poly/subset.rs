use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A subset of `{1, ..., n}` as a bitmask: bit `i - 1` stands for element `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        Subset(elems.into_iter().fold(0, |m, e| {
            assert!((1..=32).contains(&e), "subset element {e} out of range");
            m | 1 << (e - 1)
        }))
    }

    /// The initial segment `[k] = {1, ..., k}`.
    pub const fn prefix(k: usize) -> Self {
        if k >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << k) - 1)
        }
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, e: usize) -> bool {
        e >= 1 && e <= 32 && self.0 >> (e - 1) & 1 == 1
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self.0 != other.0
    }

    /// Neither contains the other.
    pub const fn is_sperner_pair(self, other: Subset) -> bool {
        !self.is_subset_of(other) && !other.is_subset_of(self)
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Whether this is `[k]` for some `k >= 0` (so `{}` counts).
    pub const fn is_initial_segment(self) -> bool {
        self.0 & self.0.wrapping_add(1) == 0
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let e = rest.trailing_zeros() as usize + 1;
                rest &= rest - 1;
                e
            })
        })
    }

    /// The variable order: `Greater` means `z_self > z_other`.
    ///
    /// Smaller subsets give larger variables; among equal sizes, the subset
    /// that is lexicographically first (it owns the least element of the
    /// symmetric difference) gives the larger variable.
    pub fn var_cmp(self, other: Subset) -> Ordering {
        other.len().cmp(&self.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elements().join(","))
    }
}

pub fn var_cmp(a: Subset, b: Subset) -> Ordering {
    a.var_cmp(b)
}

/// `(tdeg, qdeg)` under `deg(z_A) = t q^|A|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiDegree {
    pub tdeg: u32,
    pub qdeg: u32,
}

impl std::ops::Add for BiDegree {
    type Output = BiDegree;

    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree {
            tdeg: self.tdeg + o.tdeg,
            qdeg: self.qdeg + o.qdeg,
        }
    }
}

struct RingData {
    n: usize,
    by_rank: Vec<Subset>,
    rank_of: Vec<u32>,
}

/// The polynomial ring `T_n` on the `2^n` variables `z_A`.
///
/// Variables are identified by their rank in the variable order: rank 0 is
/// `z_{}` (the largest variable) and rank `2^n - 1` is `z_[n]`. Monomials
/// only store ranks, so a ring is needed to map them back to subsets.
#[derive(Clone)]
pub struct SubsetRing(Arc<RingData>);

impl SubsetRing {
    pub const MAX_N: usize = 16;

    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > Self::MAX_N {
            return Err(Error::InvalidParameter(format!(
                "n must lie in 1..={}, got {n}",
                Self::MAX_N
            )));
        }
        let mut by_rank: Vec<Subset> = (0..1u32 << n).map(Subset).collect();
        by_rank.sort_by(|a, b| b.var_cmp(*a));
        let mut rank_of = vec![0u32; 1 << n];
        for (rank, s) in by_rank.iter().enumerate() {
            rank_of[s.0 as usize] = rank as u32;
        }
        Ok(SubsetRing(Arc::new(RingData {
            n,
            by_rank,
            rank_of,
        })))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn num_vars(&self) -> usize {
        self.0.by_rank.len()
    }

    pub fn full_set(&self) -> Subset {
        Subset::prefix(self.0.n)
    }

    pub fn subset(&self, rank: u32) -> Subset {
        self.0.by_rank[rank as usize]
    }

    /// Panics if `s` is not a subset of `[n]`.
    pub fn rank(&self, s: Subset) -> u32 {
        assert!(
            s.is_subset_of(self.full_set()),
            "{s} is not a subset of [{}]",
            self.0.n
        );
        self.0.rank_of[s.0 as usize]
    }

    pub fn contains_subset(&self, s: Subset) -> bool {
        s.is_subset_of(self.full_set())
    }

    /// All subsets, largest variable first.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        self.0.by_rank.iter().copied()
    }

    /// The `k`-subsets, largest variable first (so `[k]` leads).
    pub fn subsets_of_size(&self, k: usize) -> impl Iterator<Item = Subset> + '_ {
        self.subsets().filter(move |s| s.len() == k)
    }

    /// Unordered Sperner 2-pairs `(A, B)` with `z_A > z_B`.
    pub fn sperner_pairs(&self) -> Vec<(Subset, Subset)> {
        let subsets = &self.0.by_rank;
        let mut pairs = Vec::new();
        for (i, &a) in subsets.iter().enumerate() {
            for &b in &subsets[i + 1..] {
                if a.is_sperner_pair(b) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}

impl PartialEq for SubsetRing {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n
    }
}

impl Eq for SubsetRing {}

impl fmt::Debug for SubsetRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}", self.0.n)
    }
}
