//! Fixed-capacity vertex bitsets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense vertex identifier, `0..n`.
pub type VertexId = usize;

/// Largest vertex count any graph or complex may have.
pub const CAPACITY: usize = 128;

/// A set of vertex ids below [`CAPACITY`], stored as a single 128-bit word.
///
/// Ordering via `Ord` is the raw bit order, which is only useful as a total
/// order for hashing and sorting. Use [`VertexSet::cmp_size_lex`] for the
/// size-then-lexicographic order in which results are reported.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(n <= CAPACITY, "vertex count {n} exceeds capacity {CAPACITY}");
        if n == CAPACITY {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: VertexId) -> Self {
        debug_assert!(v < CAPACITY);
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        v < CAPACITY && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        debug_assert!(v < CAPACITY);
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        debug_assert!(v < CAPACITY);
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: VertexId) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    #[inline]
    pub fn without(self, v: VertexId) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn last(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Elements strictly greater than `v`.
    #[inline]
    pub fn above(self, v: VertexId) -> Self {
        if v + 1 >= CAPACITY {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u128::MAX << (v + 1)))
        }
    }

    /// Size first, then lexicographic on the sorted element lists.
    pub fn cmp_size_lex(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            current: 0,
            done: false,
        }
    }

    /// Image of the set under a vertex map; `map[v]` is the image of `v`.
    pub fn map(self, map: &[VertexId]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a VertexId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

macro_rules! set_op {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $m(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $am(&mut self, rhs: VertexSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

// Sets serialize as sorted id lists so JSON certificates stay readable.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<VertexId>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= CAPACITY) {
            return Err(serde::de::Error::custom(format!(
                "vertex id {bad} exceeds capacity {CAPACITY}"
            )));
        }
        Ok(ids.into_iter().collect())
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = VertexId;
    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Gosper-free subset walk: `(current - mask) & mask` enumerates every
/// submask in increasing numeric order.
pub struct Subsets {
    mask: u128,
    current: u128,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet(self.current);
        if self.current == self.mask {
            self.done = true;
        } else {
            self.current = self.current.wrapping_sub(self.mask) & self.mask;
        }
        Some(out)
    }
}

/// Sort sets into size-then-lexicographic order.
pub fn sort_size_lex(sets: &mut [VertexSet]) {
    sets.sort_by(VertexSet::cmp_size_lex);
}

/// Keep only the inclusion-maximal sets, deduplicated, in size-lex order.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    // Larger sets first so every kept set only needs checking against kept ones.
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    sort_size_lex(&mut kept);
    kept
}

/// Keep only the inclusion-minimal sets, deduplicated, in size-lex order.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    sort_size_lex(&mut kept);
    kept
}
