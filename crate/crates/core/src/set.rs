use std::fmt;

use fixedbitset::FixedBitSet;

use crate::Elem;

/// A set of element ids drawn from a fixed carrier `0..capacity`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet(FixedBitSet);

impl ElemSet {
    pub fn new(capacity: usize) -> Self {
        ElemSet(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        ElemSet(bits)
    }

    pub fn from_elems(capacity: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut set = Self::new(capacity);
        for a in elems {
            set.insert(a);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    /// Returns true if `a` was not already present.
    pub fn insert(&mut self, a: Elem) -> bool {
        !self.0.put(a)
    }

    pub fn remove(&mut self, a: Elem) {
        self.0.set(a, false);
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn min(&self) -> Option<Elem> {
        self.0.minimum()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
