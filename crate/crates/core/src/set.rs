use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

/// Fixed-capacity bit vector over vertex (or facet) indices.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn empty(capacity: usize) -> Self {
        Self(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = FixedBitSet::with_capacity(capacity);
        s.insert_range(..);
        Self(s)
    }

    pub fn from_indices(capacity: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = FixedBitSet::with_capacity(capacity);
        for i in indices {
            s.insert(i);
        }
        Self(s)
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.0.intersect_with(&other.0);
    }

    pub fn union_with(&mut self, other: &Self) {
        self.0.union_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.0.difference_with(&other.0);
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.0.intersection_count(&other.0)
    }

    /// Smallest element of `self` not in `other`.
    pub fn first_not_in(&self, other: &Self) -> Option<usize> {
        self.0.difference(&other.0).next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.as_slice().hash(state);
    }
}

/// Lexicographic order on the sorted index lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_ops() {
        let a = VertexSet::from_indices(10, [1, 3, 5]);
        let b = VertexSet::from_indices(10, [1, 3, 5, 7]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(b.first_not_in(&a), Some(7));
        assert_eq!(VertexSet::full(4).len(), 4);
        assert!(VertexSet::from_indices(4, [0]) < VertexSet::from_indices(4, [0, 1]));
        assert!(VertexSet::from_indices(4, [0, 3]) < VertexSet::from_indices(4, [1]));
    }
}
