//! Small fixed-capacity id sets.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of ids in `0..128`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IdSet(pub u128);

impl IdSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        IdSet(0)
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            IdSet(u128::MAX)
        } else {
            IdSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(id: usize) -> Self {
        IdSet(1u128 << id)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut s = IdSet(0);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Builds a set from 1-based labels.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_ids(labels.into_iter().map(|l| {
            assert!(l >= 1, "labels are 1-based");
            l - 1
        }))
    }

    pub fn insert(&mut self, id: usize) {
        assert!(id < Self::CAPACITY, "id {id} exceeds IdSet capacity");
        self.0 |= 1u128 << id;
    }

    pub fn remove(&mut self, id: usize) {
        self.0 &= !(1u128 << id);
    }

    pub fn without(self, id: usize) -> Self {
        IdSet(self.0 & !(1u128 << id))
    }

    pub fn with(self, id: usize) -> Self {
        IdSet(self.0 | (1u128 << id))
    }

    pub fn contains(self, id: usize) -> bool {
        id < Self::CAPACITY && self.0 >> id & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IdSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: IdSet) -> Self {
        IdSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IdSet) -> Self {
        IdSet(self.0 & other.0)
    }

    pub fn difference(self, other: IdSet) -> Self {
        IdSet(self.0 & !other.0)
    }

    /// Largest id + 1, or 0 for the empty set.
    pub fn bound(self) -> usize {
        128 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Ids {
        Ids(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based labels, ascending.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

pub struct Ids(u128);

impl Iterator for Ids {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ids {}

impl FromIterator<usize> for IdSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        IdSet::from_ids(iter)
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for IdSet {
    /// Lexicographic order on the ascending id sequence.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IdSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for IdSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for IdSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = ids.iter().find(|&&i| i >= IdSet::CAPACITY) {
            return Err(serde::de::Error::custom(format!("id {bad} out of range")));
        }
        Ok(IdSet::from_ids(ids))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = IdSet::from_ids([0, 1, 2]);
        let b = IdSet::from_ids([0, 1, 3]);
        let c = IdSet::from_ids([0, 1]);
        assert!(a < b);
        assert!(c < a);
        assert!(IdSet::empty() < c);
    }

    #[test]
    fn full_and_bound() {
        assert_eq!(IdSet::full(5).len(), 5);
        assert_eq!(IdSet::full(128).len(), 128);
        assert_eq!(IdSet::from_ids([3, 9]).bound(), 10);
        assert_eq!(IdSet::empty().bound(), 0);
        assert_eq!(IdSet::from_labels([1, 3]).to_vec(), vec![0, 2]);
    }
}
