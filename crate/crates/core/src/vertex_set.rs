//! Fixed-width vertex sets over the labels `1..=n`.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Vertex;

/// A subset of `{1, ..., n}` stored as a bit vector.
///
/// Bit `v - 1` is set when label `v` is a member, so intersections and
/// subset tests are word operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: u32) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(n as usize),
        }
    }

    pub fn full(n: u32) -> Self {
        let mut bits = FixedBitSet::with_capacity(n as usize);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from labels; panics on a label outside `1..=n`.
    pub fn from_labels<I: IntoIterator<Item = Vertex>>(n: u32, labels: I) -> Self {
        let mut set = Self::empty(n);
        for v in labels {
            set.insert(v);
        }
        set
    }

    /// Universe size `n`.
    pub fn universe(&self) -> u32 {
        self.bits.len() as u32
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(
            v >= 1 && v <= self.universe(),
            "vertex {v} outside 1..={}",
            self.universe()
        );
        self.bits.insert(v as usize - 1);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v >= 1 && v <= self.universe() {
            self.bits.set(v as usize - 1, false);
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.universe() && self.bits.contains(v as usize - 1)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones().map(|i| i as Vertex + 1)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum().map(|i| i as Vertex + 1)
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

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Deserializes a plain label list; the universe is the largest label.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let labels = Vec::<Vertex>::deserialize(deserializer)?;
        if labels.contains(&0) {
            return Err(serde::de::Error::custom("vertex labels start at 1"));
        }
        let n = labels.iter().copied().max().unwrap_or(0);
        Ok(Self::from_labels(n, labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_one_based() {
        let s = VertexSet::from_labels(8, [1, 8, 3]);
        assert_eq!(s.to_vec(), vec![1, 3, 8]);
        assert!(s.contains(8));
        assert!(!s.contains(0));
        assert!(!s.contains(9));
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.to_string(), "{1,3,8}");
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_labels(10, [1, 2, 3, 4]);
        let b = VertexSet::from_labels(10, [3, 4, 5]);
        let mut c = a.clone();
        c.intersect_with(&b);
        assert_eq!(c.to_vec(), vec![3, 4]);
        assert!(c.is_subset(&a) && c.is_subset(&b));
        assert_eq!(a.intersection_len(&b), 2);
        let mut d = a.clone();
        d.difference_with(&b);
        assert_eq!(d.to_vec(), vec![1, 2]);
        assert!(d.is_disjoint(&b));
        assert_eq!(VertexSet::full(5).len(), 5);
    }

    #[test]
    fn serializes_as_sorted_list() {
        let s = VertexSet::from_labels(9, [9, 2]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,9]");
        let back: VertexSet = serde_json::from_str("[2,9]").unwrap();
        assert_eq!(back.to_vec(), vec![2, 9]);
    }
}
