use std::fmt;

use serde::{Serialize, Serializer};

use super::{bit, low_mask, BitIter, MAX_VERTICES};
use crate::error::{Error, Result};

/// Subset of the vertices `0..n` of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    n: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        Self { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        Self { bits: low_mask(n), n }
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_VERTICES || bits & !low_mask(n) != 0 {
            return Err(Error::Malformed(format!("bitset {bits:#x} has members outside 0..{n}")));
        }
        Ok(Self { bits, n })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::Malformed(format!("vertex {v} outside 0..{n}")));
            }
            set.bits |= bit(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Vertex count of the owning graph.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.bits |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits &= !bit(v);
        }
    }

    pub fn complement(&self) -> Self {
        Self { bits: !self.bits & low_mask(self.n), n: self.n }
    }

    /// `|self ∩ mask|`.
    #[inline]
    pub fn count_in(&self, mask: u64) -> usize {
        (self.bits & mask).count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> BitIter {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_complement() {
        let s = VertexSet::from_vertices(5, [0, 3]).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && !s.contains(4) && !s.contains(70));
        assert_eq!(s.complement().to_vec(), vec![1, 2, 4]);
        assert_eq!(s.count_in(0b11001), 2);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn bounds_checked() {
        assert!(VertexSet::from_vertices(3, [3]).is_err());
        assert!(VertexSet::from_bits(3, 0b1000).is_err());
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
