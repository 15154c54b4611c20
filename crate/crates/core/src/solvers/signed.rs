use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// A total assignment `V -> {-1, +1}`, stored by its `-1` set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedFunction {
    negatives: VertexSet,
    weight: i64,
}

impl SignedFunction {
    pub fn all_positive(n: usize) -> Self {
        Self::from_negatives(VertexSet::empty(n))
    }

    pub fn from_negatives(negatives: VertexSet) -> Self {
        let weight = negatives.universe() as i64 - 2 * negatives.len() as i64;
        Self { negatives, weight }
    }

    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let mut neg = VertexSet::empty(signs.len());
        for (v, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => neg.insert(v),
                other => return Err(Error::Malformed(format!("sign {other} at vertex {v} is not ±1"))),
            }
        }
        Ok(Self::from_negatives(neg))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.negatives.universe()
    }

    /// `f(V)`.
    #[inline]
    pub fn weight(&self) -> i64 {
        self.weight
    }

    #[inline]
    pub fn sign(&self, v: usize) -> i8 {
        if self.negatives.contains(v) {
            -1
        } else {
            1
        }
    }

    /// `V_-`.
    pub fn negatives(&self) -> VertexSet {
        self.negatives
    }

    /// `V_+`.
    pub fn positives(&self) -> VertexSet {
        self.negatives.complement()
    }

    /// `f(S)` for a bitset `S`.
    pub fn sum_over(&self, mask: u64) -> i64 {
        let total = mask.count_ones() as i64;
        total - 2 * self.negatives.count_in(mask) as i64
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.n()).map(|v| self.sign(v)).collect()
    }
}

impl fmt::Debug for SignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedFunction(weight={}, negatives={:?})", self.weight, self.negatives)
    }
}

impl Serialize for SignedFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.signs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn weight_from_signs() {
        let f = SignedFunction::from_signs(&[1, -1, 1, 1]).unwrap();
        assert_eq!(f.weight(), 2);
        assert_eq!(f.negatives().to_vec(), vec![1]);
        assert_eq!(f.sum_over(0b0111), 1);
        assert!(SignedFunction::from_signs(&[1, 0]).is_err());
    }

    proptest! {
        #[test]
        fn weight_parity(signs in proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 0..40)) {
            let f = SignedFunction::from_signs(&signs).unwrap();
            let n = signs.len() as i64;
            prop_assert_eq!(f.weight(), signs.iter().map(|&s| s as i64).sum::<i64>());
            prop_assert_eq!((f.weight() - n).rem_euclid(2), 0);
            prop_assert_eq!(f.weight(), n - 2 * f.negatives().len() as i64);
        }
    }
}
