//! Scalar abstraction for bound evaluation.
//!
//! The closed-form bounds are ratios of small integers, so they are written
//! once against [`Scalar`] and instantiated with an exact rational type for
//! certification and with floats for quick numeric inspection. The one bound
//! involving a square root is written against [`RealScalar`].

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, Num, Signed};

pub trait Scalar: Num + Signed + Clone + PartialOrd + FromPrimitive + Debug {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }
}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialOrd + FromPrimitive + Debug {}

pub trait RealScalar: Scalar + Float {}

impl<T> RealScalar for T where T: Scalar + Float {}

/// Floor of `a / b` for integers with `b > 0`.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

/// Ceiling of `a / b` for integers with `b > 0`.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}
