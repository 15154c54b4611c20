//! Closed-form bounds written once over the scalar type.
//!
//! Instantiate with [`crate::Rational`] for exact certification or with
//! `f64`/`f32` for quick numeric evaluation.

use num_traits::Signed;
use serde::Serialize;

use crate::scalar::{ceil_div, floor_div, RealScalar, Scalar};
use crate::Rational;

fn int<T: Scalar>(v: i64) -> T {
    T::from_int(v)
}

/// The three degree-based lower bounds on `γ_st`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LowerBoundTriple<T> {
    /// From `|V_-|` and `|V_+|` against the crossing edges.
    pub ratio: T,
    /// In terms of `Δ`, `n_e` and `m`.
    pub max_degree: T,
    /// In terms of `δ`, `Δ`, `n_e` and `m`.
    pub min_degree: T,
}

/// Degree-based lower bounds. `None` when `δ = 0` (no STDF exists).
pub fn degree_lower_bounds<T: Scalar>(
    n: usize,
    m: usize,
    min_deg: usize,
    max_deg: usize,
    even_count: usize,
) -> Option<LowerBoundTriple<T>> {
    if min_deg == 0 {
        return None;
    }
    let (n, m, lo, hi, ne) = (n as i64, m as i64, min_deg as i64, max_deg as i64, even_count as i64);
    let half_lo = floor_div(lo, 2);
    let half_hi = ceil_div(hi, 2);

    let ratio = int::<T>((half_lo - half_hi + 2) * n) / int(half_lo + half_hi);
    let max_degree = int::<T>((5 - 3 * hi - 2 * half_hi) * n + 2 * ne + 8 * m) / int(3 * hi + 2 * half_hi - 1);
    let min_degree = int::<T>((5 + 3 * lo - 2 * half_hi) * n + 2 * ne - 4 * m) / int(3 * lo + 2 * half_hi - 1);
    Some(LowerBoundTriple { ratio, max_degree, min_degree })
}

/// Lower bound for `r`-regular graphs: `2n/r` for even `r`, `n/r` for odd `r`.
pub fn regular_lower_bound<T: Scalar>(n: usize, r: usize) -> T {
    assert!(r >= 1, "regular bound needs r >= 1");
    let num = if r.is_multiple_of(2) { 2 * n } else { n };
    int::<T>(num as i64) / int(r as i64)
}

/// Turán's edge cap `(r - 1) n² / (2r)` for `K_{r+1}`-free graphs.
pub fn turan_edge_cap<T: Scalar>(n: usize, r: usize) -> T {
    let (n, r) = (n as i64, r as i64);
    int::<T>((r - 1) * n * n) / int(2 * r)
}

/// `2n/3`, the cubic upper bound.
pub fn cubic_upper_bound<T: Scalar>(n: usize) -> T {
    int::<T>(2 * n as i64) / int(3)
}

/// `c = ⌈(δ + 1)/2⌉`.
pub fn clique_free_c(min_deg: usize) -> i64 {
    ceil_div(min_deg as i64 + 1, 2)
}

/// `(r/(r-1)) (-(c-1) + sqrt((c-1)² + 4 ((r-1)/r) c n)) - n` for `K_{r+1}`-free graphs.
pub fn clique_free_lower_bound<T: RealScalar>(n: usize, min_deg: usize, r: usize) -> T {
    assert!(r >= 2, "clique-free bound needs r >= 2");
    let c = clique_free_c(min_deg);
    let (n, r) = (n as i64, r as i64);
    let cm1: T = int(c - 1);
    let frac: T = int::<T>(r - 1) / int(r);
    let disc = cm1 * cm1 + int::<T>(4) * frac * int(c) * int(n);
    (int::<T>(r) / int(r - 1)) * (-cm1 + disc.sqrt()) - int(n)
}

/// Exact decision of `gamma >= clique_free_lower_bound(n, δ, r)` without
/// floating point: with `x = (gamma + n)(r-1)/r + (c-1)`, the bound holds iff
/// `x >= 0` and `x² >= (c-1)² + 4((r-1)/r) c n`.
pub fn clique_free_bound_holds_exact(gamma: i64, n: usize, min_deg: usize, r: usize) -> bool {
    assert!(r >= 2, "clique-free bound needs r >= 2");
    let c = clique_free_c(min_deg);
    let (n, r) = (n as i64, r as i64);
    let frac = Rational::new(r - 1, r);
    let x = Rational::from_integer(gamma + n) * frac + Rational::from_integer(c - 1);
    if x.is_negative() {
        return false;
    }
    let disc = Rational::from_integer((c - 1) * (c - 1)) + Rational::from_integer(4 * c * n) * frac;
    x * x >= disc
}

/// Smallest integer not below `bound - slack` with the parity of `n`.
pub fn parity_ceiling(bound: f64, n: usize, slack: f64) -> i64 {
    let mut v = (bound - slack).ceil() as i64;
    if (v - n as i64).rem_euclid(2) != 0 {
        v += 1;
    }
    v
}

/// `true` when `value` is an integer equal to `exact`.
pub fn equals_integer<T: Scalar>(value: &T, exact: i64) -> bool {
    (value.clone() - int::<T>(exact)).is_zero()
}
