use serde::Serialize;

use super::SignedFunction;
use crate::graph::{BitIter, Graph};

/// Counts describing how a signed function splits a graph into `V_+` and `V_-`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub plus: usize,
    pub minus: usize,
    pub plus_even: usize,
    pub plus_odd: usize,
    pub minus_even: usize,
    pub minus_odd: usize,
    /// `|E(G[V_+])|`
    pub edges_plus: usize,
    /// `|E(G[V_-])|`
    pub edges_minus: usize,
    /// `|[V_+, V_-]|`
    pub cross: usize,
}

pub fn partition_stats(g: &Graph, f: &SignedFunction) -> PartitionStats {
    assert_eq!(g.n(), f.n(), "signed function defined on a different vertex count");
    let minus_bits = f.negatives().bits();
    let mut s = PartitionStats::default();
    for v in g.vertices() {
        let even = g.degree(v).is_multiple_of(2);
        match (minus_bits >> v & 1 == 1, even) {
            (false, true) => s.plus_even += 1,
            (false, false) => s.plus_odd += 1,
            (true, true) => s.minus_even += 1,
            (true, false) => s.minus_odd += 1,
        }
    }
    s.plus = s.plus_even + s.plus_odd;
    s.minus = s.minus_even + s.minus_odd;
    for (u, v) in g.edges() {
        match (minus_bits >> u & 1, minus_bits >> v & 1) {
            (0, 0) => s.edges_plus += 1,
            (1, 1) => s.edges_minus += 1,
            _ => s.cross += 1,
        }
    }
    debug_assert_eq!(
        s.cross,
        BitIter(minus_bits).map(|v| (g.neighbors(v) & !minus_bits).count_ones() as usize).sum::<usize>()
    );
    s
}
