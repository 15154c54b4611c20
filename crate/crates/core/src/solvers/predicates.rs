//! Definitional membership checks, one per invariant.

use super::SignedFunction;
use crate::graph::{Graph, VertexSet};

fn same_graph(g: &Graph, n: usize) -> bool {
    g.n() == n
}

/// `f(N(v)) >= 1` for every vertex.
pub fn is_valid_stdf(g: &Graph, f: &SignedFunction) -> bool {
    same_graph(g, f.n()) && g.vertices().all(|v| f.sum_over(g.neighbors(v)) >= 1)
}

/// Distinct members have disjoint open neighbourhoods.
pub fn is_open_packing(g: &Graph, b: &VertexSet) -> bool {
    if !same_graph(g, b.universe()) {
        return false;
    }
    let members = b.to_vec();
    members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| g.neighbors(u) & g.neighbors(v) == 0))
}

/// `|N(v) ∩ L| <= k` for every vertex.
pub fn is_tlp(g: &Graph, l: &VertexSet, k: usize) -> bool {
    same_graph(g, l.universe()) && g.vertices().all(|v| l.count_in(g.neighbors(v)) <= k)
}

/// `|N[v] ∩ B| <= k` for every vertex.
pub fn is_limited_packing(g: &Graph, b: &VertexSet, k: usize) -> bool {
    same_graph(g, b.universe()) && g.vertices().all(|v| b.count_in(g.closed_neighbors(v)) <= k)
}

/// Every vertex has a neighbour in `S`.
pub fn is_tds(g: &Graph, s: &VertexSet) -> bool {
    is_tuple_tds(g, s, 1)
}

/// `|N(v) ∩ S| >= k` for every vertex.
pub fn is_tuple_tds(g: &Graph, s: &VertexSet, k: usize) -> bool {
    same_graph(g, s.universe()) && g.vertices().all(|v| s.count_in(g.neighbors(v)) >= k)
}
