//! Simple undirected graphs on at most 64 vertices, stored as bitset rows.

mod canon;
mod edgelist;
mod enumerate;
mod generators;
mod graph6;
mod structure;
mod vertex_set;

use std::fmt;

pub use canon::canonical_form;
pub use edgelist::{parse_edge_list, to_edge_list};
pub use enumerate::{
    enumerate_connected_graphs, enumerate_cubic_graphs, enumerate_trees, TreeIter, MAX_CONNECTED_N, MAX_CUBIC_N,
    MAX_TREE_N,
};
pub use generators::{generate, heawood, petersen, Family};
pub use graph6::{from_graph6, to_graph6};
pub use structure::DegreeProfile;
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Immutable simple undirected graph over vertices `0..n`.
///
/// `adj[v]` is the open neighbourhood of `v` as a bitset. Adjacency is
/// symmetric and irreflexive after every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        Ok(Self { n, adj: vec![0; n], m: 0 })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Malformed(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        g.recount();
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Malformed(format!("row {v} references a vertex >= {n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::Malformed(format!("self-loop at vertex {v}")));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[u] & bit(v) == 0 {
                    return Err(Error::Malformed(format!("edge ({v}, {u}) is not symmetric")));
                }
            }
        }
        let mut g = Self { n, adj, m: 0 };
        g.recount();
        Ok(g)
    }

    fn recount(&mut self) {
        self.m = self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Open neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighbourhood of `v` as a bitset.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Bitset containing every vertex.
    #[inline]
    pub fn all(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges `(u, v)` with `u < v`, in increasing order of `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            let below = self.adj[v] & low_mask(v);
            BitIter(below).map(move |u| (u, v))
        })
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Malformed("permutation length differs from vertex count".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Malformed("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bit(perm[v]);
            adj[perm[v]] |= bit(perm[u]);
        }
        Ok(Self { n: self.n, adj, m: self.m })
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        structure::degree_profile(self)
    }

    pub fn is_connected(&self) -> bool {
        structure::is_connected(self)
    }

    pub fn is_tree(&self) -> bool {
        structure::is_tree(self)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        structure::girth(self)
    }

    pub fn is_regular(&self) -> Option<usize> {
        structure::regular_degree(self)
    }

    pub fn is_bipartite(&self) -> bool {
        structure::is_bipartite(self)
    }

    /// True when the graph contains no complete subgraph on `p` vertices.
    pub fn is_k_clique_free(&self, p: usize) -> bool {
        structure::is_k_clique_free(self, p)
    }

    pub fn clique_number(&self) -> usize {
        structure::clique_number(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        structure::is_isomorphic(self, other)
    }

    /// True for the Heawood graph under any labelling.
    pub fn is_heawood(&self) -> bool {
        structure::is_heawood(self)
    }

    pub fn to_graph6(&self) -> Result<String> {
        to_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterator over set bit positions, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_builds_cycle() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        let p = g.degree_profile();
        assert_eq!((p.min_deg, p.max_deg), (0, 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::Malformed(_))));
        assert!(matches!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::Malformed(_))));
        assert!(matches!(Graph::empty(65), Err(Error::UnsupportedSize(_))));
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        let g = Graph::from_adjacency(vec![0b10, 0b01]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.m(), 3);
        assert!(h.has_edge(3, 2) && h.has_edge(1, 0));
        assert!(g.permuted(&[0, 0, 1, 2]).is_err());
    }
}
