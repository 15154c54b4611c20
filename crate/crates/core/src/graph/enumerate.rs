//! Exhaustive enumeration of small graph classes, one graph per isomorphism class.

use std::collections::HashSet;

use super::{bit, canonical_form, Graph};
use crate::error::{Error, Result};

pub const MAX_TREE_N: usize = 16;
pub const MAX_CONNECTED_N: usize = 7;
pub const MAX_CUBIC_N: usize = 12;

/// Free trees on `n` vertices.
///
/// Rooted trees are produced as canonical level sequences by the
/// Beyer-Hedetniemi successor rule; a rooted tree is kept only when its root
/// is a centroid and, for bicentroidal trees, when its sequence is not smaller
/// than the one rooted at the other centroid.
pub fn enumerate_trees(n: usize) -> Result<TreeIter> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(Error::UnsupportedSize(format!("tree enumeration supports 1..={MAX_TREE_N} vertices, got {n}")));
    }
    Ok(TreeIter { levels: Some((0..n).collect()) })
}

pub struct TreeIter {
    levels: Option<Vec<usize>>,
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let levels = self.levels.take()?;
            self.levels = successor(&levels);
            let parents = parents_of(&levels);
            if is_free_tree_representative(&levels, &parents) {
                let edges: Vec<_> = (1..levels.len()).map(|v| (parents[v], v)).collect();
                return Some(Graph::from_edge_list(levels.len(), &edges).expect("valid tree"));
            }
        }
    }
}

/// Next canonical level sequence in decreasing lexicographic order.
fn successor(levels: &[usize]) -> Option<Vec<usize>> {
    let p = levels.iter().rposition(|&l| l > 1)?;
    let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1)?;
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

fn parents_of(levels: &[usize]) -> Vec<usize> {
    let mut last_at_level = vec![0usize; levels.len() + 1];
    let mut parents = vec![usize::MAX; levels.len()];
    for (v, &l) in levels.iter().enumerate() {
        if l > 0 {
            parents[v] = last_at_level[l - 1];
        }
        last_at_level[l] = v;
    }
    parents
}

fn is_free_tree_representative(levels: &[usize], parents: &[usize]) -> bool {
    let n = levels.len();
    if n <= 2 {
        return true;
    }
    // Level sequences are preorder, so subtree sizes accumulate backwards.
    let mut size = vec![1usize; n];
    for v in (1..n).rev() {
        size[parents[v]] += size[v];
    }
    let heaviest = (1..n).filter(|&v| parents[v] == 0).max_by_key(|&v| size[v]).expect("n > 2");
    let big = size[heaviest];
    if 2 * big > n {
        return false;
    }
    if 2 * big < n {
        return true;
    }
    let mut children = vec![Vec::new(); n];
    for v in 1..n {
        children[parents[v]].push(v);
        children[v].push(parents[v]);
    }
    let mut other = Vec::with_capacity(n);
    canonical_levels(&children, heaviest, usize::MAX, 0, &mut other);
    levels >= other.as_slice()
}

/// Lexicographically largest level sequence of the tree rooted at `v`.
fn canonical_levels(adj: &[Vec<usize>], v: usize, from: usize, depth: usize, out: &mut Vec<usize>) {
    let mut subs: Vec<Vec<usize>> = adj[v]
        .iter()
        .filter(|&&u| u != from)
        .map(|&u| {
            let mut s = Vec::new();
            canonical_levels(adj, u, v, depth + 1, &mut s);
            s
        })
        .collect();
    subs.sort_unstable_by(|a, b| b.cmp(a));
    out.push(depth);
    for s in subs {
        out.extend(s);
    }
}

/// Connected graphs on `n` vertices, ordered by edge count then graph6 string.
///
/// All graphs on `k` vertices come from extending each class representative
/// on `k - 1` vertices by one vertex in every possible way, deduplicated by
/// canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_CONNECTED_N).contains(&n) {
        return Err(Error::UnsupportedSize(format!(
            "built-in connected-graph enumeration supports 1..={MAX_CONNECTED_N} vertices, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0..(1u64 << (k - 1)) {
                let mut rows: Vec<u64> = g.rows().to_vec();
                rows.push(mask);
                for u in super::BitIter(mask) {
                    rows[u] |= bit(k - 1);
                }
                let c = canonical_form(&Graph::from_adjacency(rows)?);
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    let mut out: Vec<(usize, String, Graph)> =
        level.into_iter().filter(Graph::is_connected).map(|g| (g.m(), g.to_graph6().expect("n <= 7"), g)).collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

/// Connected 3-regular graphs on `n` vertices (`n` even, `4 <= n <= 12`),
/// in graph6 order.
///
/// Candidates are generated in breadth-first labelled form: each vertex in
/// turn is filled up to degree three using already reached vertices of higher
/// index or the next fresh vertex. Every connected cubic graph has such a
/// labelling; duplicates are removed by canonical form.
pub fn enumerate_cubic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 || !(4..=MAX_CUBIC_N).contains(&n) {
        return Err(Error::UnsupportedSize(format!("cubic enumeration supports even n in 4..={MAX_CUBIC_N}, got {n}")));
    }
    let mut state = CubicSearch { n, adj: vec![0; n], deg: vec![0; n], seen: HashSet::new(), found: Vec::new() };
    state.fill(1, 0, 1);
    let mut out: Vec<(String, Graph)> = state.found.into_iter().map(|g| (g.to_graph6().expect("n <= 12"), g)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

struct CubicSearch {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u8>,
    seen: HashSet<Graph>,
    found: Vec<Graph>,
}

impl CubicSearch {
    fn link(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
            self.deg[u] += 1;
            self.deg[v] += 1;
        } else {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
    }

    /// Vertices `0..next_new` are reached; `v` is being filled with neighbours `>= min_w`.
    fn fill(&mut self, next_new: usize, v: usize, min_w: usize) {
        if self.deg[v] == 3 {
            match (0..self.n).find(|&u| self.deg[u] < 3) {
                None => {
                    if next_new == self.n {
                        let g = canonical_form(&Graph::from_adjacency(self.adj.clone()).expect("valid"));
                        if self.seen.insert(g.clone()) {
                            self.found.push(g);
                        }
                    }
                }
                Some(u) if u < next_new => self.fill(next_new, u, u + 1),
                Some(_) => {}
            }
            return;
        }
        for w in min_w.max(v + 1)..next_new {
            if self.deg[w] < 3 && self.adj[v] & bit(w) == 0 {
                self.link(v, w, true);
                self.fill(next_new, v, w + 1);
                self.link(v, w, false);
            }
        }
        if next_new < self.n {
            self.link(v, next_new, true);
            self.fill(next_new + 1, v, next_new + 1);
            self.link(v, next_new, false);
        }
    }
}
