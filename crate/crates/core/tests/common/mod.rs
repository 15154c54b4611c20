//! Brute-force oracles that only read the edge list. They enumerate every
//! subset or sign vector and share no code with the library solvers.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigdom::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn members(mask: u32, n: usize) -> impl Fn(usize) -> bool {
    assert!(n < 32);
    move |v| mask >> v & 1 == 1
}

/// Minimum signed weight over all sign vectors with `f(N(v)) >= 1`.
pub fn brute_gamma_st(g: &Graph) -> Option<i64> {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&neg| {
            let is_neg = members(neg, n);
            adj.iter().all(|nv| nv.iter().map(|&u| if is_neg(u) { -1 } else { 1 }).sum::<i64>() >= 1)
        })
        .map(|neg| n as i64 - 2 * neg.count_ones() as i64)
        .min()
}

/// Every valid STDF, as its set of negative vertices.
pub fn all_stdf_negatives(g: &Graph) -> Vec<u32> {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&neg| {
            let is_neg = members(neg, n);
            adj.iter().all(|nv| nv.iter().map(|&u| if is_neg(u) { -1 } else { 1 }).sum::<i64>() >= 1)
        })
        .collect()
}

/// Minimum `|S|` with `|N(v) ∩ S| >= k` for every `v`.
pub fn brute_tuple_tds(g: &Graph, k: usize) -> Option<usize> {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| adj.iter().all(|nv| nv.iter().filter(|&&u| s >> u & 1 == 1).count() >= k))
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Maximum `|L|` with `|N(v) ∩ L| <= k` for every `v`.
pub fn brute_tlp(g: &Graph, k: usize) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| adj.iter().all(|nv| nv.iter().filter(|&&u| s >> u & 1 == 1).count() <= k))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum `|B|` with `|N[v] ∩ B| <= k` for every `v`.
pub fn brute_limited_packing(g: &Graph, k: usize) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| (s >> v & 1) as usize + adj[v].iter().filter(|&&u| s >> u & 1 == 1).count() <= k))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Maximum `|B|` whose members have pairwise disjoint open neighbourhoods.
pub fn brute_open_packing(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    let disjoint = |a: usize, b: usize| !adj[a].iter().any(|x| adj[b].contains(x));
    (0u32..1 << n)
        .filter(|&s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| disjoint(a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
