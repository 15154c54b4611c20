use serde::Serialize;

use super::{bit, canonical_form, heawood, BitIter, Graph};

/// Degree statistics used by the closed-form bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_deg: usize,
    pub max_deg: usize,
    /// `|V_e|`, vertices of even degree (degree 0 counts as even).
    pub even_count: usize,
    pub odd_count: usize,
}

pub(super) fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut p =
        DegreeProfile { min_deg: if g.n() == 0 { 0 } else { usize::MAX }, max_deg: 0, even_count: 0, odd_count: 0 };
    for v in g.vertices() {
        let d = g.degree(v);
        p.min_deg = p.min_deg.min(d);
        p.max_deg = p.max_deg.max(d);
        if d.is_multiple_of(2) {
            p.even_count += 1;
        } else {
            p.odd_count += 1;
        }
    }
    p
}

fn component_of(g: &Graph, start: usize) -> u64 {
    let mut seen = bit(start);
    let mut frontier = bit(start);
    while frontier != 0 {
        let mut next = 0;
        for v in BitIter(frontier) {
            next |= g.neighbors(v);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

pub(super) fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || component_of(g, 0) == g.all()
}

pub(super) fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && is_connected(g)
}

pub(super) fn regular_degree(g: &Graph) -> Option<usize> {
    let p = degree_profile(g);
    (g.n() > 0 && p.min_deg == p.max_deg).then_some(p.min_deg)
}

pub(super) fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if best.is_some_and(|b| 2 * dist[v] + 1 >= b) {
                break;
            }
            for u in BitIter(g.neighbors(v)) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push(u);
                } else if parent[v] != u {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub(super) fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for u in BitIter(g.neighbors(v)) {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    stack.push(u);
                } else if side[u] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Backtracking search for a clique of size `need` inside `candidates`.
fn has_clique(g: &Graph, candidates: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < need {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        if (rest.count_ones() as usize) < need {
            return false;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(g, rest & g.neighbors(v), need - 1) {
            return true;
        }
    }
    false
}

pub(super) fn is_k_clique_free(g: &Graph, p: usize) -> bool {
    !has_clique(g, g.all(), p)
}

pub(super) fn clique_number(g: &Graph) -> usize {
    let mut w = 0;
    while has_clique(g, g.all(), w + 1) {
        w += 1;
    }
    w
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

pub(super) fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && sorted_degrees(g) == sorted_degrees(h) && canonical_form(g) == canonical_form(h)
}

pub(super) fn is_heawood(g: &Graph) -> bool {
    g.n() == 14 && regular_degree(g) == Some(3) && girth(g) == Some(6) && is_isomorphic(g, &heawood())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn degree_sum_identity() {
        let g = fam(Family::CompleteMultipartite(vec![1, 2, 3]));
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
        let p = g.degree_profile();
        assert_eq!(p.even_count + p.odd_count, g.n());
        assert!(p.min_deg <= p.max_deg);
    }

    #[test]
    fn connectivity_and_trees() {
        assert!(fam(Family::Path(5)).is_tree());
        assert!(!fam(Family::Cycle(5)).is_tree());
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert!(!split.is_tree());
        assert!(Graph::empty(1).unwrap().is_tree());
    }

    #[test]
    fn girth_values() {
        assert_eq!(fam(Family::Cycle(5)).girth(), Some(5));
        assert_eq!(fam(Family::Complete(4)).girth(), Some(3));
        assert_eq!(fam(Family::CompleteMultipartite(vec![3, 3])).girth(), Some(4));
        assert_eq!(fam(Family::Path(6)).girth(), None);
    }

    #[test]
    fn cliques() {
        assert!(fam(Family::Cycle(5)).is_k_clique_free(3));
        assert!(!fam(Family::Complete(4)).is_k_clique_free(4));
        assert!(fam(Family::Complete(4)).is_k_clique_free(5));
        assert_eq!(fam(Family::Complete(5)).clique_number(), 5);
        assert_eq!(fam(Family::Cycle(4)).clique_number(), 2);
        assert_eq!(Graph::empty(3).unwrap().clique_number(), 1);
        assert_eq!(Graph::empty(0).unwrap().clique_number(), 0);
    }

    #[test]
    fn heawood_detection_under_relabelling() {
        let h = heawood();
        let perm = [3, 11, 0, 7, 13, 5, 1, 9, 12, 2, 6, 10, 4, 8];
        let p = h.permuted(&perm).unwrap();
        assert!(p.is_heawood());
        assert!(h.is_isomorphic(&p));
        // same parameters except girth
        let mut other = vec![];
        for i in 0..14 {
            other.push((i, (i + 1) % 14));
        }
        for i in 0..7 {
            other.push((i, i + 7));
        }
        let moebius = Graph::from_edge_list(14, &other).unwrap();
        assert!(!moebius.is_heawood());
    }
}
