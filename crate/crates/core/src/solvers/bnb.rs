//! Branch-and-bound over vertex subsets for capped packing problems:
//! maximise `|S|` subject to `|M_v ∩ S| <= cap_v` for every vertex `v`,
//! where `M_v` is either the open or the closed neighbourhood of `v`.
//!
//! Every invariant in this crate reduces to this form. Covering problems
//! (`|N(v) ∩ D| >= k`) become packings on the complement with cap `deg(v) - k`.

use crate::graph::{bit, BitIter, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Neighborhood {
    Open,
    Closed,
}

pub(crate) struct CappedPacking<'g> {
    graph: &'g Graph,
    hood: Neighborhood,
    caps: Vec<i64>,
}

impl<'g> CappedPacking<'g> {
    pub(crate) fn new(graph: &'g Graph, hood: Neighborhood, caps: Vec<i64>) -> Self {
        debug_assert_eq!(caps.len(), graph.n());
        Self { graph, hood, caps }
    }

    fn mask(&self, v: usize) -> u64 {
        match self.hood {
            Neighborhood::Open => self.graph.neighbors(v),
            Neighborhood::Closed => self.graph.closed_neighbors(v),
        }
    }

    /// Maximum feasible set, or `None` when even the empty set violates a cap.
    ///
    /// Vertices are branched in descending degree order (ties by index) with
    /// the include branch first; the first optimum met is returned.
    pub(crate) fn solve(&self) -> Option<u64> {
        if self.caps.iter().any(|&c| c < 0) {
            return None;
        }
        let n = self.graph.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.graph.degree(v)), v));
        // Symmetric: `u` lies in `M_v` iff `v` lies in `M_u`.
        let masks: Vec<u64> = (0..n).map(|v| self.mask(v)).collect();

        let mut free = self.graph.all();
        for (mask, &cap) in masks.iter().zip(&self.caps) {
            if cap == 0 {
                free &= !mask;
            }
        }
        let mut search = Search { order, masks, remaining: self.caps.clone(), best_size: -1, best: 0 };
        search.descend(0, 0, free);
        Some(search.best)
    }
}

struct Search {
    order: Vec<usize>,
    masks: Vec<u64>,
    remaining: Vec<i64>,
    best_size: i64,
    best: u64,
}

impl Search {
    fn upper_bound(&self, chosen_len: i64, free: u64) -> i64 {
        let mut excess = 0i64;
        for (v, &mask) in self.masks.iter().enumerate() {
            let over = (mask & free).count_ones() as i64 - self.remaining[v];
            excess = excess.max(over);
        }
        chosen_len + free.count_ones() as i64 - excess
    }

    fn descend(&mut self, chosen: u64, chosen_len: i64, free: u64) {
        if free == 0 {
            if chosen_len > self.best_size {
                self.best_size = chosen_len;
                self.best = chosen;
            }
            return;
        }
        if self.upper_bound(chosen_len, free) <= self.best_size {
            return;
        }
        let u = *self.order.iter().find(|&&v| free & bit(v) != 0).expect("free is non-empty");

        let mut next_free = free & !bit(u);
        for v in BitIter(self.masks[u]) {
            self.remaining[v] -= 1;
            if self.remaining[v] == 0 {
                next_free &= !self.masks[v];
            }
        }
        self.descend(chosen | bit(u), chosen_len + 1, next_free);
        for v in BitIter(self.masks[u]) {
            self.remaining[v] += 1;
        }

        self.descend(chosen, chosen_len, free & !bit(u));
    }
}
