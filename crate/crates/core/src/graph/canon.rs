//! Canonical labelling by equitable-partition refinement plus individualisation.
//!
//! Every leaf of the search tree induces a labelling; the one giving the
//! lexicographically smallest adjacency rows wins. No automorphism pruning,
//! which is fine for the vertex counts this crate enumerates (n <= 16).

use super::{bit, BitIter, Graph};

type Cells = Vec<Vec<usize>>;

/// Relabels `g` into a form shared by exactly the graphs isomorphic to it.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let mut by_degree: Vec<usize> = g.vertices().collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let mut cells: Cells = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == g.degree(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    let (_, perm) = best.expect("search visits at least one leaf");
    g.permuted(&perm).expect("search yields a permutation")
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.n()];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let rows = relabelled_rows(g, &perm);
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, perm));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (masks.iter().map(|&m| (g.neighbors(v) & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn relabelled_rows(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.n()];
    for v in g.vertices() {
        for u in BitIter(g.neighbors(v)) {
            rows[perm[v]] |= bit(perm[u]);
        }
    }
    rows
}
