//! Support-vertex structure of trees, the leaf-based STDF, and membership in
//! the family of trees attaining `γ_st(T) = n - 2(s - s')`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, VertexSet};
use crate::solvers::SignedFunction;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    /// `S(T)`
    pub supports: VertexSet,
    /// `L(T)`
    pub leaves: VertexSet,
    /// `L_u` for every support `u`.
    pub leaf_map: BTreeMap<usize, VertexSet>,
    pub s: usize,
    /// Supports of degree exactly two.
    pub s_prime: usize,
    /// Smallest adjacent leaf of every support whose degree is not two.
    pub l_prime: VertexSet,
    /// `K_2`: both ends are degree-one supports of each other, and `-1` on
    /// `L'` would not be an STDF.
    pub degenerate: bool,
}

impl TreeProfile {
    /// `n - 2(s - s')`.
    pub fn bound(&self) -> i64 {
        self.leaves.universe() as i64 - 2 * (self.s as i64 - self.s_prime as i64)
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.n() < 2 {
        return Err(Error::Precondition("tree needs at least two vertices".into()));
    }
    if !t.is_tree() {
        return Err(Error::Precondition("graph is not a tree".into()));
    }
    Ok(())
}

pub fn tree_profile(t: &Graph) -> Result<TreeProfile> {
    require_tree(t)?;
    let n = t.n();
    let leaves = VertexSet::from_vertices(n, t.vertices().filter(|&v| t.degree(v) == 1))?;
    let mut leaf_map = BTreeMap::new();
    for u in t.vertices() {
        let own = t.neighbors(u) & leaves.bits();
        if own != 0 {
            leaf_map.insert(u, VertexSet::from_bits(n, own)?);
        }
    }
    let supports = VertexSet::from_vertices(n, leaf_map.keys().copied())?;
    let s_prime = supports.iter().filter(|&u| t.degree(u) == 2).count();
    let l_prime = VertexSet::from_vertices(
        n,
        leaf_map.iter().filter(|(&u, _)| t.degree(u) != 2).map(|(_, l)| l.first().expect("supports have a leaf")),
    )?;
    Ok(TreeProfile { s: supports.len(), supports, leaves, leaf_map, s_prime, l_prime, degenerate: n == 2 })
}

/// `-1` exactly on `L'`; all `+1` for `K_2`.
pub fn tree_stdf(t: &Graph) -> Result<SignedFunction> {
    let p = tree_profile(t)?;
    Ok(if p.degenerate { SignedFunction::all_positive(t.n()) } else { SignedFunction::from_negatives(p.l_prime) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaCondition {
    /// A support with at least two leaves has degree above four.
    A,
    /// A vertex that is neither support nor leaf has no neighbour that is a
    /// support or has degree two.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaVerdict {
    pub member: bool,
    pub violations: Vec<(OmegaCondition, usize)>,
}

pub fn omega_membership(t: &Graph) -> Result<OmegaVerdict> {
    let p = tree_profile(t)?;
    let mut violations = Vec::new();
    for (&u, l) in &p.leaf_map {
        if l.len() >= 2 && t.degree(u) > 4 {
            violations.push((OmegaCondition::A, u));
        }
    }
    let inner = p.supports.complement().bits() & p.leaves.complement().bits();
    for v in BitIter(inner) {
        let ok = BitIter(t.neighbors(v)).any(|w| p.supports.contains(w) || t.degree(w) == 2);
        if !ok {
            violations.push((OmegaCondition::B, v));
        }
    }
    Ok(OmegaVerdict { member: violations.is_empty(), violations })
}
