//! Explicit transformations between packings, dominating sets and signed
//! total dominating functions, the ladder steps between parameter levels,
//! and the tree construction with its equality test.

mod tree;

pub use tree::{omega_membership, tree_profile, tree_stdf, OmegaCondition, OmegaVerdict, TreeProfile};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::scalar::floor_div;
use crate::solvers::{is_tlp, is_tuple_tds, is_valid_stdf, SignedFunction};

/// Packing cap `⌊(δ - 1)/2⌋` at which a total limited packing turns into an
/// STDF. `None` when `δ = 0`.
pub fn stdf_packing_level(g: &Graph) -> Option<usize> {
    let delta = g.degree_profile().min_deg as i64;
    usize::try_from(floor_div(delta - 1, 2)).ok()
}

/// `-1` on `L`, `+1` elsewhere. Valid as an STDF whenever `δ >= 3`.
pub fn stdf_from_tlp(g: &Graph, l: &VertexSet) -> Result<SignedFunction> {
    let k = stdf_packing_level(g).ok_or_else(|| Error::Precondition("graph has an isolated vertex".into()))?;
    if !is_tlp(g, l, k) {
        return Err(Error::Precondition(format!("set is not a {k}-total limited packing")));
    }
    Ok(SignedFunction::from_negatives(*l))
}

/// Adds the smallest vertex outside `L`, turning a `k`-TLP into a `(k+1)`-TLP.
pub fn extend_tlp(g: &Graph, l: &VertexSet, k: usize) -> Result<VertexSet> {
    if !is_tlp(g, l, k) {
        return Err(Error::Precondition(format!("set is not a {k}-total limited packing")));
    }
    let u = l.complement().first().ok_or(Error::NoExtension)?;
    let mut out = *l;
    out.insert(u);
    Ok(out)
}

/// Drops the smallest member of `D`, turning a `k`-tuple TDS into a `(k-1)`-tuple TDS.
pub fn shrink_tuple_tds(g: &Graph, d: &VertexSet, k: usize) -> Result<VertexSet> {
    if k < 2 {
        return Err(Error::Precondition("shrinking needs k >= 2".into()));
    }
    if !is_tuple_tds(g, d, k) {
        return Err(Error::Precondition(format!("set is not a {k}-tuple total dominating set")));
    }
    let u = d.first().ok_or_else(|| Error::Precondition("empty set".into()))?;
    let mut out = *d;
    out.remove(u);
    Ok(out)
}

fn require_cubic(g: &Graph) -> Result<()> {
    if g.is_regular() == Some(3) {
        Ok(())
    } else {
        Err(Error::Precondition("graph is not 3-regular".into()))
    }
}

/// `+1` on a double total dominating set `D`, `-1` elsewhere; weight `2|D| - n`.
pub fn stdf_from_double_tds(g: &Graph, d: &VertexSet) -> Result<SignedFunction> {
    require_cubic(g)?;
    if !is_tuple_tds(g, d, 2) {
        return Err(Error::Precondition("set is not a double total dominating set".into()));
    }
    Ok(SignedFunction::from_negatives(d.complement()))
}

/// `V_+` of an STDF on a cubic graph; a double total dominating set of size `(n + f(V))/2`.
pub fn double_tds_from_stdf(g: &Graph, f: &SignedFunction) -> Result<VertexSet> {
    require_cubic(g)?;
    if !is_valid_stdf(g, f) {
        return Err(Error::Precondition("function is not a signed total dominating function".into()));
    }
    Ok(f.positives())
}
