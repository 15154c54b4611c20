//! Exact invariants with witnesses, definitional predicates, and an
//! exhaustive oracle for the signed total domination number.

mod bnb;
mod predicates;
mod signed;
mod stats;

use std::sync::OnceLock;

use serde::Serialize;

pub use predicates::{is_limited_packing, is_open_packing, is_tds, is_tlp, is_tuple_tds, is_valid_stdf};
pub use signed::SignedFunction;
pub use stats::{partition_stats, PartitionStats};

use bnb::{CappedPacking, Neighborhood};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::scalar::floor_div;

/// Default vertex cap for the exponential solvers.
pub const DEFAULT_SOLVER_MAX_N: usize = 32;
/// Largest graph the exhaustive oracle accepts.
pub const ORACLE_MAX_N: usize = 24;

/// Vertex cap for the solvers, overridable through `SIGDOM_MAX_N` (at most 64).
pub fn solver_max_n() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("SIGDOM_MAX_N")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map_or(DEFAULT_SOLVER_MAX_N, |n| n.min(MAX_VERTICES))
    })
}

fn check_size(g: &Graph) -> Result<()> {
    let cap = solver_max_n();
    if g.n() > cap {
        return Err(Error::UnsupportedSize(format!(
            "{} vertices exceeds the solver cap of {cap} (set SIGDOM_MAX_N to raise it)",
            g.n()
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(VertexSet),
    Signs(SignedFunction),
}

impl Witness {
    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Witness::Set(s) => Some(s),
            Witness::Signs(_) => None,
        }
    }

    pub fn as_signs(&self) -> Option<&SignedFunction> {
        match self {
            Witness::Signs(f) => Some(f),
            Witness::Set(_) => None,
        }
    }
}

/// Value of one invariant together with a witness attaining it.
///
/// Infeasible instances (no STDF, no total dominating set, `δ < k` for tuple
/// domination) carry neither value nor witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub name: String,
    pub feasible: bool,
    pub value: Option<i64>,
    pub witness: Option<Witness>,
}

impl InvariantResult {
    fn found(name: impl Into<String>, value: i64, witness: Witness) -> Self {
        Self { name: name.into(), feasible: true, value: Some(value), witness: Some(witness) }
    }

    fn infeasible(name: impl Into<String>) -> Self {
        Self { name: name.into(), feasible: false, value: None, witness: None }
    }

    /// The value, panicking on infeasible results.
    pub fn expect_value(&self) -> i64 {
        self.value.unwrap_or_else(|| panic!("{} is infeasible", self.name))
    }

    pub fn set(&self) -> Option<VertexSet> {
        self.witness.as_ref().and_then(Witness::as_set).copied()
    }

    pub fn signs(&self) -> Option<SignedFunction> {
        self.witness.as_ref().and_then(Witness::as_signs).copied()
    }
}

fn packing(g: &Graph, hood: Neighborhood, caps: Vec<i64>) -> Option<VertexSet> {
    CappedPacking::new(g, hood, caps)
        .solve()
        .map(|bits| VertexSet::from_bits(g.n(), bits).expect("solver stays inside the graph"))
}

fn degree_caps(g: &Graph, f: impl Fn(i64) -> i64) -> Vec<i64> {
    g.vertices().map(|v| f(g.degree(v) as i64)).collect()
}

/// Signed total domination number `γ_st`.
///
/// Solved as the largest `V_-` with `|N(v) ∩ V_-| <= ⌈deg(v)/2⌉ - 1`, which is
/// exactly `f(N(v)) >= 1`.
pub fn gamma_st(g: &Graph) -> Result<InvariantResult> {
    check_size(g)?;
    let caps = degree_caps(g, |d| floor_div(d - 1, 2));
    Ok(match packing(g, Neighborhood::Open, caps) {
        Some(neg) => {
            let f = SignedFunction::from_negatives(neg);
            InvariantResult::found("gamma_st", f.weight(), Witness::Signs(f))
        }
        None => InvariantResult::infeasible("gamma_st"),
    })
}

/// Total domination number `γ_t`.
pub fn gamma_t(g: &Graph) -> Result<InvariantResult> {
    let mut r = tuple(g, 1)?;
    r.name = "gamma_t".into();
    Ok(r)
}

/// `k`-tuple total domination number `γ_{×k,t}`; feasible iff `δ >= k`.
pub fn gamma_tuple_t(g: &Graph, k: usize) -> Result<InvariantResult> {
    if k == 0 {
        return Err(Error::Precondition("tuple total domination needs k >= 1".into()));
    }
    tuple(g, k)
}

fn tuple(g: &Graph, k: usize) -> Result<InvariantResult> {
    check_size(g)?;
    let name = format!("gamma_x{k}_t");
    let caps = degree_caps(g, |d| d - k as i64);
    Ok(match packing(g, Neighborhood::Open, caps) {
        Some(outside) => {
            let d = outside.complement();
            InvariantResult::found(name, d.len() as i64, Witness::Set(d))
        }
        None => InvariantResult::infeasible(name),
    })
}

/// Open packing number `ρ_o`.
pub fn rho_open(g: &Graph) -> Result<InvariantResult> {
    let mut r = total_limited_packing(g, 1)?;
    r.name = "rho_o".into();
    Ok(r)
}

/// `k`-limited packing number `L_k` (closed neighbourhoods).
pub fn limited_packing(g: &Graph, k: usize) -> Result<InvariantResult> {
    if k == 0 {
        return Err(Error::Precondition("limited packing needs k >= 1".into()));
    }
    check_size(g)?;
    let set = packing(g, Neighborhood::Closed, vec![k as i64; g.n()]).expect("caps are non-negative");
    Ok(InvariantResult::found(format!("L_{k}"), set.len() as i64, Witness::Set(set)))
}

/// `k`-total limited packing number `L_{k,t}` (open neighbourhoods), `k >= 0`.
pub fn total_limited_packing(g: &Graph, k: usize) -> Result<InvariantResult> {
    check_size(g)?;
    let set = packing(g, Neighborhood::Open, vec![k as i64; g.n()]).expect("caps are non-negative");
    Ok(InvariantResult::found(format!("L_{k}_t"), set.len() as i64, Witness::Set(set)))
}

/// `γ_st` by trying all `2^n` sign assignments. Independent of the
/// branch-and-bound path; intended for cross-checks.
pub fn oracle_gamma_st(g: &Graph) -> Result<InvariantResult> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::UnsupportedSize(format!(
            "the exhaustive oracle handles at most {ORACLE_MAX_N} vertices, got {n}"
        )));
    }
    let nbrs: Vec<Vec<usize>> = g.vertices().map(|v| crate::graph::BitIter(g.neighbors(v)).collect()).collect();
    let mut best: Option<(i64, u64)> = None;
    let mut signs = vec![1i64; n];
    for neg in 0u64..(1u64 << n) {
        for (v, s) in signs.iter_mut().enumerate() {
            *s = if neg >> v & 1 == 1 { -1 } else { 1 };
        }
        let valid = nbrs.iter().all(|nv| nv.iter().map(|&u| signs[u]).sum::<i64>() >= 1);
        if valid {
            let w: i64 = signs.iter().sum();
            if best.is_none_or(|(b, _)| w < b) {
                best = Some((w, neg));
            }
        }
    }
    Ok(match best {
        Some((w, neg)) => {
            let f = SignedFunction::from_negatives(VertexSet::from_bits(n, neg)?);
            InvariantResult::found("gamma_st", w, Witness::Signs(f))
        }
        None => InvariantResult::infeasible("gamma_st"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, heawood, Family};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    fn value(r: Result<InvariantResult>) -> i64 {
        r.unwrap().expect_value()
    }

    #[test]
    fn gamma_st_of_cycles_is_order() {
        for n in 3..=10 {
            assert_eq!(value(gamma_st(&fam(Family::Cycle(n)))), n as i64);
        }
    }

    #[test]
    fn gamma_st_of_even_cliques_is_two() {
        for k in 2..=4 {
            assert_eq!(value(gamma_st(&fam(Family::Complete(2 * k)))), 2);
        }
    }

    #[test]
    fn heawood_values() {
        let h = heawood();
        let st = gamma_st(&h).unwrap();
        assert_eq!(st.expect_value(), 10);
        assert!(is_valid_stdf(&h, &st.signs().unwrap()));
        let d = gamma_tuple_t(&h, 2).unwrap();
        assert_eq!(d.expect_value(), 12);
        assert!(is_tuple_tds(&h, &d.set().unwrap(), 2));
    }

    #[test]
    fn total_domination_examples() {
        assert_eq!(value(gamma_t(&fam(Family::Complete(5)))), 2);
        assert_eq!(value(gamma_t(&fam(Family::Cycle(6)))), 4);
        assert_eq!(value(gamma_t(&fam(Family::Path(2)))), 2);
        assert_eq!(value(gamma_tuple_t(&fam(Family::Complete(4)), 2)), 3);
        let c7 = fam(Family::Cycle(7));
        assert_eq!(value(gamma_tuple_t(&c7, 1)), value(gamma_t(&c7)));
    }

    #[test]
    fn packing_examples() {
        assert_eq!(value(rho_open(&fam(Family::Complete(6)))), 1);
        assert_eq!(value(rho_open(&fam(Family::Path(4)))), 2);
        assert_eq!(value(rho_open(&Graph::empty(1).unwrap())), 1);
        assert_eq!(value(limited_packing(&fam(Family::Complete(5)), 1)), 1);
        assert_eq!(value(limited_packing(&fam(Family::Cycle(6)), 1)), 2);
        assert_eq!(value(total_limited_packing(&fam(Family::Cycle(6)), 1)), 2);
        assert_eq!(value(total_limited_packing(&fam(Family::Complete(4)), 1)), 1);
        let p = fam(Family::Petersen);
        assert_eq!(value(limited_packing(&p, 4)), 10);
        assert_eq!(value(total_limited_packing(&p, 4)), 10);
    }

    #[test]
    fn zero_cap_packing_keeps_only_isolated_vertices() {
        let g = Graph::from_edge_list(4, &[(0, 1)]).unwrap();
        let r = total_limited_packing(&g, 0).unwrap();
        assert_eq!(r.expect_value(), 2);
        assert_eq!(r.set().unwrap().to_vec(), vec![2, 3]);
    }

    #[test]
    fn infeasible_results_are_structured() {
        let k1 = Graph::empty(1).unwrap();
        assert!(!gamma_st(&k1).unwrap().feasible);
        assert!(!gamma_t(&k1).unwrap().feasible);
        assert!(!gamma_tuple_t(&fam(Family::Cycle(5)), 3).unwrap().feasible);
        assert!(!oracle_gamma_st(&k1).unwrap().feasible);
        assert!(gamma_tuple_t(&k1, 0).is_err());
        assert!(limited_packing(&k1, 0).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(value(oracle_gamma_st(&fam(Family::Cycle(5)))), 5);
        assert_eq!(value(oracle_gamma_st(&fam(Family::Complete(4)))), 2);
        assert_eq!(value(oracle_gamma_st(&heawood())), 10);
        assert!(oracle_gamma_st(&Graph::empty(25).unwrap()).is_err());
    }

    #[test]
    fn solver_cap_enforced() {
        let cap = solver_max_n();
        if cap < MAX_VERTICES {
            let big = Graph::empty(cap + 1).unwrap();
            assert!(matches!(gamma_st(&big), Err(Error::UnsupportedSize(_))));
        }
    }
}
