use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with their canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Path `0-1-...-(n-1)`.
    Path(usize),
    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    Cycle(usize),
    Complete(usize),
    /// Star with centre `0` and leaves `1..=k`.
    Star(usize),
    /// Parts are consecutive label ranges in the given order.
    CompleteMultipartite(Vec<usize>),
    Heawood,
    Petersen,
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            require(n >= 1, "path needs at least one vertex")?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Cycle(n) => {
            require(n >= 3, "cycle needs at least three vertices")?;
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Complete(n) => {
            require(n >= 1, "complete graph needs at least one vertex")?;
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::from_edge_list(n, &edges)
        }
        Family::Star(k) => {
            require(k >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::from_edge_list(k + 1, &edges)
        }
        Family::CompleteMultipartite(ref parts) => {
            require(!parts.is_empty(), "multipartite graph needs at least one part")?;
            require(parts.iter().all(|&p| p >= 1), "every part needs at least one vertex")?;
            let mut part_of = Vec::new();
            for (i, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, p));
            }
            let n = part_of.len();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges)
        }
        Family::Heawood => Ok(heawood()),
        Family::Petersen => Ok(petersen()),
    }
}

/// Heawood graph from LCF notation `[5, -5]^7`: the 14-cycle plus chords
/// `{i, i + 5 mod 14}` for even `i`.
pub fn heawood() -> Graph {
    let mut edges: Vec<_> = (0..14).map(|v| (v, (v + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    Graph::from_edge_list(14, &edges).expect("static construction")
}

/// Petersen graph: outer 5-cycle, inner pentagram, spokes `i -- i + 5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edge_list(10, &edges).expect("static construction")
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Malformed(msg.to_owned()))
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `P<n>`, `C<n>`, `K<n>`, `S<k>` (star with `k` leaves),
    /// `K<a>,<b>,...` (complete multipartite), `heawood`, `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("unknown graph family `{s}`"));
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "heawood" => return Ok(Family::Heawood),
            "petersen" => return Ok(Family::Petersen),
            _ => {}
        }
        let (kind, rest) = lower.split_at(lower.chars().next().ok_or_else(bad)?.len_utf8());
        let rest = rest.trim_start_matches('_');
        let nums: Vec<usize> =
            rest.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?;
        match (kind, nums.as_slice()) {
            ("p", [n]) => Ok(Family::Path(*n)),
            ("c", [n]) => Ok(Family::Cycle(*n)),
            ("k", [n]) => Ok(Family::Complete(*n)),
            ("s", [k]) => Ok(Family::Star(*k)),
            ("k", parts) if parts.len() >= 2 => Ok(Family::CompleteMultipartite(parts.to_vec())),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Star(k) => write!(f, "S{k}"),
            Family::CompleteMultipartite(parts) => {
                let parts: Vec<_> = parts.iter().map(usize::to_string).collect();
                write!(f, "K{}", parts.join(","))
            }
            Family::Heawood => f.write_str("heawood"),
            Family::Petersen => f.write_str("petersen"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heawood_structure() {
        let h = heawood();
        assert_eq!((h.n(), h.m()), (14, 21));
        assert_eq!(h.is_regular(), Some(3));
        assert_eq!(h.girth(), Some(6));
        assert!(h.is_bipartite());
        assert!(h.is_connected());
    }

    #[test]
    fn petersen_structure() {
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(p.is_regular(), Some(3));
        assert_eq!(p.girth(), Some(5));
        assert!(!p.is_bipartite());
    }

    #[test]
    fn small_families() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!((k4.m(), k4.is_regular()), (6, Some(3)));
        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert_eq!((c5.is_regular(), c5.girth()), (Some(2), Some(5)));
        let k33 = generate(&Family::CompleteMultipartite(vec![3, 3])).unwrap();
        assert_eq!((k33.m(), k33.is_regular()), (9, Some(3)));
        let star = generate(&Family::Star(3)).unwrap();
        assert_eq!((star.n(), star.degree(0)), (4, 3));
    }

    #[test]
    fn invalid_parameters() {
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::Path(0)).is_err());
        assert!(generate(&Family::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(generate(&Family::Star(0)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("K4".parse::<Family>().unwrap(), Family::Complete(4));
        assert_eq!("K3,3".parse::<Family>().unwrap(), Family::CompleteMultipartite(vec![3, 3]));
        assert_eq!("c7".parse::<Family>().unwrap(), Family::Cycle(7));
        assert_eq!("Heawood".parse::<Family>().unwrap(), Family::Heawood);
        assert_eq!("K_6".parse::<Family>().unwrap(), Family::Complete(6));
        assert!("Q3".parse::<Family>().is_err());
        assert!("K".parse::<Family>().is_err());
        for f in [Family::Path(3), Family::Star(4), Family::CompleteMultipartite(vec![1, 2, 3])] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
