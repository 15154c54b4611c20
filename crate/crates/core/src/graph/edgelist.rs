//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`
//! (0-indexed, whitespace separated). Blank lines and `#` comments are skipped.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Malformed("missing `n m` header".into()))?;
    let [n, m] = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line).map(|[u, v]| (u, v))?);
    }
    if edges.len() != m {
        return Err(Error::Malformed(format!("header announces {m} edges but {} were listed", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line
        .split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| Error::Malformed(format!("`{tok}` is not a vertex index"))));
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok([a?, b?]),
        _ => Err(Error::Malformed(format!("expected two integers, got `{line}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n# tail\n2 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_mismatched_counts() {
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 1 2\n").is_err());
    }
}
