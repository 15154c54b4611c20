//! graph6 encoding for graphs with at most 62 vertices.
//!
//! The header byte is `n + 63`. The upper triangle is read column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian into 6-bit groups,
//! each emitted as `value + 63` and zero-padded to a full group.

use super::{bit, Graph};
use crate::error::{Error, Result};

const MAX_SHORT_N: usize = 62;

pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let text = trim_ascii(text);
    let (&header, body) = text.split_first().ok_or_else(|| Error::Malformed("empty graph6 string".into()))?;
    check_byte(header)?;
    let n = (header - 63) as usize;
    if n > MAX_SHORT_N {
        return Err(Error::UnsupportedSize("graph6 headers for more than 62 vertices are not supported".into()));
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() < bytes_needed {
        return Err(Error::Malformed(format!(
            "truncated graph6 body: expected {bytes_needed} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > bytes_needed {
        return Err(Error::Malformed(format!("graph6 body has {} trailing bytes", body.len() - bytes_needed)));
    }
    for &b in body {
        check_byte(b)?;
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = body[k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(Error::UnsupportedSize(format!("graph6 output supports at most {MAX_SHORT_N} vertices, got {n}")));
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits_needed.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

fn check_byte(b: u8) -> Result<()> {
    if (63..=126).contains(&b) {
        Ok(())
    } else {
        Err(Error::Malformed(format!("byte {b:#04x} outside the graph6 range 63..=126")))
    }
}

fn trim_ascii(mut s: &[u8]) -> &[u8] {
    while let [rest @ .., last] = s {
        if last.is_ascii_whitespace() {
            s = rest;
        } else {
            break;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_and_edge() {
        let k1 = from_graph6(b"@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(to_graph6(&k1).unwrap(), "@");

        let k2 = from_graph6(b"A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
    }

    #[test]
    fn hand_decoded_five_vertex_graph() {
        // 'D' -> n = 5; '?' -> 000000, '{' -> 111100.
        // Bit order x01 x02 x12 x03 x13 x23 x04 x14 x24 x34:
        // 0 0 0 0 0 0 1 1 1 1, so vertex 4 joins 0..3.
        let g = from_graph6(b"D?{").unwrap();
        let star = Graph::from_edge_list(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, star);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn empty_graph_zero_vertices() {
        let g = from_graph6(b"?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(to_graph6(&g).unwrap(), "?");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(from_graph6(b""), Err(Error::Malformed(_))));
        assert!(matches!(from_graph6(b"D?"), Err(Error::Malformed(_))));
        assert!(matches!(from_graph6(b"A "), Err(Error::Malformed(_))));
        assert!(matches!(from_graph6(b"A\x1f"), Err(Error::Malformed(_))));
        assert!(matches!(from_graph6(b"A_?"), Err(Error::Malformed(_))));
        assert!(matches!(from_graph6(b"~??"), Err(Error::UnsupportedSize(_))));
    }

    #[test]
    fn trailing_newline_tolerated() {
        assert_eq!(from_graph6(b"A_\n").unwrap().m(), 1);
    }
}
