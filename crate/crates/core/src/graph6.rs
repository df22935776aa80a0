//! graph6 encoding for graphs with at most 62 vertices.
//!
//! Layout: one byte `n + 63`, then the upper-triangle bits in column order
//! `x01, x02, x12, x03, x13, x23, ..` packed six to a byte, big-endian
//! within the byte, each byte offset by 63, zero padded.

use crate::error::{Graph6Error, Graph6ErrorKind};
use crate::graph::{pair_index, Builder, Graph};

pub const MAX_GRAPH6_N: usize = 62;

const HEADER: &str = ">>graph6<<";

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g`; `None` when `g.n() > 62`.
pub fn to_graph6(g: &Graph) -> Option<String> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return None;
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.pair_bit(pair_index(n, i, j)));
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
    Some(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored; offsets count from the start of `text`.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    let err = |offset: usize, kind| Graph6Error {
        offset: base + offset,
        kind,
    };

    let (&first, payload) = bytes.split_first().ok_or(err(0, Graph6ErrorKind::Empty))?;
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, Graph6ErrorKind::BadChar(bytes[pos])));
    }
    if first == 126 {
        return Err(err(0, Graph6ErrorKind::Unsupported));
    }
    let n = usize::from(first - 63);
    if n == 0 {
        return Err(err(0, Graph6ErrorKind::NoVertices));
    }
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: payload.len(),
            },
        ));
    }
    if payload.len() > expected {
        return Err(err(1 + expected, Graph6ErrorKind::Trailing));
    }

    let pairs = n * (n - 1) / 2;
    let bit = |q: usize| (payload[q / 6] - 63) >> (5 - q % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(err(expected, Graph6ErrorKind::Padding));
    }

    let mut b = Builder::new(n).expect("n >= 1");
    let mut q = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(q) {
                b.set_pair(i, j, pair_index(n, i, j));
            }
            q += 1;
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    #[test]
    fn decode_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), family(Family::Complete, 4).unwrap());
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.n(), e2.m()), (2, 0));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().m(), 6);
    }

    #[test]
    fn encode_matches_reference_strings() {
        // petgraph's test graph: a-c, a-e, b-d, d-e on 5 vertices.
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(to_graph6(&family(Family::Complete, 4).unwrap()).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn column_order_differs_from_row_major() {
        // Single edge (1,2) on 4 vertices: column-order bit 2 -> 001000.
        let g = Graph::from_edge_list(4, &[(1, 2)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "CG");
        assert_eq!(parse_graph6("CG").unwrap(), g);
    }

    #[test]
    fn error_offsets() {
        let e = parse_graph6("").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::Empty);

        let e = parse_graph6("C~ ~").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::BadChar(b' ')));

        let e = parse_graph6("E~").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::Truncated { expected: 3, found: 1 }));

        let e = parse_graph6("C~~").unwrap_err();
        assert_eq!((e.offset, e.kind), (2, Graph6ErrorKind::Trailing));

        let e = parse_graph6("A`").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::Padding);

        assert_eq!(parse_graph6("?").unwrap_err().kind, Graph6ErrorKind::NoVertices);
        assert_eq!(parse_graph6("~???").unwrap_err().kind, Graph6ErrorKind::Unsupported);
        assert!(to_graph6(&Graph::empty(63).unwrap()).is_none());
    }
}
