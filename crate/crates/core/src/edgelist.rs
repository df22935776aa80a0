//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines, 0-based vertices)
//! ```
//!
//! A file may hold several graphs back to back; blank lines and lines
//! starting with `#` are skipped everywhere.

use crate::error::EdgeListError;
use crate::graph::Graph;

pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut graphs = Vec::new();
    while let Some((line, header)) = lines.next() {
        let (n, m) = two_ints(line, header)?;
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = lines.next().ok_or_else(|| EdgeListError {
                line,
                message: format!("expected {m} edge lines, found {}", pairs.len()),
            })?;
            let (u, v) = two_ints(line, text)?;
            if u >= n || v >= n || u == v {
                let e = Graph::from_edge_list(n, &[(u, v)]).unwrap_err();
                return Err(EdgeListError {
                    line,
                    message: e.to_string(),
                });
            }
            pairs.push((u, v));
        }
        let g = Graph::from_edge_list(n, &pairs).map_err(|e| EdgeListError {
            line,
            message: e.to_string(),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn two_ints(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let err = |message: String| EdgeListError { line, message };
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let field = fields.next().ok_or_else(|| err(format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| err(format!("{what} {field:?} is not a nonnegative integer")))
    };
    let pair = (next("first field")?, next("second field")?);
    if let Some(extra) = fields.next() {
        return Err(err(format!("unexpected field {extra:?}")));
    }
    Ok(pair)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    #[test]
    fn parses_multiple_graphs_with_comments() {
        let text = "# two graphs\n3 2\n0 1\n1 2\n\n# K2\n2 1\n1 0\n";
        let gs = parse_edge_lists(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0], family(Family::Path, 3).unwrap());
        assert_eq!(gs[1].m(), 1);
    }

    #[test]
    fn round_trips() {
        let g = family(Family::Cycle, 6).unwrap();
        assert_eq!(parse_edge_lists(&to_edge_list(&g)).unwrap(), vec![g]);
    }

    #[test]
    fn reports_line_numbers() {
        // A short block is reported at its header.
        let e = parse_edge_lists("3 2\n0 1\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_edge_lists("# c\n3 1\n0 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_edge_lists("3 1\n0 5\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("out of range"));
        let e = parse_edge_lists("3 1 7\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_edge_lists("2 1\n1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
    }
}
