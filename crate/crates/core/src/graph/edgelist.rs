use std::fmt::Write;

use super::{CubicGraph, GraphError};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let err = |message: String| GraphError::Parse { line: lineno, message };
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = fields.next().ok_or_else(|| err(format!("expected two integers, got {line:?}")))?;
        tok.parse().map_err(|_| err(format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if let Some(extra) = fields.next() {
        return Err(err(format!("unexpected trailing field {extra:?}")));
    }
    Ok(pair)
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
///
/// Blank lines and lines starting with `#` are ignored. Line numbers in
/// errors are 1-based.
pub fn load_edge_list(text: &str) -> Result<CubicGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(GraphError::Parse { line: 0, message: "missing header".into() })?;
    let (n, m) = parse_pair(header, hline)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(GraphError::Parse { line: lineno, message: format!("more than the declared {m} edges") });
        }
        let (u, v) = parse_pair(line, lineno)?;
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::Parse { line: lineno, message: format!("vertex {x} out of range for n = {n}") });
            }
        }
        edges.push((u, v));
        last_line = lineno;
    }
    if edges.len() != m {
        return Err(GraphError::Parse { line: last_line, message: format!("expected {m} edges, found {}", edges.len()) });
    }
    CubicGraph::from_edges(n, edges)
}

/// Writes the canonical edge list: header, then edges `u < v` in sorted order.
pub fn save_edge_list(g: &CubicGraph) -> String {
    let mut out = String::with_capacity(12 * g.m() + 16);
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
