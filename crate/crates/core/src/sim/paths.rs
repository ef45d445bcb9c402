use serde::Serialize;

use super::{Color, ColorState};
use crate::graph::{CubicGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    OneOne,
    OneThree,
    ThreeThree,
    Cycle,
}

/// A maximal white path whose inner vertices have white-degree two, or a
/// white cycle of degree-two vertices.
///
/// Paths list both endpoints, oriented so the sequence is lexicographically
/// no larger than its reverse. The two endpoints coincide for a path that
/// leaves a degree-three vertex and returns to it. Cycles list each vertex
/// once, starting at the smallest and heading to its smaller neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WhitePath {
    pub kind: PathKind,
    pub vertices: Vec<Vertex>,
}

impl WhitePath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        match self.kind {
            PathKind::Cycle => self.vertices.len(),
            _ => self.vertices.len() - 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertices strictly between the endpoints (all vertices for a cycle).
    pub fn inner(&self) -> &[Vertex] {
        match self.kind {
            PathKind::Cycle => &self.vertices,
            _ => &self.vertices[1..self.vertices.len() - 1],
        }
    }
}

fn other_white(g: &CubicGraph, s: &ColorState, v: Vertex, not: Vertex) -> Vertex {
    *g.neighbors(v)
        .iter()
        .find(|&&x| x != not && s.color(x) == Color::White)
        .expect("white-degree two vertex has a second white neighbour")
}

/// All white paths and cycles of `state`, in canonical order (sorted by
/// vertex sequence, so by smallest endpoint first).
pub fn classify_paths(g: &CubicGraph, state: &ColorState) -> Vec<WhitePath> {
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        let dv = state.white_degree(v);
        if state.color(v) != Color::White || !(dv == 1 || dv == 3) {
            continue;
        }
        for &u in g.neighbors(v) {
            if state.color(u) != Color::White {
                continue;
            }
            let mut seq = vec![v];
            let (mut prev, mut cur) = (v, u);
            while state.white_degree(cur) == 2 {
                seq.push(cur);
                on_path[cur] = true;
                let next = other_white(g, state, cur, prev);
                prev = cur;
                cur = next;
            }
            seq.push(cur);
            if seq.iter().le(seq.iter().rev()) {
                let ends = (state.white_degree(v), state.white_degree(cur));
                let kind = match ends {
                    (1, 1) => PathKind::OneOne,
                    (3, 3) => PathKind::ThreeThree,
                    _ => PathKind::OneThree,
                };
                out.push(WhitePath { kind, vertices: seq });
            }
        }
    }
    for s in 0..n {
        if on_path[s] || state.color(s) != Color::White || state.white_degree(s) != 2 {
            continue;
        }
        let start_next = other_white(g, state, s, usize::MAX);
        let mut seq = vec![s];
        on_path[s] = true;
        let (mut prev, mut cur) = (s, start_next);
        while cur != s {
            seq.push(cur);
            on_path[cur] = true;
            let next = other_white(g, state, cur, prev);
            prev = cur;
            cur = next;
        }
        out.push(WhitePath { kind: PathKind::Cycle, vertices: seq });
    }
    out.sort_unstable_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}
