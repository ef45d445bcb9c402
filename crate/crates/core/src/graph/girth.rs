use std::collections::VecDeque;

use serde::Serialize;

use super::{CubicGraph, Vertex};

/// Shortest cycle and shortest odd cycle with witnesses.
///
/// `None` stands for infinity (no cycle, or bipartite).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthReport {
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth_witness: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_witness: Option<Vec<Vertex>>,
}

impl GirthReport {
    /// Drops witnesses, leaving only the two lengths.
    pub fn without_witnesses(mut self) -> Self {
        self.girth_witness = None;
        self.odd_witness = None;
        self
    }
}

/// Reusable BFS scratch space with generation stamps, so repeated searches
/// cost only the size of the explored ball.
pub(crate) struct Bfs {
    stamp: Vec<u32>,
    generation: u32,
    pub(crate) dist: Vec<u32>,
    pub(crate) parent: Vec<Vertex>,
    pub(crate) queue: VecDeque<Vertex>,
}

impl Bfs {
    pub(crate) fn new(n: usize) -> Self {
        Self { stamp: vec![0; n], generation: 0, dist: vec![0; n], parent: vec![0; n], queue: VecDeque::new() }
    }

    pub(crate) fn reset(&mut self) {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.fill(0);
            self.generation = 1;
        }
        self.queue.clear();
    }

    pub(crate) fn seen(&self, v: Vertex) -> bool {
        self.stamp[v] == self.generation
    }

    pub(crate) fn visit(&mut self, v: Vertex, parent: Vertex, dist: u32) {
        self.stamp[v] = self.generation;
        self.parent[v] = parent;
        self.dist[v] = dist;
        self.queue.push_back(v);
    }

    /// Cycle closed by the non-tree edge `x`-`y`, found through the lowest
    /// common ancestor in the current BFS tree.
    pub(crate) fn cycle_through(&self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        let (mut a, mut b) = (x, y);
        let mut left = vec![a];
        let mut right = vec![b];
        while self.dist[a] > self.dist[b] {
            a = self.parent[a];
            left.push(a);
        }
        while self.dist[b] > self.dist[a] {
            b = self.parent[b];
            right.push(b);
        }
        while a != b {
            a = self.parent[a];
            b = self.parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        left.reverse();
        left
    }
}

/// Searches from `root` for cycles shorter than the current bests, stopping
/// once the BFS depth can no longer improve either.
fn scan_root(
    g: &CubicGraph,
    bfs: &mut Bfs,
    root: Vertex,
    best: &mut Option<Vec<Vertex>>,
    best_odd: &mut Option<Vec<Vertex>>,
    want_odd: bool,
) {
    let adj = g.adjacency();
    bfs.reset();
    bfs.visit(root, usize::MAX, 0);
    let limit = |best: &Option<Vec<Vertex>>| best.as_ref().map_or(usize::MAX, Vec::len);
    while let Some(x) = bfs.queue.pop_front() {
        let dx = bfs.dist[x] as usize;
        // Any cycle found from here has length at least 2*dx+1.
        let stop_even = 2 * dx + 1 >= limit(best);
        let stop_odd = !want_odd || 2 * dx + 1 >= limit(best_odd);
        if stop_even && stop_odd {
            break;
        }
        for &y in &adj[x] {
            if !bfs.seen(y) {
                bfs.visit(y, x, dx as u32 + 1);
            } else if bfs.parent[x] != y && bfs.parent[y] != x && (bfs.dist[y] as usize > dx || (bfs.dist[y] as usize == dx && x < y)) {
                let cyc = bfs.cycle_through(x, y);
                let len = cyc.len();
                if len % 2 == 1 && want_odd && len < limit(best_odd) {
                    *best_odd = Some(cyc.clone());
                }
                if len < limit(best) {
                    *best = Some(cyc);
                }
            }
        }
    }
}

fn is_bipartite(g: &CubicGraph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}

/// Exact girth and odd girth by breadth-first search from every vertex.
///
/// The shortest cycle and the shortest odd cycle are both isometric, so a
/// search rooted on one of them closes it through its antipodal edge.
pub fn girth(g: &CubicGraph) -> GirthReport {
    let want_odd = !is_bipartite(g);
    let mut bfs = Bfs::new(g.n());
    let mut best = None;
    let mut best_odd = None;
    for root in 0..g.n() {
        scan_root(g, &mut bfs, root, &mut best, &mut best_odd, want_odd);
    }
    GirthReport {
        girth: best.as_ref().map(Vec::len),
        odd_girth: best_odd.as_ref().map(Vec::len),
        girth_witness: best,
        odd_witness: best_odd,
    }
}

/// Girth alone, skipping the odd-cycle search.
pub fn shortest_cycle_len(g: &CubicGraph) -> Option<usize> {
    let mut bfs = Bfs::new(g.n());
    let mut best = None;
    let mut unused = None;
    for root in 0..g.n() {
        scan_root(g, &mut bfs, root, &mut best, &mut unused, false);
    }
    best.map(|c| c.len())
}

#[cfg(test)]
pub(crate) fn is_cycle_in(g: &CubicGraph, cycle: &[Vertex]) -> bool {
    let k = cycle.len();
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    k >= 3 && sorted.len() == k && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, named_graph};

    fn check(name: &str, girth_len: Option<usize>, odd: Option<usize>) {
        let g = named_graph(name).unwrap();
        let rep = girth(&g);
        assert_eq!((rep.girth, rep.odd_girth), (girth_len, odd), "{name}");
        if let Some(c) = &rep.girth_witness {
            assert!(is_cycle_in(&g, c), "{name} witness {c:?}");
        }
        if let Some(c) = &rep.odd_witness {
            assert!(is_cycle_in(&g, c) && c.len() % 2 == 1, "{name} odd witness {c:?}");
        }
        assert_eq!(shortest_cycle_len(&g), girth_len);
    }

    #[test]
    fn named_fixture_girths() {
        check("k4", Some(3), Some(3));
        check("prism", Some(3), Some(3));
        check("petersen", Some(5), Some(5));
        check("k33", Some(4), None);
        check("cube", Some(4), None);
        check("heawood", Some(6), None);
        check("pappus", Some(6), None);
        check("mcgee", Some(7), Some(7));
        check("tutte_coxeter", Some(8), None);
    }

    #[test]
    fn cycles_and_forests() {
        let c6 = cycle_graph(6);
        let rep = girth(&c6);
        assert_eq!((rep.girth, rep.odd_girth), (Some(6), None));
        let c7 = cycle_graph(7);
        assert_eq!(girth(&c7).odd_girth, Some(7));
        let path = CubicGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&path), GirthReport { girth: None, odd_girth: None, girth_witness: None, odd_witness: None });
    }

    #[test]
    fn odd_girth_beyond_girth() {
        // A 4-cycle and a 5-cycle sharing the edge 0-1.
        let g = CubicGraph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 1)]).unwrap();
        let rep = girth(&g);
        assert_eq!(rep.girth, Some(4));
        assert_eq!(rep.odd_girth, Some(5));
        assert!(is_cycle_in(&g, rep.odd_witness.as_ref().unwrap()));
    }
}
