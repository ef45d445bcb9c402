use rand::Rng as _;
use serde::Serialize;

use super::girth::Bfs;
use super::{shortest_cycle_len, CubicGraph, GraphError, Neighbors, Vertex};
use crate::seeded_rng;

/// Result of [`boost_girth`]. Missing the target is reported through
/// `reached`, not as an error.
#[derive(Debug, Clone, Serialize)]
pub struct BoostOutcome {
    #[serde(skip)]
    pub graph: CubicGraph,
    pub target_girth: usize,
    pub achieved_girth: Option<usize>,
    pub reached: bool,
    pub steps: usize,
    pub swaps: usize,
}

fn replace(list: &mut Neighbors, old: Vertex, new: Vertex) {
    let slot = list.iter_mut().find(|x| **x == old).expect("edge present");
    *slot = new;
}

/// Some cycle of length below `target` through `root`, if any.
fn short_cycle_at(adj: &[Neighbors], bfs: &mut Bfs, root: Vertex, target: usize) -> Option<Vec<Vertex>> {
    bfs.reset();
    bfs.visit(root, usize::MAX, 0);
    while let Some(x) = bfs.queue.pop_front() {
        let dx = bfs.dist[x] as usize;
        if 2 * dx + 1 >= target {
            break;
        }
        for &y in &adj[x] {
            if !bfs.seen(y) {
                bfs.visit(y, x, dx as u32 + 1);
            } else if bfs.parent[x] != y && bfs.parent[y] != x {
                let cyc = bfs.cycle_through(x, y);
                if cyc.len() < target {
                    return Some(cyc);
                }
            }
        }
    }
    None
}

/// True when the edge `a`-`c` lies on a cycle shorter than `target`, that
/// is, when `c` is within `target - 2` steps of `a` without using the edge.
fn edge_on_short_cycle(adj: &[Neighbors], bfs: &mut Bfs, a: Vertex, c: Vertex, target: usize) -> bool {
    bfs.reset();
    bfs.visit(a, usize::MAX, 0);
    while let Some(x) = bfs.queue.pop_front() {
        let dx = bfs.dist[x] as usize;
        if dx + 2 >= target {
            break;
        }
        for &y in &adj[x] {
            if x == a && y == c {
                continue;
            }
            if y == c {
                return true;
            }
            if !bfs.seen(y) {
                bfs.visit(y, x, dx as u32 + 1);
            }
        }
    }
    false
}

/// Removes cycles shorter than `target` by random double-edge swaps.
///
/// Vertices are visited once in index order. While a short cycle passes
/// through the current vertex, a random edge `ab` of it and a random edge
/// `cd` of the graph are rewired to `ac`, `bd` in a random orientation. A
/// swap is kept only if neither new edge lies on a short cycle, so the
/// number of short cycles strictly decreases with every kept swap and
/// vertices already visited stay clear. `max_steps` bounds the number of
/// attempted swaps.
pub fn boost_girth(g: &CubicGraph, target: usize, max_steps: usize, seed: u64) -> Result<BoostOutcome, GraphError> {
    g.require_cubic()?;
    let n = g.n();
    let mut adj = g.adjacency().to_vec();
    let mut rng = seeded_rng(seed);
    let mut bfs = Bfs::new(n);
    let (mut steps, mut swaps) = (0, 0);
    'vertices: for root in 0..n {
        while let Some(cycle) = short_cycle_at(&adj, &mut bfs, root, target) {
            if steps >= max_steps {
                break 'vertices;
            }
            steps += 1;
            let i = rng.random_range(0..cycle.len());
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let mut c = rng.random_range(0..n);
            let mut d = adj[c][rng.random_range(0..3)];
            if rng.random_bool(0.5) {
                std::mem::swap(&mut c, &mut d);
            }
            if c == a || c == b || d == a || d == b || adj[a].contains(&c) || adj[b].contains(&d) {
                continue;
            }
            replace(&mut adj[a], b, c);
            replace(&mut adj[b], a, d);
            replace(&mut adj[c], d, a);
            replace(&mut adj[d], c, b);
            if edge_on_short_cycle(&adj, &mut bfs, a, c, target) || edge_on_short_cycle(&adj, &mut bfs, b, d, target) {
                replace(&mut adj[a], c, b);
                replace(&mut adj[b], d, a);
                replace(&mut adj[c], a, d);
                replace(&mut adj[d], b, c);
            } else {
                swaps += 1;
            }
        }
    }
    let graph = CubicGraph::from_adjacency(adj);
    let achieved_girth = shortest_cycle_len(&graph);
    Ok(BoostOutcome {
        graph,
        target_girth: target,
        achieved_girth,
        reached: achieved_girth.is_none_or(|l| l >= target),
        steps,
        swaps,
    })
}

/// Exact number of cycles shorter than `target`, by enumeration. Intended
/// for small graphs and small targets.
pub fn count_short_cycles(g: &CubicGraph, target: usize) -> usize {
    fn extend(g: &CubicGraph, start: Vertex, path: &mut Vec<Vertex>, target: usize, count: &mut usize) {
        let last = *path.last().unwrap();
        for &y in g.neighbors(last) {
            if y == start && path.len() >= 3 {
                *count += 1;
            } else if y > start && !path.contains(&y) && path.len() + 1 < target {
                path.push(y);
                extend(g, start, path, target, count);
                path.pop();
            }
        }
    }
    let mut count = 0;
    let mut path = Vec::with_capacity(target);
    for s in 0..g.n() {
        path.push(s);
        extend(g, s, &mut path, target, &mut count);
        path.pop();
    }
    count / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_random_cubic, named_graph};

    #[test]
    fn counts_short_cycles_of_small_graphs() {
        let k4 = named_graph("k4").unwrap();
        assert_eq!(count_short_cycles(&k4, 4), 4);
        assert_eq!(count_short_cycles(&k4, 5), 7);
        let petersen = named_graph("petersen").unwrap();
        assert_eq!(count_short_cycles(&petersen, 5), 0);
        assert_eq!(count_short_cycles(&petersen, 6), 12);
    }

    #[test]
    fn unchanged_when_target_already_met() {
        let h = named_graph("heawood").unwrap();
        let out = boost_girth(&h, 6, 1000, 1).unwrap();
        assert_eq!(out.graph, h);
        assert!(out.reached);
        assert_eq!(out.steps, 0);
    }

    #[test]
    fn reaches_girth_eight_at_ten_thousand() {
        let g = generate_random_cubic(10_000, 5).unwrap();
        let out = boost_girth(&g, 8, 1_000_000, 6).unwrap();
        assert!(out.reached, "{out:?}");
        assert!(out.achieved_girth.unwrap() >= 8);
        assert_eq!(out.graph.degree_histogram(), [0, 0, 0, 10_000]);
        assert!(out.graph.validate().is_ok());
    }

    #[test]
    fn moore_bound_blocks_small_orders() {
        // A girth-20 cubic graph needs at least 2 * (2^10 - 1) vertices.
        let g = generate_random_cubic(50, 3).unwrap();
        let out = boost_girth(&g, 20, 20_000, 4).unwrap();
        assert!(!out.reached);
        assert!(out.achieved_girth.unwrap() < 20);
    }

    #[test]
    fn rejects_non_cubic_input() {
        let c = crate::graph::cycle_graph(5);
        assert!(matches!(boost_girth(&c, 6, 10, 0), Err(GraphError::NotCubic { .. })));
    }
}
