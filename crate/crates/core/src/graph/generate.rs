use arrayvec::ArrayVec;
use rand::seq::SliceRandom;

use super::{CubicGraph, GraphError, Neighbors};
use crate::seeded_rng;

/// Samples a simple cubic graph on `n` vertices from the pairing model,
/// resampling the whole pairing whenever it produces a loop or a repeated
/// edge. The acceptance probability tends to `exp(-2)`.
pub fn generate_random_cubic(n: usize, seed: u64) -> Result<CubicGraph, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::InvalidOrder(n));
    }
    let mut rng = seeded_rng(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'attempt: loop {
        points.shuffle(&mut rng);
        let mut adj: Vec<Neighbors> = vec![ArrayVec::new(); n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(&v) {
                continue 'attempt;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        return Ok(CubicGraph::from_adjacency(adj));
    }
}
