//! Independent sets in cubic graphs of large odd girth via a two-factor.
//!
//! A bridgeless cubic graph splits into a perfect matching `M` and a
//! two-factor `F`. Deleting every `(g+1)/2`-th vertex of each cycle of `F`
//! leaves paths whose induced subgraphs are bipartite when the odd girth is
//! at least `g`; a random colour class of each, minus one endpoint of every
//! conflicting matching edge, is independent.

pub use num_rational::Ratio;
use rand::Rng as _;
use serde::Serialize;
use thiserror::Error;

use crate::cert::{coverage_of, CertError, CoverageReport};
use crate::graph::{girth, CubicGraph, GraphError, Vertex};
use crate::Rng;

/// Largest order accepted by [`find_two_factor`].
pub const TWO_FACTOR_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OddGirthError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph has the bridge {0}-{1}")]
    Bridge(Vertex, Vertex),
    #[error("no perfect matching found in a bridgeless cubic graph")]
    NoMatching,
    #[error("odd girth parameter {0} must be odd and at least 5")]
    InvalidOddGirth(usize),
    #[error("graph has odd girth {actual}, below the required {required}")]
    OddGirthTooSmall { required: usize, actual: usize },
    #[error("invalid two-factor: {0}")]
    InvalidTwoFactor(String),
    #[error("induced subgraph on {0:?} is not bipartite")]
    NonBipartiteComponent(Vec<Vertex>),
    #[error("output is not independent: edge {0}-{1}")]
    NotIndependent(Vertex, Vertex),
    #[error(transparent)]
    Cert(#[from] CertError),
}

/// Spanning cycles `F` and the complementary perfect matching `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoFactor {
    pub matching: Vec<(Vertex, Vertex)>,
    pub cycles: Vec<Vec<Vertex>>,
}

impl TwoFactor {
    /// Checks that the matching is perfect, the cycles cover every vertex
    /// once, and together they use every edge exactly once.
    pub fn validate(&self, g: &CubicGraph) -> Result<(), OddGirthError> {
        let bad = |m: String| Err(OddGirthError::InvalidTwoFactor(m));
        let n = g.n();
        let mut seen = vec![0u8; n];
        let mut edges = Vec::with_capacity(g.m());
        for &(u, v) in &self.matching {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return bad(format!("{u}-{v} is not an edge"));
            }
            seen[u] += 1;
            seen[v] += 1;
            edges.push((u.min(v), u.max(v)));
        }
        if let Some(v) = seen.iter().position(|&c| c != 1) {
            return bad(format!("vertex {v} is matched {} times", seen[v]));
        }
        seen.fill(0);
        for c in &self.cycles {
            for i in 0..c.len() {
                let (u, v) = (c[i], c[(i + 1) % c.len()]);
                if c.len() < 3 || u >= n || v >= n || !g.has_edge(u, v) {
                    return bad(format!("cycle {c:?} is not a cycle of the graph"));
                }
                seen[u] += 1;
                edges.push((u.min(v), u.max(v)));
            }
        }
        if let Some(v) = seen.iter().position(|&c| c != 1) {
            return bad(format!("vertex {v} lies on {} cycles", seen[v]));
        }
        edges.sort_unstable();
        if !edges.iter().copied().eq(g.edges()) {
            return bad("matching and cycles do not partition the edges".into());
        }
        Ok(())
    }
}

/// Some bridge of `g`, by the lowpoint method.
pub fn find_bridge(g: &CubicGraph) -> Option<(Vertex, Vertex)> {
    fn dfs(g: &CubicGraph, v: Vertex, parent: Vertex, t: &mut usize, disc: &mut [usize], low: &mut [usize]) -> Option<(Vertex, Vertex)> {
        *t += 1;
        disc[v] = *t;
        low[v] = *t;
        for &u in g.neighbors(v) {
            if u == parent {
                continue;
            }
            if disc[u] == 0 {
                if let Some(b) = dfs(g, u, v, t, disc, low) {
                    return Some(b);
                }
                low[v] = low[v].min(low[u]);
                if low[u] > disc[v] {
                    return Some((v.min(u), v.max(u)));
                }
            } else {
                low[v] = low[v].min(disc[u]);
            }
        }
        None
    }
    let n = g.n();
    let (mut disc, mut low, mut t) = (vec![0; n], vec![0; n], 0);
    (0..n).find_map(|r| if disc[r] == 0 { dfs(g, r, usize::MAX, &mut t, &mut disc, &mut low) } else { None })
}

fn match_rest(g: &CubicGraph, mate: &mut [Option<Vertex>]) -> bool {
    // Branch on the unmatched vertex with the fewest free neighbours.
    let free = |v: Vertex, mate: &[Option<Vertex>]| g.neighbors(v).iter().filter(|&&u| mate[u].is_none()).count();
    let Some(v) = (0..g.n()).filter(|&v| mate[v].is_none()).min_by_key(|&v| free(v, mate)) else {
        return true;
    };
    for &u in g.neighbors(v) {
        if mate[u].is_none() {
            mate[v] = Some(u);
            mate[u] = Some(v);
            if match_rest(g, mate) {
                return true;
            }
            mate[v] = None;
            mate[u] = None;
        }
    }
    false
}

/// Perfect matching of a bridgeless cubic graph by backtracking, and the
/// cycles of its complement.
pub fn find_two_factor(g: &CubicGraph) -> Result<TwoFactor, OddGirthError> {
    g.require_cubic()?;
    let n = g.n();
    if n > TWO_FACTOR_CAP {
        return Err(OddGirthError::TooLarge { n, cap: TWO_FACTOR_CAP });
    }
    if let Some((u, v)) = find_bridge(g) {
        return Err(OddGirthError::Bridge(u, v));
    }
    let mut mate = vec![None; n];
    if !match_rest(g, &mut mate) {
        return Err(OddGirthError::NoMatching);
    }
    let mate: Vec<Vertex> = mate.into_iter().map(Option::unwrap).collect();
    let matching = (0..n).filter(|&v| v < mate[v]).map(|v| (v, mate[v])).collect();
    let mut on_cycle = vec![false; n];
    let mut cycles = Vec::new();
    for s in 0..n {
        if on_cycle[s] {
            continue;
        }
        let mut cycle = vec![s];
        on_cycle[s] = true;
        let (mut prev, mut cur) = (s, *g.neighbors(s).iter().find(|&&u| u != mate[s]).unwrap());
        while cur != s {
            cycle.push(cur);
            on_cycle[cur] = true;
            let next = *g.neighbors(cur).iter().find(|&&u| u != mate[cur] && u != prev).unwrap();
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    let tf = TwoFactor { matching, cycles };
    debug_assert!(tf.validate(g).is_ok());
    Ok(tf)
}

fn check_parameter(g_odd: usize) -> Result<(), OddGirthError> {
    if g_odd < 5 || g_odd.is_multiple_of(2) {
        return Err(OddGirthError::InvalidOddGirth(g_odd));
    }
    Ok(())
}

/// Fails unless the odd girth of `g` is at least `g_odd`.
pub fn check_odd_girth(g: &CubicGraph, g_odd: usize) -> Result<(), OddGirthError> {
    check_parameter(g_odd)?;
    match girth(g).odd_girth {
        Some(actual) if actual < g_odd => Err(OddGirthError::OddGirthTooSmall { required: g_odd, actual }),
        _ => Ok(()),
    }
}

/// Segments left on one cycle after deleting positions `≡ k (mod h)`, with
/// positions numbered `1..=len`.
fn segments(cycle: &[Vertex], k: usize, h: usize) -> Vec<Vec<Vertex>> {
    let len = cycle.len();
    let removed: Vec<usize> = (0..len).filter(|&i| (i + 1) % h == k % h).collect();
    if removed.is_empty() {
        return vec![cycle.to_vec()];
    }
    let mut out = Vec::new();
    for (j, &a) in removed.iter().enumerate() {
        let b = removed[(j + 1) % removed.len()];
        let gap = (b + len - a - 1) % len;
        if gap > 0 {
            out.push((1..=gap).map(|d| cycle[(a + d) % len]).collect());
        }
    }
    out
}

/// Two-colouring of the subgraph induced by `part`, as `(class0, class1)`.
fn bipartition(g: &CubicGraph, part: &[Vertex], side: &mut [u8]) -> Result<(Vec<Vertex>, Vec<Vertex>), OddGirthError> {
    const IN: u8 = 2;
    const OUT: u8 = 3;
    for &v in part {
        side[v] = IN;
    }
    let mut classes = (Vec::new(), Vec::new());
    let mut stack = Vec::new();
    let mut result = Ok(());
    for &s in part {
        if side[s] != IN {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(x) = stack.pop() {
            if side[x] == 0 { classes.0.push(x) } else { classes.1.push(x) }
            for &y in g.neighbors(x) {
                if side[y] == IN {
                    side[y] = 1 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    result = Err(OddGirthError::NonBipartiteComponent(part.to_vec()));
                }
            }
        }
    }
    for &v in part {
        side[v] = OUT;
    }
    result.map(|_| classes)
}

/// One run of the randomized construction. Requires odd girth at least
/// `g_odd` (see [`check_odd_girth`]); a violation surfaces as a
/// non-bipartite component.
pub fn theorem_procedure(g: &CubicGraph, tf: &TwoFactor, g_odd: usize, rng: &mut Rng) -> Result<Vec<Vertex>, OddGirthError> {
    check_parameter(g_odd)?;
    let h = g_odd.div_ceil(2);
    let k = rng.random_range(1..=h);
    let mut side = vec![3u8; g.n()];
    let mut red = vec![false; g.n()];
    for cycle in &tf.cycles {
        for part in segments(cycle, k, h) {
            let (a, b) = bipartition(g, &part, &mut side)?;
            let chosen = if rng.random_bool(0.5) { a } else { b };
            for v in chosen {
                red[v] = true;
            }
        }
    }
    for &(u, v) in &tf.matching {
        if red[u] && red[v] {
            let drop = if rng.random_bool(0.5) { u } else { v };
            red[drop] = false;
        }
    }
    let set: Vec<Vertex> = (0..g.n()).filter(|&v| red[v]).collect();
    if let Some((u, v)) = g.find_edge_within(&set) {
        return Err(OddGirthError::NotIndependent(u, v));
    }
    Ok(set)
}

/// Coverage of `trials` runs of [`theorem_procedure`], trial `i` seeded with
/// `seed + i`. Every output is checked for independence.
pub fn theorem_coverage(
    g: &CubicGraph,
    tf: &TwoFactor,
    g_odd: usize,
    trials: u64,
    seed: u64,
) -> Result<CoverageReport, OddGirthError> {
    check_parameter(g_odd)?;
    tf.validate(g)?;
    coverage_of(g.n(), trials, seed, |rng| theorem_procedure(g, tf, g_odd, rng))
}

/// The guaranteed per-vertex coverage `3(1 - 2/(g+1))/8` and the matching
/// fractional chromatic bound `8/(3 - 6/(g+1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddGirthBound {
    pub coverage: Ratio<u64>,
    pub fractional: Ratio<u64>,
}

pub fn odd_girth_bound(g_odd: usize) -> Result<OddGirthBound, OddGirthError> {
    check_parameter(g_odd)?;
    let g = g_odd as u64;
    let coverage = Ratio::new(3 * (g - 1), 8 * (g + 1));
    Ok(OddGirthBound { coverage, fractional: coverage.recip() })
}

/// Limit of [`odd_girth_bound`] as the odd girth grows.
pub fn odd_girth_bound_limit() -> OddGirthBound {
    let coverage = Ratio::new(3, 8);
    OddGirthBound { coverage, fractional: coverage.recip() }
}
