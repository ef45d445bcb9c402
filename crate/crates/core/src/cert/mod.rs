//! Certificates derived from random independent sets: per-vertex coverage,
//! a fractional colouring bound and cuts, plus exact oracles for small graphs.

mod exact;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use exact::{exact_max_cut, exact_max_independent_set, MAX_CUT_CAP, MIS_CAP};

use crate::graph::{CubicGraph, Vertex};
use crate::seeded_rng;
use crate::sim::{run, SimError, SimParams};
use crate::stats::binomial_radius99;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("coverage lower confidence bound {lower} at vertex {vertex} is not positive")]
    InsufficientCoverage { vertex: Vertex, lower: f64 },
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("set is not independent: edge {0}-{1} has both ends in it")]
    NotIndependent(Vertex, Vertex),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error(transparent)]
    Sim(#[from] SimError),
}

/// How often each vertex landed in the sampled independent set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub trials: u64,
    pub min: f64,
    pub argmin: Vertex,
    pub mean: f64,
    /// 99% binomial radius at the minimising vertex.
    pub min_radius: f64,
    #[serde(skip)]
    pub counts: Vec<u64>,
}

impl CoverageReport {
    pub fn from_counts(counts: Vec<u64>, trials: u64) -> Result<Self, CertError> {
        if trials == 0 {
            return Err(CertError::NoTrials);
        }
        let t = trials as f64;
        let (argmin, &low) = counts.iter().enumerate().min_by_key(|&(_, c)| *c).unwrap_or((0, &0));
        let mean = if counts.is_empty() { 0.0 } else { counts.iter().sum::<u64>() as f64 / (t * counts.len() as f64) };
        let min = low as f64 / t;
        Ok(Self { trials, min, argmin, mean, min_radius: binomial_radius99(min, trials), counts })
    }

    pub fn frequency(&self, v: Vertex) -> f64 {
        self.counts[v] as f64 / self.trials as f64
    }

    /// 99% binomial confidence radius of the frequency at `v`.
    pub fn radius(&self, v: Vertex) -> f64 {
        binomial_radius99(self.frequency(v), self.trials)
    }

    pub fn per_vertex(&self) -> Vec<f64> {
        (0..self.counts.len()).map(|v| self.frequency(v)).collect()
    }

    /// Smallest lower confidence limit over all vertices and where it occurs.
    pub fn lower_confidence_min(&self) -> (Vertex, f64) {
        (0..self.counts.len())
            .map(|v| (v, self.frequency(v) - self.radius(v)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap_or((0, 0.0))
    }
}

/// Red-set coverage over `trials` runs of the procedure, trial `i` seeded
/// with `seed + i`.
pub fn monte_carlo_coverage(
    g: &CubicGraph,
    params: &SimParams,
    trials: u64,
    seed: u64,
) -> Result<CoverageReport, CertError> {
    coverage_of(g.n(), trials, seed, |rng| Ok(run(g, params, rng)?.state.red_set()))
}

/// Shared driver: counts how often each vertex appears in the sets produced
/// by `sample`. Integer sums keep the result independent of scheduling.
pub(crate) fn coverage_of<F, E>(n: usize, trials: u64, seed: u64, sample: F) -> Result<CoverageReport, E>
where
    F: Fn(&mut crate::Rng) -> Result<Vec<Vertex>, E> + Sync,
    E: From<CertError> + Send,
{
    if trials == 0 {
        return Err(CertError::NoTrials.into());
    }
    let counts = (0..trials)
        .into_par_iter()
        .try_fold(
            || vec![0u64; n],
            |mut acc, t| {
                let set = sample(&mut seeded_rng(seed.wrapping_add(t)))?;
                for v in set {
                    acc[v] += 1;
                }
                Ok::<_, E>(acc)
            },
        )
        .try_reduce(
            || vec![0u64; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok(CoverageReport::from_counts(counts, trials)?)
}

/// Conservative fractional chromatic bound `1 / (coverage - radius)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FractionalBound {
    pub bound: f64,
    pub lower_coverage: f64,
    pub vertex: Vertex,
}

/// `1 / (min - radius)`, failing when the denominator is not positive.
pub fn fractional_bound(min: f64, radius: f64, vertex: Vertex) -> Result<FractionalBound, CertError> {
    let lower = min - radius;
    if lower <= 0.0 {
        return Err(CertError::InsufficientCoverage { vertex, lower });
    }
    Ok(FractionalBound { bound: 1.0 / lower, lower_coverage: lower, vertex })
}

/// Fractional bound from the smallest per-vertex lower confidence limit.
pub fn fractional_upper_bound(report: &CoverageReport) -> Result<FractionalBound, CertError> {
    let (vertex, lower) = report.lower_confidence_min();
    fractional_bound(lower, 0.0, vertex)
}

/// A bipartition given by the vertices on one side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub size: usize,
    pub side: Vec<Vertex>,
}

impl Cut {
    /// Recounts the crossing edges, for verifying witnesses.
    pub fn recount(g: &CubicGraph, side: &[Vertex]) -> usize {
        let mut mark = vec![false; g.n()];
        side.iter().for_each(|&v| mark[v] = true);
        g.edges().filter(|&(u, v)| mark[u] != mark[v]).count()
    }
}

/// The cut between an independent set and the rest; every edge at the set
/// crosses, so its size is the sum of their degrees.
pub fn cut_from_independent_set(g: &CubicGraph, set: &[Vertex]) -> Result<Cut, CertError> {
    if let Some(&vertex) = set.iter().find(|&&v| v >= g.n()) {
        return Err(CertError::VertexOutOfRange { vertex, n: g.n() });
    }
    if let Some((u, v)) = g.find_edge_within(set) {
        return Err(CertError::NotIndependent(u, v));
    }
    let mut side = set.to_vec();
    side.sort_unstable();
    side.dedup();
    let size = side.iter().map(|&v| g.degree(v)).sum();
    Ok(Cut { size, side })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, named_graph};

    #[test]
    fn single_trial_frequencies_are_zero_or_one() {
        let g = named_graph("petersen").unwrap();
        let params = SimParams { p1: 0.3, p2: 0.3, rounds: 20 };
        let rep = monte_carlo_coverage(&g, &params, 1, 5).unwrap();
        assert!(rep.per_vertex().iter().all(|&f| f == 0.0 || f == 1.0));
        assert!(rep.min <= rep.mean);
    }

    #[test]
    fn k4_coverage_is_symmetric_and_bound_near_four() {
        let g = named_graph("k4").unwrap();
        let params = SimParams { p1: 0.9, p2: 0.5, rounds: 10 };
        let trials = 200_000;
        let rep = monte_carlo_coverage(&g, &params, trials, 1).unwrap();
        let f = rep.per_vertex();
        let mean = rep.mean;
        let sigma = crate::stats::binomial_sigma(mean, trials);
        for x in &f {
            assert!((x - mean).abs() <= 4.0 * sigma * 2f64.sqrt(), "{f:?}");
        }
        let b = fractional_upper_bound(&rep).unwrap();
        assert!(b.bound >= 1.0);
        assert_eq!(rep.per_vertex().len(), 4);
        // Each set holds at most one vertex of K4, so coverage sums to at most 1.
        assert!(f.iter().sum::<f64>() <= 1.0 + 1e-12);
    }

    #[test]
    fn fractional_bound_examples() {
        assert_eq!(fractional_bound(0.5, 0.0, 0).unwrap().bound, 2.0);
        let rep = CoverageReport::from_counts(vec![9, 0, 8], 10).unwrap();
        assert_eq!((rep.min, rep.argmin), (0.0, 1));
        assert!(matches!(fractional_upper_bound(&rep), Err(CertError::InsufficientCoverage { vertex: 1, .. })));
        assert_eq!(CoverageReport::from_counts(vec![1], 0), Err(CertError::NoTrials));
        // Uniform over the four maximum independent sets of K4.
        let k4 = CoverageReport::from_counts(vec![25_000; 4], 100_000).unwrap();
        let b = fractional_upper_bound(&k4).unwrap().bound;
        assert!(b > 4.0 && b < 4.1, "{b}");
    }

    #[test]
    fn cuts_from_independent_sets() {
        let k4 = named_graph("k4").unwrap();
        assert_eq!(cut_from_independent_set(&k4, &[2]).unwrap().size, 3);
        assert_eq!(cut_from_independent_set(&k4, &[]).unwrap().size, 0);
        assert_eq!(cut_from_independent_set(&k4, &[0, 3]), Err(CertError::NotIndependent(0, 3)));
        let c6 = cycle_graph(6);
        let cut = cut_from_independent_set(&c6, &[0, 2, 4]).unwrap();
        assert_eq!(cut.size, 6);
        assert_eq!(Cut::recount(&c6, &cut.side), 6);
        assert!(matches!(cut_from_independent_set(&c6, &[9]), Err(CertError::VertexOutOfRange { .. })));
    }
}
