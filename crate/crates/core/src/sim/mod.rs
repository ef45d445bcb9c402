//! The randomized colouring procedure on finite (sub)cubic graphs.
//!
//! Round one activates vertices independently with probability `p1`. Each
//! later round colours the white paths from a snapshot of the round-start
//! state, so the processing order of paths does not matter.

mod paths;

use rand::seq::SliceRandom;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use paths::{classify_paths, PathKind, WhitePath};

use crate::graph::{CubicGraph, Vertex};
use crate::{seeded_rng, Rng};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("vertex {vertex} received two conflicting colour writes in round {round}")]
    ConflictingWrite { vertex: Vertex, round: usize },
    #[error("adjacent red vertices {u} and {v} after round {round}")]
    AdjacentReds { u: Vertex, v: Vertex, round: usize },
    #[error("state invariant violated after round {round}: {what}")]
    Invariant { round: usize, what: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    White,
    Blue,
    Red,
}

/// Colour of every vertex plus the number of white neighbours it has.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorState {
    colors: Vec<Color>,
    white_degree: Vec<u8>,
    round: usize,
}

impl ColorState {
    /// Round-zero state: everything white.
    pub fn all_white(g: &CubicGraph) -> Self {
        Self {
            colors: vec![Color::White; g.n()],
            white_degree: (0..g.n()).map(|v| g.degree(v) as u8).collect(),
            round: 0,
        }
    }

    /// State with the given colours, for constructing test scenarios.
    pub fn from_colors(g: &CubicGraph, colors: Vec<Color>, round: usize) -> Self {
        assert_eq!(colors.len(), g.n());
        let white_degree = (0..g.n())
            .map(|v| g.neighbors(v).iter().filter(|&&x| colors[x] == Color::White).count() as u8)
            .collect();
        Self { colors, white_degree, round }
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of white neighbours of `v`.
    pub fn white_degree(&self, v: Vertex) -> usize {
        self.white_degree[v] as usize
    }

    pub fn round(&self) -> usize {
        self.round
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    /// Red vertices in increasing order.
    pub fn red_set(&self) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == Color::Red).collect()
    }

    /// White-white edges `(u, v)` with `u < v`.
    pub fn white_edges<'a>(&'a self, g: &'a CubicGraph) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
        g.edges().filter(|&(u, v)| self.colors[u] == Color::White && self.colors[v] == Color::White)
    }

    /// Checks that reds are independent with only blue neighbours and that
    /// the cached white-degrees are exact.
    pub fn check_invariants(&self, g: &CubicGraph) -> Result<(), SimError> {
        let round = self.round;
        for v in 0..g.n() {
            let wd = g.neighbors(v).iter().filter(|&&x| self.colors[x] == Color::White).count();
            if wd != self.white_degree(v) {
                return Err(SimError::Invariant { round, what: format!("stale white-degree at {v}") });
            }
            if self.colors[v] == Color::Red {
                for &x in g.neighbors(v) {
                    match self.colors[x] {
                        Color::Red => return Err(SimError::AdjacentReds { u: v.min(x), v: v.max(x), round }),
                        Color::White => {
                            return Err(SimError::Invariant { round, what: format!("red {v} has white neighbour {x}") })
                        }
                        Color::Blue => {}
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies a write-set computed from the current snapshot. Blue writes
    /// may repeat; a red write must be the only write to its vertex.
    fn apply(&mut self, g: &CubicGraph, writes: &[(Vertex, Color)]) -> Result<(), SimError> {
        let round = self.round + 1;
        let mut pending: Vec<Option<Color>> = vec![None; g.n()];
        for &(v, c) in writes {
            debug_assert_eq!(self.colors[v], Color::White);
            match (pending[v], c) {
                (None, _) => pending[v] = Some(c),
                (Some(Color::Blue), Color::Blue) => {}
                _ => return Err(SimError::ConflictingWrite { vertex: v, round }),
            }
        }
        for &(v, _) in writes {
            if let Some(c) = pending[v].take() {
                self.colors[v] = c;
                for &x in g.neighbors(v) {
                    self.white_degree[x] -= 1;
                }
            }
        }
        self.round = round;
        for &(v, c) in writes {
            if c == Color::Red {
                if let Some(&x) = g.neighbors(v).iter().find(|&&x| self.colors[x] == Color::Red) {
                    return Err(SimError::AdjacentReds { u: v.min(x), v: v.max(x), round });
                }
            }
        }
        Ok(())
    }
}

/// Round one: activate each vertex with probability `p1`; an active vertex
/// with no active neighbour turns red, every vertex with an active neighbour
/// turns blue.
pub fn first_round(g: &CubicGraph, p1: f64, rng: &mut Rng) -> ColorState {
    let active: Vec<bool> = (0..g.n()).map(|_| rng.random_bool(p1)).collect();
    activate(g, &active)
}

/// Deterministic part of round one for a given activation set.
pub fn activate(g: &CubicGraph, active: &[bool]) -> ColorState {
    let colors = (0..g.n())
        .map(|v| {
            if g.neighbors(v).iter().any(|&x| active[x]) {
                Color::Blue
            } else if active[v] {
                Color::Red
            } else {
                Color::White
            }
        })
        .collect();
    ColorState::from_colors(g, colors, 1)
}

/// Order in which a round draws randomness for its paths. The outcome
/// distribution is the same for both; `Shuffled` exists to test that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathOrder {
    #[default]
    Canonical,
    Shuffled,
}

fn alternate(writes: &mut Vec<(Vertex, Color)>, seq: impl Iterator<Item = Vertex>, first: Color) {
    let mut c = first;
    for v in seq {
        writes.push((v, c));
        c = if c == Color::Red { Color::Blue } else { Color::Red };
    }
}

fn path_writes(path: &WhitePath, state: &ColorState, p2: f64, rng: &mut Rng, writes: &mut Vec<(Vertex, Color)>) {
    let seq = &path.vertices;
    let len = path.len();
    match path.kind {
        PathKind::OneThree => {
            // Red from the degree-one end; the degree-three end is blued
            // only when the alternation would make it blue.
            let forward = state.white_degree(seq[0]) == 1;
            let ordered: Vec<Vertex> = if forward { seq.clone() } else { seq.iter().rev().copied().collect() };
            let coloured = if len % 2 == 1 { len + 1 } else { len };
            alternate(writes, ordered.into_iter().take(coloured), Color::Red);
        }
        PathKind::OneOne => {
            let begin_at_start = rng.random_bool(0.5);
            if begin_at_start {
                alternate(writes, seq.iter().copied(), Color::Red);
            } else {
                alternate(writes, seq.iter().rev().copied(), Color::Red);
            }
        }
        PathKind::ThreeThree => {
            let mut active = false;
            for _ in 1..len {
                active |= rng.random_bool(p2);
            }
            if !active {
                return;
            }
            // The beginning is blue, its path neighbour red; the far end is
            // blued when the length is even.
            let coloured = if len.is_multiple_of(2) { len + 1 } else { len };
            if rng.random_bool(0.5) {
                alternate(writes, seq.iter().copied().take(coloured), Color::Blue);
            } else {
                alternate(writes, seq.iter().rev().copied().take(coloured), Color::Blue);
            }
        }
        PathKind::Cycle => {
            let activated: Vec<usize> = (0..seq.len()).filter(|_| rng.random_bool(p2)).collect();
            if activated.is_empty() {
                return;
            }
            let start = activated[rng.random_range(0..activated.len())];
            alternate(writes, seq[start..].iter().chain(&seq[..start]).copied(), Color::Blue);
        }
    }
}

/// One later round of the procedure, computed from a snapshot of `state`
/// and applied simultaneously.
pub fn round(g: &CubicGraph, state: &ColorState, p2: f64, rng: &mut Rng) -> Result<ColorState, SimError> {
    round_with_order(g, state, p2, rng, PathOrder::Canonical)
}

/// [`round`] with an explicit path processing order.
pub fn round_with_order(
    g: &CubicGraph,
    state: &ColorState,
    p2: f64,
    rng: &mut Rng,
    order: PathOrder,
) -> Result<ColorState, SimError> {
    let mut writes: Vec<(Vertex, Color)> =
        (0..g.n()).filter(|&v| state.color(v) == Color::White && state.white_degree(v) == 0).map(|v| (v, Color::Red)).collect();
    let mut paths = classify_paths(g, state);
    if order == PathOrder::Shuffled {
        paths.shuffle(rng);
    }
    for path in &paths {
        path_writes(path, state, p2, rng, &mut writes);
    }
    let mut next = state.clone();
    next.apply(g, &writes)?;
    Ok(next)
}

/// Raw per-round counts; sums over trials are order independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RoundCounts {
    pub k: usize,
    pub n: u64,
    pub white: u64,
    pub blue: u64,
    pub red: u64,
    /// White vertices by white-degree.
    pub wdeg: [u64; 4],
    /// Ordered white-white pairs `(u, v)` by the white-degree of `v`.
    pub qdeg: [u64; 3],
}

impl RoundCounts {
    pub fn of(g: &CubicGraph, state: &ColorState) -> Self {
        let mut c = RoundCounts { k: state.round(), n: g.n() as u64, ..Default::default() };
        for v in 0..g.n() {
            match state.color(v) {
                Color::White => {
                    c.white += 1;
                    let d = state.white_degree(v);
                    c.wdeg[d] += 1;
                    if d > 0 {
                        c.qdeg[d - 1] += d as u64;
                    }
                }
                Color::Blue => c.blue += 1,
                Color::Red => c.red += 1,
            }
        }
        c
    }

    /// Adds counts from the same round of another trial.
    pub fn merge(&mut self, other: &RoundCounts) {
        debug_assert_eq!(self.k, other.k);
        self.n += other.n;
        self.white += other.white;
        self.blue += other.blue;
        self.red += other.red;
        for i in 0..4 {
            self.wdeg[i] += other.wdeg[i];
        }
        for i in 0..3 {
            self.qdeg[i] += other.qdeg[i];
        }
    }

    pub fn aggregate(&self) -> RoundAggregate {
        let frac = |x: u64, total: u64| if total == 0 { 0.0 } else { x as f64 / total as f64 };
        let pairs: u64 = self.qdeg.iter().sum();
        RoundAggregate {
            k: self.k,
            frac_white: frac(self.white, self.n),
            frac_blue: frac(self.blue, self.n),
            frac_red: frac(self.red, self.n),
            wdeg_hist: self.wdeg.map(|x| frac(x, self.white)),
            qdeg_hist: self.qdeg.map(|x| frac(x, pairs)),
        }
    }
}

/// Per-round record: colour fractions, the white-degree distribution among
/// white vertices and the degree distribution at the far end of a white edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoundAggregate {
    pub k: usize,
    pub frac_white: f64,
    pub frac_blue: f64,
    pub frac_red: f64,
    pub wdeg_hist: [f64; 4],
    pub qdeg_hist: [f64; 3],
}

/// Procedure parameters for finite graphs: `rounds` is the total number of
/// rounds including the first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimParams {
    pub p1: f64,
    pub p2: f64,
    pub rounds: usize,
}

impl SimParams {
    pub fn validate(&self) -> Result<(), SimError> {
        for (name, p) in [("p1", self.p1), ("p2", self.p2)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(SimError::InvalidParams(format!("{name} = {p} is not in [0, 1]")));
            }
        }
        if self.rounds == 0 {
            return Err(SimError::InvalidParams("rounds must be positive".into()));
        }
        Ok(())
    }
}

impl From<&crate::recurrence::Params<f64>> for SimParams {
    fn from(p: &crate::recurrence::Params<f64>) -> Self {
        Self { p1: p.p1, p2: p.p2, rounds: p.max_rounds }
    }
}

#[derive(Debug, Clone)]
pub struct SimRun {
    pub state: ColorState,
    pub rounds: Vec<RoundCounts>,
}

/// Runs the first round and then later rounds until `params.rounds` rounds
/// have been played or no white vertex remains.
pub fn run(g: &CubicGraph, params: &SimParams, rng: &mut Rng) -> Result<SimRun, SimError> {
    run_with_order(g, params, rng, PathOrder::Canonical)
}

/// [`run`] with an explicit path processing order in every round.
pub fn run_with_order(g: &CubicGraph, params: &SimParams, rng: &mut Rng, order: PathOrder) -> Result<SimRun, SimError> {
    params.validate()?;
    let mut state = first_round(g, params.p1, rng);
    let mut rounds = vec![RoundCounts::of(g, &state)];
    while state.round() < params.rounds && rounds.last().unwrap().white > 0 {
        state = round_with_order(g, &state, params.p2, rng, order)?;
        rounds.push(RoundCounts::of(g, &state));
    }
    Ok(SimRun { state, rounds })
}

/// Runs `trials` independent runs in parallel, trial `i` seeded with
/// `root_seed + i`, and maps each through `f`. Results are in trial order.
pub fn run_trials<T: Send>(
    g: &CubicGraph,
    params: &SimParams,
    trials: usize,
    root_seed: u64,
    f: impl Fn(usize, SimRun) -> T + Sync + Send,
) -> Result<Vec<T>, SimError> {
    params.validate()?;
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = seeded_rng(root_seed.wrapping_add(i as u64));
            run(g, params, &mut rng).map(|r| f(i, r))
        })
        .collect()
}

/// Per-round counts summed over trials. Rounds a trial did not reach (it ran
/// out of white vertices) contribute that trial's final state.
pub fn pooled_rounds(runs: &[Vec<RoundCounts>], rounds: usize) -> Vec<RoundCounts> {
    let mut pooled: Vec<RoundCounts> = (1..=rounds).map(|k| RoundCounts { k, ..Default::default() }).collect();
    for run in runs {
        for (i, slot) in pooled.iter_mut().enumerate() {
            let mut c = run.get(i).or(run.last()).copied().unwrap_or_default();
            c.k = slot.k;
            slot.merge(&c);
        }
    }
    pooled
}
