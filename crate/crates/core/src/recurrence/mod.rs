//! Exact probability trajectory of the randomized procedure on the infinite
//! cubic tree.
//!
//! After round `k` the tree is summarised by a [`RoundState`]: the colour
//! masses `(w, b, r)`, the white-degree distribution of a white vertex and
//! the degree distribution of a vertex conditioned on one of its edges being
//! white-white. [`next_round`] maps one state to the next through the path
//! statistics ([`PathStats`]), the per-degree recolouring probabilities
//! ([`RecolorProbs`]) and the stay-white / degree-transition tables
//! ([`TransitionTables`]).

mod paths;
mod recolor;
mod solve;
mod tables;
mod trace_io;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{abs_diff, Scalar};

pub use paths::{path_probabilities, PathStats};
pub use recolor::{recolor_probabilities, RecolorProbs};
pub use solve::{init_first_round, iterate, next_round, solve, Termination, Trace};
pub use tables::{
    survival_probs, transition_tables, DegreeVector, SurvivalProbs, TableEntry, TransitionTables,
};
pub use trace_io::{format_sig17, trace_to_csv, trace_to_json};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RecurrenceError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate degree distribution: q2 = {q2} leaves the geometric path sums undefined")]
    DegenerateDistribution { q2: f64 },
    #[error("zero denominator in {what} (p2 = {p2})")]
    ZeroDenominator { what: &'static str, p2: f64 },
    #[error("degenerate state at round {k}: {what} denominator vanished while w = {white}")]
    DegenerateState { k: usize, what: &'static str, white: f64 },
    #[error("no convergence after {rounds} rounds: w = {white} is above the threshold {threshold}")]
    NotConverged { rounds: usize, white: f64, threshold: f64 },
}

/// Activation probabilities and stopping rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params<S> {
    /// First-round activation probability.
    pub p1: S,
    /// Activation probability of degree-two vertices in later rounds.
    pub p2: S,
    /// Iteration stops once `w_k` is at or below this value.
    pub white_threshold: S,
    /// Hard cap on the number of rounds.
    pub max_rounds: usize,
}

impl<S: Scalar> Params<S> {
    pub fn new(p1: S, p2: S, white_threshold: S, max_rounds: usize) -> Result<Self, RecurrenceError> {
        let params = Self { p1, p2, white_threshold, max_rounds };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<(), RecurrenceError> {
        let unit = |x: S| x >= S::zero() && x <= S::one();
        if !unit(self.p1) {
            return Err(RecurrenceError::InvalidParams(format!("p1 = {:?} not in [0,1]", self.p1)));
        }
        if !unit(self.p2) {
            return Err(RecurrenceError::InvalidParams(format!("p2 = {:?} not in [0,1]", self.p2)));
        }
        if !(self.white_threshold > S::zero() && self.white_threshold <= S::one()) {
            return Err(RecurrenceError::InvalidParams(format!(
                "white_threshold = {:?} not in (0,1]",
                self.white_threshold
            )));
        }
        if self.max_rounds == 0 {
            return Err(RecurrenceError::InvalidParams("max_rounds must be positive".into()));
        }
        Ok(())
    }

    /// Converts every probability to another scalar type.
    pub fn cast<T: Scalar>(&self) -> Params<T> {
        Params {
            p1: T::lit(self.p1.to_f64_lossy()),
            p2: T::lit(self.p2.to_f64_lossy()),
            white_threshold: T::lit(self.white_threshold.to_f64_lossy()),
            max_rounds: self.max_rounds,
        }
    }
}

/// Tree probabilities after `k` rounds.
///
/// `wdeg[i]` is `Pr[deg u = i | u white]`; `qdeg[i - 1]` is
/// `Pr[deg u = i | u and a fixed neighbour white]` for `i = 1, 2, 3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundState<S> {
    pub k: usize,
    pub w: S,
    pub b: S,
    pub r: S,
    pub wdeg: [S; 4],
    pub qdeg: [S; 3],
}

impl<S: Scalar> RoundState<S> {
    /// The untouched tree before any round: everything white of degree three.
    pub fn all_white(k: usize) -> Self {
        let (z, o) = (S::zero(), S::one());
        Self { k, w: o, b: z, r: z, wdeg: [z, z, z, o], qdeg: [z, z, o] }
    }

    /// `q^i` for `i` in 1..=3.
    pub fn q(&self, degree: usize) -> S {
        self.qdeg[degree - 1]
    }

    /// Largest deviation from the three normalisations `w+b+r`, `Σ wdeg`, `Σ qdeg`.
    pub fn normalization_defect(&self) -> f64 {
        let one = S::one();
        let colours = abs_diff(self.w + self.b + self.r, one);
        let wsum = abs_diff(self.wdeg.iter().fold(S::zero(), |a, &x| a + x), one);
        let qsum = abs_diff(self.qdeg.iter().fold(S::zero(), |a, &x| a + x), one);
        colours.max(wsum).max(qsum)
    }

    /// True when every entry lies in `[-tol, 1 + tol]`.
    pub fn entries_in_unit_interval(&self, tol: f64) -> bool {
        let ok = |x: S| {
            let x = x.to_f64_lossy();
            x >= -tol && x <= 1.0 + tol
        };
        [self.w, self.b, self.r].into_iter().chain(self.wdeg).chain(self.qdeg).all(ok)
    }

    pub fn cast<T: Scalar>(&self) -> RoundState<T> {
        let c = |x: S| T::lit(x.to_f64_lossy());
        RoundState {
            k: self.k,
            w: c(self.w),
            b: c(self.b),
            r: c(self.r),
            wdeg: self.wdeg.map(c),
            qdeg: self.qdeg.map(c),
        }
    }
}
