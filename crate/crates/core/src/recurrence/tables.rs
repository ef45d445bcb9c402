use arrayvec::ArrayVec;

use super::{PathStats, RecurrenceError};
use crate::scalar::Scalar;

/// Conditional survival probabilities `S^(i,j)`: neighbour of degree `j`
/// stays white given the centre (degree `i`) stays white.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurvivalProbs<S> {
    pub s22: S,
    pub s23: S,
    pub s33: S,
    pub s32: S,
    /// Probability that a degree-two neighbour does not blue a degree-three centre.
    pub r32_denominator: S,
}

impl<S: Scalar> SurvivalProbs<S> {
    /// `S^(centre, neighbour)` for degrees in {2, 3}.
    pub fn get(&self, centre: u8, neighbour: u8) -> S {
        match (centre, neighbour) {
            (2, 2) => self.s22,
            (2, 3) => self.s23,
            (3, 2) => self.s32,
            (3, 3) => self.s33,
            _ => panic!("survival probability undefined for degrees ({centre}, {neighbour})"),
        }
    }
}

pub fn survival_probs<S: Scalar>(stats: &PathStats<S>, p2: S) -> Result<SurvivalProbs<S>, RecurrenceError> {
    let (one, half) = (S::one(), S::lit(0.5));
    let keep = one - p2;
    let r32_denominator =
        stats.o_to1 + keep * (stats.hat_to3 + half * stats.tilde_e3) + p2 * (half * stats.e_to3);
    let base = stats.hat_to3 + stats.e_to1 + stats.tilde_o3 * half;
    let s33 = base.ipow(2);
    if r32_denominator == S::zero() {
        return Err(RecurrenceError::ZeroDenominator { what: "S(3,2)", p2: p2.to_f64_lossy() });
    }
    let s32 = keep * stats.hat_to3 / r32_denominator;
    Ok(SurvivalProbs { s22: one, s23: s33, s33, s32, r32_denominator })
}

/// Degrees of the white neighbours of a vertex, in enumeration order.
pub type DegreeVector = ArrayVec<u8, 3>;

/// One `(i, J)` row of a transition table.
///
/// The row is stored in factored form: the stay-white probability is the
/// product of `factors` (in order), and the neighbours listed in `survive`
/// stay white independently with the given probabilities, so the new degree
/// is `offset` plus the number of survivors.
#[derive(Debug, Clone, PartialEq)]
pub struct TableEntry<S> {
    /// Degree `i` of the centre vertex.
    pub degree: u8,
    /// Degrees `J` of its white neighbours; for `Q` rows `neighbors[0]` is the
    /// distinguished neighbour `v`.
    pub neighbors: DegreeVector,
    pub factors: ArrayVec<S, 4>,
    pub survive: ArrayVec<S, 3>,
    /// Neighbours known to stay white (1 for the distinguished `v` of `Q` rows).
    pub offset: u8,
    /// `R^i(J)` or `Q^i(J)`.
    pub stay: S,
    /// `R^{i→i'}(J)` or `Q^{i→i'}(J)` indexed by `i'`.
    pub to: [S; 4],
}

impl<S: Scalar> TableEntry<S> {
    fn new(degree: u8, neighbors: DegreeVector, factors: ArrayVec<S, 4>, survive: ArrayVec<S, 3>, offset: u8) -> Self {
        let stay = factors.iter().fold(S::one(), |acc, &f| acc * f);
        let to = survivor_counts(offset as usize, survive.iter().copied());
        Self { degree, neighbors, factors, survive, offset, stay, to }
    }
}

/// `R` and `Q` tables over `i ∈ {2, 3}`, `J ∈ {2, 3}^i` in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionTables<S> {
    pub r: Vec<TableEntry<S>>,
    pub q: Vec<TableEntry<S>>,
}

impl<S: Scalar> TransitionTables<S> {
    fn find<'a>(rows: &'a [TableEntry<S>], degree: usize, neighbors: &[u8]) -> Option<&'a TableEntry<S>> {
        rows.iter().find(|e| e.degree as usize == degree && e.neighbors.as_slice() == neighbors)
    }

    pub fn r_entry(&self, degree: usize, neighbors: &[u8]) -> Option<&TableEntry<S>> {
        Self::find(&self.r, degree, neighbors)
    }

    pub fn q_entry(&self, degree: usize, neighbors: &[u8]) -> Option<&TableEntry<S>> {
        Self::find(&self.q, degree, neighbors)
    }

    /// `R^i(J)`; zero whenever the centre or a neighbour has degree below two.
    pub fn r_stay(&self, degree: usize, neighbors: &[u8]) -> S {
        self.r_entry(degree, neighbors).map_or(S::zero(), |e| e.stay)
    }

    pub fn q_stay(&self, degree: usize, neighbors: &[u8]) -> S {
        self.q_entry(degree, neighbors).map_or(S::zero(), |e| e.stay)
    }
}

/// All vectors in `{2, 3}^len`, lexicographically.
pub(crate) fn degree_vectors(len: usize) -> Vec<DegreeVector> {
    (0..1usize << len)
        .map(|mask| (0..len).map(|pos| if mask >> (len - 1 - pos) & 1 == 1 { 3 } else { 2 }).collect())
        .collect()
}

/// Distribution of how many independent Bernoulli trials succeed.
fn survivor_counts<S: Scalar>(offset: usize, probs: impl Iterator<Item = S>) -> [S; 4] {
    let mut dist = [S::zero(); 4];
    dist[offset] = S::one();
    for p in probs {
        let mut next = [S::zero(); 4];
        for (count, &mass) in dist.iter().enumerate() {
            if mass == S::zero() {
                continue;
            }
            next[count] = next[count] + mass * (S::one() - p);
            if count + 1 < 4 {
                next[count + 1] = next[count + 1] + mass * p;
            }
        }
        dist = next;
    }
    dist
}

pub fn transition_tables<S: Scalar>(
    stats: &PathStats<S>,
    survival: &SurvivalProbs<S>,
    p2: S,
) -> TransitionTables<S> {
    let keep = S::one() - p2;
    // A degree-two neighbour of a degree-two centre continues a quiet path.
    let quiet_chain = keep * stats.hat_to3;
    let stay_factor = |centre: u8, neighbour: u8| match (centre, neighbour) {
        (2, 2) => Some(quiet_chain),
        (3, 2) => Some(survival.r32_denominator),
        _ => None,
    };
    let survive = |centre: u8, neighbour: u8| survival.get(centre, neighbour);

    let mut r = Vec::with_capacity(12);
    let mut q = Vec::with_capacity(12);
    for degree in [2u8, 3] {
        for neighbors in degree_vectors(degree as usize) {
            let mut factors = ArrayVec::new();
            if degree == 2 {
                factors.push(keep);
            }
            factors.extend(neighbors.iter().filter_map(|&j| stay_factor(degree, j)));
            let survivors = neighbors.iter().map(|&j| survive(degree, j)).collect();
            r.push(TableEntry::new(degree, neighbors.clone(), factors, survivors, 0));

            // v must stay white as well: its stay factor and survival merge into one.
            let v = neighbors[0];
            let mut factors = ArrayVec::new();
            factors.push(match (degree, v) {
                (_, 2) => quiet_chain,
                _ => survival.s33,
            });
            if degree == 2 {
                factors.push(keep);
            }
            factors.extend(neighbors[1..].iter().filter_map(|&j| stay_factor(degree, j)));
            let survivors = neighbors[1..].iter().map(|&j| survive(degree, j)).collect();
            q.push(TableEntry::new(degree, neighbors, factors, survivors, 1));
        }
    }
    TransitionTables { r, q }
}
