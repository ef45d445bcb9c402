use super::PathStats;
use crate::scalar::Scalar;

/// `Pr[u ∈ R_{k+1} | u ∈ W^i_k]` and `Pr[u ∈ B_{k+1} | u ∈ W^i_k]` for `i = 0..=3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecolorProbs<S> {
    pub red_given_deg: [S; 4],
    pub blue_given_deg: [S; 4],
}

impl<S: Scalar> RecolorProbs<S> {
    /// Probability that a white vertex of degree `i` is still white next round.
    pub fn stay_white(&self, degree: usize) -> S {
        S::one() - self.red_given_deg[degree] - self.blue_given_deg[degree]
    }
}

/// Per-degree recolouring probabilities. Odd `1↔1` and `3↔3` paths pick their
/// beginning with a fair coin, hence the halves.
pub fn recolor_probabilities<S: Scalar>(stats: &PathStats<S>, p2: S) -> RecolorProbs<S> {
    let (zero, one, two, half) = (S::zero(), S::one(), S::lit(2.0), S::lit(0.5));
    let keep = one - p2;
    let PathStats {
        o_to1: o1,
        e_to1: e1,
        p_to3: p3,
        o_to3: o3,
        e_to3: e3,
        hat_to3,
        hat_o3: ho3,
        hat_e3: he3,
        tilde_o3: to3,
        tilde_e3: te3,
        ..
    } = *stats;

    let red1 = (e1 + o1 * half) + p3;
    let blue1 = o1 * half;

    let mut red2 = e1.ipow(2) + e1 * o1 + two * e1 * p3;
    red2 = red2 + keep * (to3.ipow(2) + two * to3 * ho3 + to3 * te3 + ho3 * te3 + to3 * he3);
    red2 = red2 + p2 * (o3.ipow(2) + o3 * e3);

    let mut blue2 = o1.ipow(2) + e1 * o1 + two * o1 * p3;
    blue2 = blue2 + keep * (te3.ipow(2) + two * te3 * he3 + to3 * te3 + ho3 * te3 + to3 * he3);
    blue2 = blue2 + p2 * (e3.ipow(2) + o3 * e3);

    // A degree-three vertex survives iff each of its three directions is an even
    // path to degree one, a quiet path to degree three, or an active odd path
    // that started at the far end.
    let survive = hat_to3 + e1 + to3 * half;
    let blue3 = one - survive.ipow(3);

    RecolorProbs {
        red_given_deg: [one, red1, red2, zero],
        blue_given_deg: [zero, blue1, blue2, blue3],
    }
}
