use super::{RecurrenceError, RoundState};
use crate::scalar::Scalar;

/// Probabilities, conditioned on `uv` being white-white, that the white
/// subtree hanging off `u` contains a path of degree-two vertices from `u` to
/// a vertex of degree one or three.
///
/// `O`/`E` split by odd/even length. The `hat_*` fields additionally require
/// that no inner vertex is activated, the `tilde_*` fields that at least one is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStats<S> {
    pub p_to1: S,
    pub o_to1: S,
    pub e_to1: S,
    pub p_to3: S,
    pub o_to3: S,
    pub e_to3: S,
    pub hat_to3: S,
    pub hat_o3: S,
    pub hat_e3: S,
    pub tilde_o3: S,
    pub tilde_e3: S,
}

impl<S: Scalar> PathStats<S> {
    /// Largest violation among the linear identities tying the fields together.
    pub fn identity_defect(&self) -> f64 {
        let d = |a: S, b: S| (a - b).abs().to_f64_lossy();
        [
            d(self.p_to1 + self.p_to3, S::one()),
            d(self.o_to1 + self.e_to1, self.p_to1),
            d(self.o_to3 + self.e_to3, self.p_to3),
            d(self.hat_o3 + self.tilde_o3, self.o_to3),
            d(self.hat_e3 + self.tilde_e3, self.e_to3),
            d(self.hat_o3 + self.hat_e3, self.hat_to3),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Evaluates the geometric-series closed forms for the path probabilities.
pub fn path_probabilities<S: Scalar>(
    state: &RoundState<S>,
    p2: S,
) -> Result<PathStats<S>, RecurrenceError> {
    let one = S::one();
    let (q1, q2, q3) = (state.q(1), state.q(2), state.q(3));
    // Written negated so that NaN is rejected as well.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(q2 < one) {
        return Err(RecurrenceError::DegenerateDistribution { q2: q2.to_f64_lossy() });
    }
    let keep = one - p2;
    let q2_sq = q2.ipow(2);

    let o_to1 = q1 / (one - q2_sq);
    let e_to1 = q2 * o_to1;
    let o_to3 = q3 / (one - q2_sq);
    let e_to3 = q2 * o_to3;

    // Paths whose inner vertices all stay inactive: every step carries q2 * (1 - p2).
    let quiet_sq = one - q2_sq * keep.ipow(2);
    let hat_to3 = q3 / (one - q2 * keep);
    let hat_o3 = q3 / quiet_sq;
    let hat_e3 = q2 * keep * hat_o3;

    let tilde_o3 = (q2_sq * (one - keep.ipow(2)) * o_to3) / quiet_sq;
    let tilde_e3 = q2 * (p2 * o_to3 + keep * tilde_o3);

    Ok(PathStats {
        p_to1: o_to1 + e_to1,
        o_to1,
        e_to1,
        p_to3: o_to3 + e_to3,
        o_to3,
        e_to3,
        hat_to3,
        hat_o3,
        hat_e3,
        tilde_o3,
        tilde_e3,
    })
}
