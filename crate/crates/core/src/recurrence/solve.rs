use super::{
    path_probabilities, recolor_probabilities, survival_probs, transition_tables, Params,
    RecurrenceError, RoundState, SurvivalProbs, TableEntry,
};
use crate::scalar::Scalar;

/// State after the first round, from the closed forms for independent
/// activation with probability `p1`.
pub fn init_first_round<S: Scalar>(params: &Params<S>) -> RoundState<S> {
    let (one, two, three) = (S::one(), S::lit(2.0), S::lit(3.0));
    let keep = one - params.p1;
    // A neighbour of a white vertex is white iff neither of its other two neighbours is active.
    let t = keep.ipow(2);
    let lost = one - t;

    let b = one - keep.ipow(3);
    let r = params.p1 * (one - b);
    let w = one - r - b;
    RoundState {
        k: 1,
        w,
        b,
        r,
        wdeg: [lost.ipow(3), three * t * lost.ipow(2), three * t.ipow(2) * lost, t.ipow(3)],
        qdeg: [lost.ipow(2), two * t * lost, t.ipow(2)],
    }
}

/// Normalised `Σ mass · stay · to[i']` over table rows. Products are formed
/// left to right (centre mass, neighbour degrees, stay factors, survival
/// outcomes with the first neighbour outermost) and accumulated in row order.
fn degree_update<S: Scalar>(
    rows: &[TableEntry<S>],
    centre_mass: impl Fn(usize) -> S,
    state: &RoundState<S>,
) -> Option<[S; 4]> {
    let mut num = [S::zero(); 4];
    let mut den = S::zero();
    for entry in rows {
        let mut mass = centre_mass(entry.degree as usize);
        for &j in &entry.neighbors {
            mass = mass * state.q(j as usize);
        }
        for &f in &entry.factors {
            mass = mass * f;
        }
        den = den + mass;

        let m = entry.survive.len();
        for outcome in 0..1usize << m {
            let mut term = mass;
            let mut survivors = 0;
            for (pos, &s) in entry.survive.iter().enumerate() {
                if outcome >> (m - 1 - pos) & 1 == 0 {
                    term = term * s;
                    survivors += 1;
                } else {
                    term = term * (S::one() - s);
                }
            }
            let idx = entry.offset as usize + survivors;
            num[idx] = num[idx] + term;
        }
    }
    (den > S::zero()).then(|| num.map(|x| x / den))
}

/// Advances the tree state by one round.
pub fn next_round<S: Scalar>(state: &RoundState<S>, params: &Params<S>) -> Result<RoundState<S>, RecurrenceError> {
    let p2 = params.p2;
    let stats = path_probabilities(state, p2)?;
    let recolor = recolor_probabilities(&stats, p2);
    let (red, blue) = (recolor.red_given_deg, recolor.blue_given_deg);
    let wd = state.wdeg;

    let r = state.r + state.w * (wd[0] + wd[1] * red[1] + wd[2] * red[2]);
    let b = state.b + state.w * (wd[1] * blue[1] + wd[2] * blue[2] + wd[3] * blue[3]);
    let w = S::one() - r - b;

    let survival = match survival_probs(&stats, p2) {
        Ok(s) => s,
        // Without degree-two vertices S(3,2) is never used.
        Err(RecurrenceError::ZeroDenominator { .. }) if state.q(2) == S::zero() => SurvivalProbs {
            s22: S::one(),
            s23: S::one(),
            s33: S::one(),
            s32: S::zero(),
            r32_denominator: S::zero(),
        },
        Err(e) => return Err(e),
    };
    let tables = transition_tables(&stats, &survival, p2);

    let k = state.k + 1;
    let degenerate = |what| {
        if w > params.white_threshold {
            Err(RecurrenceError::DegenerateState { k, what, white: w.to_f64_lossy() })
        } else {
            Ok(())
        }
    };
    let wdeg = match degree_update(&tables.r, |i| wd[i], state) {
        Some(v) => v,
        None => {
            degenerate("white-degree")?;
            state.wdeg
        }
    };
    let qdeg = match degree_update(&tables.q, |i| state.q(i), state) {
        Some(v) => [v[1], v[2], v[3]],
        None => {
            degenerate("edge-degree")?;
            state.qdeg
        }
    };
    Ok(RoundState { k, w, b, r, wdeg, qdeg })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    /// `w_K` reached the white threshold.
    BelowThreshold,
    /// The round cap was hit first.
    MaxRounds,
    /// A round left the state unchanged above the threshold, so it is a
    /// fixed point and the white mass will never fall further.
    Stalled,
}

/// Full trajectory `k = 1..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace<S> {
    pub rounds: Vec<RoundState<S>>,
    pub termination: Termination,
}

impl<S: Scalar> Trace<S> {
    pub fn last(&self) -> &RoundState<S> {
        self.rounds.last().expect("trace holds at least the first round")
    }

    /// Number of rounds `K`.
    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    /// State after round `k` (1-based).
    pub fn round(&self, k: usize) -> Option<&RoundState<S>> {
        k.checked_sub(1).and_then(|i| self.rounds.get(i))
    }
}

/// Iterates until the white mass drops to the threshold, the round cap is
/// reached or the state stops changing; see [`Trace::termination`].
pub fn iterate<S: Scalar>(params: &Params<S>) -> Result<Trace<S>, RecurrenceError> {
    params.validate()?;
    let mut rounds = vec![init_first_round(params)];
    let mut state = rounds[0];
    let mut stalled = false;
    while state.w > params.white_threshold && state.k < params.max_rounds && !stalled {
        let next = next_round(&state, params)?;
        stalled = RoundState { k: state.k, ..next } == state;
        state = next;
        rounds.push(state);
    }
    let termination = if state.w <= params.white_threshold {
        Termination::BelowThreshold
    } else if stalled {
        Termination::Stalled
    } else {
        Termination::MaxRounds
    };
    Ok(Trace { rounds, termination })
}

/// Like [`iterate`] but treats any ending above the threshold as an error.
pub fn solve<S: Scalar>(params: &Params<S>) -> Result<Trace<S>, RecurrenceError> {
    let trace = iterate(params)?;
    match trace.termination {
        Termination::BelowThreshold => Ok(trace),
        Termination::MaxRounds | Termination::Stalled => Err(RecurrenceError::NotConverged {
            rounds: trace.len(),
            white: trace.last().w.to_f64_lossy(),
            threshold: params.white_threshold.to_f64_lossy(),
        }),
    }
}
