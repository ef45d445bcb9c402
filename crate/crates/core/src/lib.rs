//! Random independent sets in cubic graphs of large girth.
//!
//! * [`recurrence`] evaluates the exact round-by-round probabilities of the
//!   randomized colouring procedure on the infinite cubic tree.
//! * [`graph`] builds, generates and checks simple (sub)cubic graphs.
//! * [`sim`] runs the same procedure on finite graphs.
//! * [`cert`] turns sampled independent sets into independence, fractional
//!   colouring and cut certificates, with exact oracles for small graphs.
//! * [`odd_girth`] is the two-factor based construction for graphs of large
//!   odd girth.
//!
//! The recurrence is generic over [`Scalar`]; the aliases below fix the
//! common instantiations.

pub mod cert;
pub mod graph;
pub mod odd_girth;
pub mod recurrence;
pub mod scalar;
pub mod sim;
pub mod stats;

pub use scalar::{Scalar, TwoFloat};

pub type Params64 = recurrence::Params<f64>;
pub type RoundState64 = recurrence::RoundState<f64>;
pub type Trace64 = recurrence::Trace<f64>;
pub type PathStats64 = recurrence::PathStats<f64>;

pub type Params32 = recurrence::Params<f32>;
pub type Trace32 = recurrence::Trace<f32>;

/// Double-double instantiation used to cross-check `f64` digits.
pub type ParamsDd = recurrence::Params<TwoFloat>;
pub type TraceDd = recurrence::Trace<TwoFloat>;

/// Generator used for every stochastic operation.
pub type Rng = rand_chacha::ChaCha8Rng;

/// Deterministic generator for `seed`.
pub fn seeded_rng(seed: u64) -> Rng {
    use rand::SeedableRng;
    Rng::seed_from_u64(seed)
}
