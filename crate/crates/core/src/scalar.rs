//! Scalar abstraction for the tree recurrences.
//!
//! The recurrences only need field arithmetic and comparisons, so they are
//! written once over [`Scalar`] and instantiated for `f32`, `f64` and the
//! double-double [`TwoFloat`] used to check that reported digits are stable.

use std::fmt::Debug;

use num_traits::Float;
pub use twofloat::TwoFloat;

/// Floating point types the recurrence solver can run on.
pub trait Scalar: Float + Debug + Send + Sync + 'static {
    /// Converts an `f64` literal (rounding for narrower types).
    fn lit(x: f64) -> Self;

    /// Nearest `f64`; used for serialization and reporting.
    fn to_f64_lossy(self) -> f64;

    /// Small integer power evaluated through the platform `pow`, so binary64
    /// trajectories are bit-identical to other programs that call libm.
    fn ipow(self, n: i32) -> Self {
        self.powi(n)
    }
}

impl Scalar for f32 {
    fn lit(x: f64) -> Self {
        x as f32
    }

    fn to_f64_lossy(self) -> f64 {
        f64::from(self)
    }

    fn ipow(self, n: i32) -> Self {
        // black_box keeps LLVM from rewriting pow(x, 2) as x * x.
        self.powf(std::hint::black_box(n as f32))
    }
}

impl Scalar for f64 {
    fn lit(x: f64) -> Self {
        x
    }

    fn to_f64_lossy(self) -> f64 {
        self
    }

    fn ipow(self, n: i32) -> Self {
        self.powf(std::hint::black_box(f64::from(n)))
    }
}

// TwoFloat's FromPrimitive/ToPrimitive route floats through integers.
impl Scalar for TwoFloat {
    fn lit(x: f64) -> Self {
        TwoFloat::from(x)
    }

    fn to_f64_lossy(self) -> f64 {
        self.hi() + self.lo()
    }
}

/// Absolute difference as `f64`.
pub(crate) fn abs_diff<S: Scalar>(a: S, b: S) -> f64 {
    (a - b).abs().to_f64_lossy()
}
