//! Scalar abstractions.
//!
//! Two bounds are used across the crate:
//!
//! * [`Probability`]: anything closed under `+ - *` with 0 and 1. Crossover
//!   algebra (cascaded BSCs, the closed forms for the equivalent channels) is
//!   written against this bound so it runs on `f32`, `f64` and exact
//!   rationals alike.
//! * [`Real`]: floating point (`f32`/`f64`). Needed wherever logarithms or
//!   hyperbolic functions appear: LLRs, sum-product decoding, entropy.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num};

/// Exact or approximate probability arithmetic.
pub trait Probability: Num + Clone + PartialOrd + Debug {}

impl<T: Num + Clone + PartialOrd + Debug> Probability for T {}

/// Floating point scalar used for soft information and information measures.
pub trait Real:
    Float + FromPrimitive + Probability + Default + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 is representable in every Real")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// The constant 2 for any [`Probability`].
#[inline]
pub(crate) fn two<T: Probability>() -> T {
    T::one() + T::one()
}
