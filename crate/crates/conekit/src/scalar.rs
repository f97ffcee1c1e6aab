//! Scalar abstraction for the numerical kernels.
//!
//! Everything in the core is generic over [`Real`], so the same code runs in
//! `f32` or `f64`. The concrete aliases at the crate root fix `f64`, which is
//! what the solvers and the reproduction pipelines are validated against.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FromPrimitive
    + NumAssign
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn cast<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("f64 literal must be representable in the scalar type")
}
