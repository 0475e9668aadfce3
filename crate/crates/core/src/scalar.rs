//! Scalar abstraction for the numeric kernels.
//!
//! Everything numeric in this crate is generic over [`Real`], so the solvers
//! run in `f32` or `f64`. The experiment harness pins `f64`; the crate root
//! exports concrete aliases for both.

use std::cmp::Ordering;

use num_traits::Float;
use rand::distributions::uniform::SampleUniform;
use rand::RngCore;
use rand_distr::{Distribution, StandardNormal};

/// Floating-point scalar usable by the solvers and generators.
///
/// Bundles the `num_traits` arithmetic surface with the random draws the
/// problem generators need, so generic code does not have to thread
/// distribution bounds through every signature.
pub trait Real:
    Float + SampleUniform + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Draw from the standard normal distribution.
    fn standard_normal<R: RngCore + ?Sized>(rng: &mut R) -> Self;

    /// Draw uniformly from `[0, 1)`.
    fn unit_uniform<R: RngCore + ?Sized>(rng: &mut R) -> Self;

    /// Total order over all bit patterns; finite values order numerically.
    fn total_order(self, other: Self) -> Ordering;

    /// Lossy conversion from `usize`, for iteration-count arithmetic.
    fn from_count(n: usize) -> Self {
        Self::from(n).expect("count representable as scalar")
    }
}

impl Real for f64 {
    fn standard_normal<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn unit_uniform<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        rand::Rng::gen(rng)
    }

    fn total_order(self, other: Self) -> Ordering {
        self.total_cmp(&other)
    }
}

impl Real for f32 {
    fn standard_normal<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    fn unit_uniform<R: RngCore + ?Sized>(rng: &mut R) -> Self {
        rand::Rng::gen(rng)
    }

    fn total_order(self, other: Self) -> Ordering {
        self.total_cmp(&other)
    }
}

/// Sum of squares of a slice.
pub(crate) fn sq_norm<F: Real>(v: &[F]) -> F {
    v.iter().fold(F::zero(), |acc, &x| acc + x * x)
}

/// Inner product of two equal-length slices.
pub(crate) fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(F::zero(), |acc, (&x, &y)| acc + x * y)
}
