//! Scalar abstraction and the tolerance model shared by all geometric comparisons.

use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the engine is generic over (`f32` or `f64`).
pub trait Real: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display {
    /// Conversion from an `f64` constant; panics if the value is not representable.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant not representable in scalar type")
    }

    /// The full turn, 2π.
    fn two_pi() -> Self {
        Self::PI() + Self::PI()
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display {}

/// Absolute/relative tolerance pair driving every approximate comparison.
///
/// Geometric equality is taken relative to the enclosing-circle radius σ,
/// which is also the normalizer used by the word encoding: lengths compare
/// with [`Tolerance::length_eps`] at scale σ, while dimensionless quantities
/// of order one (normalized distances, angles in radians) compare with
/// [`Tolerance::unit_eps`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    /// Absolute comparison slack.
    pub abs: T,
    /// Relative comparison slack.
    pub rel: T,
}

impl<T: Real> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            abs: T::from_f64_lossy(1e-9),
            rel: T::from_f64_lossy(1e-9),
        }
    }
}

impl<T: Real> Tolerance<T> {
    pub fn new(abs: T, rel: T) -> Self {
        Self { abs, rel }
    }

    /// Comparison epsilon for lengths measured at the given scale.
    pub fn length_eps(&self, scale: T) -> T {
        self.abs.max(self.rel * scale.abs())
    }

    /// Comparison epsilon for dimensionless, order-one quantities.
    pub fn unit_eps(&self) -> T {
        self.abs.max(self.rel)
    }
}
