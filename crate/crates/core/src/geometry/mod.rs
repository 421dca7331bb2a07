//! Planar primitives: points, configurations, circles, and private sensor frames.

mod decompose;
mod sec;

pub use decompose::{decompose, RadialDecomposition, Radius};
pub use sec::smallest_enclosing_circle;

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    /// Point at the given distance and angle from the origin.
    pub fn from_polar(radius: T, angle: T) -> Self {
        let (sin, cos) = angle.sin_cos();
        Self::new(radius * cos, radius * sin)
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// Signed area of the parallelogram spanned by `self` and `other`.
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> T {
        (self - other).norm()
    }

    pub fn distance_sq(self, other: Self) -> T {
        let d = self - other;
        d.dot(d)
    }

    /// Polar angle in `(-π, π]`, measured counterclockwise from the x axis.
    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    /// Rotation about the origin by `angle` radians (counterclockwise).
    pub fn rotated(self, angle: T) -> Self {
        let (sin, cos) = angle.sin_cos();
        Self::new(self.x * cos - self.y * sin, self.x * sin + self.y * cos)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<T: Real> Add for Point<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> Sub for Point<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Real> Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

/// The global set of sensor positions. The index of a point is its stable
/// identity for reporting; the election itself never depends on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<T> {
    points: Vec<Point<T>>,
}

impl<T: Real> Configuration<T> {
    /// Validates finiteness and exact distinctness. Coincidence under the
    /// active tolerance is checked later, by [`decompose`], which knows the
    /// enclosing-circle scale.
    pub fn new(points: Vec<Point<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        for (index, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinitePoint { index });
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DegenerateInput { first: i, second: j });
                }
            }
        }
        Ok(Self { points })
    }

    pub fn from_xy(xy: &[(T, T)]) -> Result<Self> {
        Self::new(xy.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    /// Internal constructor for points produced by a similarity transform,
    /// which preserves validity.
    pub(crate) fn from_points_unchecked(points: Vec<Point<T>>) -> Self {
        Self { points }
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    pub fn get(&self, index: usize) -> Point<T> {
        self.points[index]
    }
}

/// A circle; when produced by [`smallest_enclosing_circle`] the center is the
/// point every election quantity is measured from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle<T> {
    pub center: Point<T>,
    pub radius: T,
}

impl<T: Real> Circle<T> {
    pub fn new(center: Point<T>, radius: T) -> Self {
        Self { center, radius }
    }

    /// Containment with a multiplicative slack on the radius.
    pub fn contains(&self, p: Point<T>, slack: T) -> bool {
        let r = self.radius * (T::one() + slack);
        self.center.distance_sq(p) <= r * r
    }
}

/// One sensor's private coordinate system, parametrized as a similarity
/// transform of the global frame: reflect (y ↦ −y), then rotate, then scale,
/// then translate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalFrame<T> {
    pub rotation: T,
    pub scale: T,
    pub translation: Point<T>,
    pub reflected: bool,
}

impl<T: Real> LocalFrame<T> {
    pub fn new(rotation: T, scale: T, translation: Point<T>, reflected: bool) -> Self {
        assert!(scale > T::zero(), "frame scale must be positive");
        Self {
            rotation,
            scale,
            translation,
            reflected,
        }
    }

    pub fn identity() -> Self {
        Self::new(T::zero(), T::one(), Point::origin(), false)
    }

    /// Maps a global point into this frame's coordinates.
    pub fn apply_point(&self, p: Point<T>) -> Point<T> {
        let p = if self.reflected {
            Point::new(p.x, -p.y)
        } else {
            p
        };
        p.rotated(self.rotation) * self.scale + self.translation
    }

    /// Maps a point expressed in this frame back to global coordinates.
    pub fn invert_point(&self, q: Point<T>) -> Point<T> {
        let v = q - self.translation;
        let v = Point::new(v.x / self.scale, v.y / self.scale).rotated(-self.rotation);
        if self.reflected {
            Point::new(v.x, -v.y)
        } else {
            v
        }
    }
}

/// Applies a frame to every point, preserving point order.
pub fn apply_frame<T: Real>(frame: &LocalFrame<T>, config: &Configuration<T>) -> Configuration<T> {
    Configuration::from_points_unchecked(
        config.points().iter().map(|&p| frame.apply_point(p)).collect(),
    )
}
