//! Deterministic leader election for anonymous sensor configurations in the plane.
//!
//! Given the positions of `n` indistinguishable sensors, this crate decides
//! whether the configuration admits a deterministically electable leader —
//! with or without a shared handedness (chirality) — names the leader when
//! one exists, and simulates independent sensors observing the configuration
//! through arbitrary private coordinate frames to validate that they all
//! reach the same verdict.
//!
//! The decision procedure is symbolic: sensors are grouped onto the occupied
//! radii of the smallest enclosing circle, each radius is encoded as a word
//! over order-preserving integer codes of normalized distances, radii are
//! chained into circular configuration words carrying inter-radius angles,
//! and a leader exists exactly when one of those words is a Lyndon word
//! (nonempty, primitive, and strictly smaller than all of its nontrivial
//! rotations). Without chirality the letters additionally carry a per-radius
//! mirror-symmetry type, which forces candidate words onto symmetry axes.
//!
//! Modules:
//! - [`geometry`]: smallest enclosing circle, radial decomposition, similarity frames.
//! - [`words`]: word encoding and the word algebra (rotations, primitivity, Lyndon recognition).
//! - [`election`]: the decision procedures plus an independent symmetry-group oracle.
//! - [`simulation`]: per-sensor elections under random private frames, with agreement checks.
//! - [`fixtures`]: deterministic generators for reference and randomized configurations.
//!
//! The core is generic over the floating-point scalar via [`Real`]; the
//! aliases below fix `f64`, which is what the fixtures, the simulator's RNG
//! and the CLI use.

pub mod election;
mod error;
pub mod fixtures;
pub mod geometry;
mod scalar;
pub mod simulation;
pub mod words;

pub use error::{Error, Result};
pub use scalar::{Real, Tolerance};

/// A point in `f64` coordinates.
pub type Point64 = geometry::Point<f64>;
/// A configuration of `f64` points.
pub type Configuration64 = geometry::Configuration<f64>;
/// A circle in `f64` coordinates.
pub type Circle64 = geometry::Circle<f64>;
/// A private sensor frame in `f64` coordinates.
pub type Frame64 = geometry::LocalFrame<f64>;
/// The default `f64` tolerance record.
pub type Tolerance64 = Tolerance<f64>;
/// An election outcome over `f64` coordinates.
pub type Outcome64 = election::ElectionOutcome<f64>;
