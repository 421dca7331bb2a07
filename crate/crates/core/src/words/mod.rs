//! Symbolic encoding of a radial decomposition and the word machinery on it.
//!
//! A radius becomes a [`RadiusWord`]: the sequence of letters coding the
//! normalized gaps between consecutive sensors walking outward from the
//! center (or the distinguished `0` token when a sensor occupies the center).
//! Walking all radii from a start radius in one orientation yields a
//! [`ConfigWord`] whose letters pair each radius word with the coded angle to
//! the next radius; the strong variant prefixes each letter with the radius's
//! mirror-symmetry type. Letter comparisons go type, then radius word, then
//! angle, and word comparison is lexicographic with the prefix rule, so the
//! orders here are exactly the ones the election decides with.

mod algebra;
mod encode;

pub use algebra::{is_lyndon, is_primitive, lyndon_factorization, rotate, smallest_period};
pub use encode::{encode_letters, Codebook, Encoding};

use std::cmp::Ordering;
use std::fmt;

use crate::geometry::{RadialDecomposition, Radius};
use crate::scalar::{Real, Tolerance};

/// A walk direction around the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Ccw, Orientation::Cw];

    pub fn opposite(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Ccw => "ccw",
            Orientation::Cw => "cw",
        })
    }
}

/// Mirror-symmetry type of a radius: `Type1` when some axial symmetry pairs
/// it with a distinct radius, `Type0` otherwise (no axis, or the axis is the
/// radius itself). `Type0 < Type1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymmetryType {
    Type0,
    Type1,
}

impl SymmetryType {
    pub fn as_u8(self) -> u8 {
        match self {
            SymmetryType::Type0 => 0,
            SymmetryType::Type1 => 1,
        }
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// One letter of a codebook: a dense rank plus the representative source
/// value it codes. Ordering and equality use the rank only.
#[derive(Debug, Clone, Copy)]
pub struct Letter<T> {
    pub rank: u32,
    pub value: T,
}

impl<T> PartialEq for Letter<T> {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
    }
}

impl<T> Eq for Letter<T> {}

impl<T> PartialOrd for Letter<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for Letter<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank.cmp(&other.rank)
    }
}

/// The word of one radius: gap letters walking outward, or the `Zero` token
/// when a sensor occupies the center. `Zero` is its own variant rather than
/// rank 0, so it can never collide with a genuine smallest distance class;
/// it orders below every letter sequence.
#[derive(Debug, Clone)]
pub enum RadiusWord<T> {
    Zero,
    Letters(Vec<Letter<T>>),
}

impl<T> RadiusWord<T> {
    pub fn is_zero(&self) -> bool {
        matches!(self, RadiusWord::Zero)
    }

    pub fn letters(&self) -> &[Letter<T>] {
        match self {
            RadiusWord::Zero => &[],
            RadiusWord::Letters(ls) => ls,
        }
    }
}

impl<T> PartialEq for RadiusWord<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T> Eq for RadiusWord<T> {}

impl<T> PartialOrd for RadiusWord<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for RadiusWord<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RadiusWord::Zero, RadiusWord::Zero) => Ordering::Equal,
            (RadiusWord::Zero, RadiusWord::Letters(_)) => Ordering::Less,
            (RadiusWord::Letters(_), RadiusWord::Zero) => Ordering::Greater,
            (RadiusWord::Letters(a), RadiusWord::Letters(b)) => a.as_slice().cmp(b.as_slice()),
        }
    }
}

/// Configuration-word letter without symmetry types: `(radius word, angle)`,
/// ordered by radius word first, then angle.
#[derive(Debug, Clone)]
pub struct WeakLetter<T> {
    pub rho: RadiusWord<T>,
    pub alpha: Letter<T>,
}

impl<T> PartialEq for WeakLetter<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T> Eq for WeakLetter<T> {}

impl<T> PartialOrd for WeakLetter<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for WeakLetter<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rho
            .cmp(&other.rho)
            .then_with(|| self.alpha.cmp(&other.alpha))
    }
}

/// Strong configuration-word letter: `(symmetry type, radius word, angle)`,
/// ordered componentwise in that priority.
#[derive(Debug, Clone)]
pub struct StrongLetter<T> {
    pub sym: SymmetryType,
    pub rho: RadiusWord<T>,
    pub alpha: Letter<T>,
}

impl<T> PartialEq for StrongLetter<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T> Eq for StrongLetter<T> {}

impl<T> PartialOrd for StrongLetter<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for StrongLetter<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sym
            .cmp(&other.sym)
            .then_with(|| self.rho.cmp(&other.rho))
            .then_with(|| self.alpha.cmp(&other.alpha))
    }
}

/// Body of a configuration word: the distinguished center token, or one
/// letter per radius. `Center` orders below every letter sequence, per the
/// derived variant order. Mixing weak and strong letters in one comparison is
/// a type error, which is the "never compare across kinds" rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum WordBody<L> {
    Center,
    Letters(Vec<L>),
}

impl<L: Ord> WordBody<L> {
    pub fn is_center(&self) -> bool {
        matches!(self, WordBody::Center)
    }

    pub fn letters(&self) -> &[L] {
        match self {
            WordBody::Center => &[],
            WordBody::Letters(ls) => ls,
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters().is_empty()
    }

    /// Lyndon test. The center token behaves as a one-letter word and is
    /// therefore Lyndon, although elections short-circuit the center case
    /// before any Lyndon logic runs.
    pub fn is_lyndon(&self) -> bool {
        match self {
            WordBody::Center => true,
            WordBody::Letters(ls) => is_lyndon(ls),
        }
    }
}

/// A configuration word: the walk over all radii from `start` in
/// `orientation`. Provenance (`start`, `orientation`) identifies the walk;
/// word comparisons go through [`ConfigWord::body`].
#[derive(Debug, Clone)]
pub struct ConfigWord<L> {
    pub start: usize,
    pub orientation: Orientation,
    pub body: WordBody<L>,
}

/// Builds radius and configuration words for one decomposition under one
/// tolerance. Encoding sessions are value-scoped: the codebooks live here.
pub struct WordBuilder<'a, T: Real> {
    decomp: &'a RadialDecomposition<T>,
    encoding: Encoding<T>,
    radius_words: Vec<RadiusWord<T>>,
}

impl<'a, T: Real> WordBuilder<'a, T> {
    pub fn new(decomp: &'a RadialDecomposition<T>, tol: Tolerance<T>) -> Self {
        let encoding = encode_letters(decomp, tol);
        let center_occupied = decomp.center_sensor.is_some();
        let radius_words = decomp
            .radii
            .iter()
            .map(|r| radius_word(r, decomp.circle.radius, center_occupied, &encoding))
            .collect();
        Self {
            decomp,
            encoding,
            radius_words,
        }
    }

    pub fn decomposition(&self) -> &RadialDecomposition<T> {
        self.decomp
    }

    pub fn encoding(&self) -> &Encoding<T> {
        &self.encoding
    }

    pub fn radius_count(&self) -> usize {
        self.decomp.radius_count()
    }

    pub fn radius_word(&self, index: usize) -> &RadiusWord<T> {
        &self.radius_words[index]
    }

    pub fn radius_words(&self) -> &[RadiusWord<T>] {
        &self.radius_words
    }

    /// Radius indices and angle letters along the walk from `start`; the
    /// angle of step `j` spans from that radius to the next one in the walk.
    fn walk(&self, start: usize, orientation: Orientation) -> Vec<(usize, Letter<T>)> {
        let k = self.radius_count();
        (0..k)
            .map(|j| {
                let r = match orientation {
                    Orientation::Ccw => (start + j) % k,
                    Orientation::Cw => (start + k - j % k) % k,
                };
                let sector = match orientation {
                    Orientation::Ccw => r,
                    Orientation::Cw => (r + k - 1) % k,
                };
                let alpha = self.encoding.angles.letter(self.decomp.angles_ccw[sector]);
                (r, alpha)
            })
            .collect()
    }

    /// The configuration word from `start` in `orientation`.
    pub fn weak_word(&self, start: usize, orientation: Orientation) -> ConfigWord<WeakLetter<T>> {
        let body = if self.decomp.center_sensor.is_some() {
            WordBody::Center
        } else {
            WordBody::Letters(
                self.walk(start, orientation)
                    .into_iter()
                    .map(|(r, alpha)| WeakLetter {
                        rho: self.radius_words[r].clone(),
                        alpha,
                    })
                    .collect(),
            )
        };
        ConfigWord {
            start,
            orientation,
            body,
        }
    }

    /// The strong configuration word from `start` in `orientation`, given
    /// per-radius symmetry types.
    pub fn strong_word(
        &self,
        start: usize,
        orientation: Orientation,
        types: &[SymmetryType],
    ) -> ConfigWord<StrongLetter<T>> {
        let body = if self.decomp.center_sensor.is_some() {
            WordBody::Center
        } else {
            debug_assert_eq!(types.len(), self.radius_count());
            WordBody::Letters(
                self.walk(start, orientation)
                    .into_iter()
                    .map(|(r, alpha)| StrongLetter {
                        sym: types[r],
                        rho: self.radius_words[r].clone(),
                        alpha,
                    })
                    .collect(),
            )
        };
        ConfigWord {
            start,
            orientation,
            body,
        }
    }

    /// True when the configuration words in the given orientation are strict
    /// powers, which happens exactly when the configuration is invariant
    /// under a nontrivial rotation about the center. All words in one
    /// orientation are rotations of each other, so testing one start
    /// suffices. Returns `false` for center configurations, which
    /// short-circuit before periodicity matters.
    pub fn is_strictly_periodic_family(&self, orientation: Orientation) -> bool {
        if self.decomp.center_sensor.is_some() || self.radius_count() == 0 {
            return false;
        }
        let word = self.weak_word(0, orientation);
        !is_primitive(word.body.letters())
    }
}

const DISTANCE_GLYPHS: &str = "abcdefghijklmnopqrstuvwxyz";
const ANGLE_GLYPHS: [&str; 16] = [
    "α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ", "ν", "ξ", "ο", "π",
];

/// Glyph for a distance letter rank: `a`, `b`, … then `l<rank>`.
pub fn distance_glyph(rank: u32) -> String {
    DISTANCE_GLYPHS
        .chars()
        .nth(rank as usize)
        .map(|c| c.to_string())
        .unwrap_or_else(|| format!("l{rank}"))
}

/// Glyph for an angle letter rank: `α`, `β`, … then `g<rank>`.
pub fn angle_glyph(rank: u32) -> String {
    ANGLE_GLYPHS
        .get(rank as usize)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("g{rank}"))
}

impl<T> fmt::Display for RadiusWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusWord::Zero => f.write_str("0"),
            RadiusWord::Letters(ls) => {
                for l in ls {
                    f.write_str(&distance_glyph(l.rank))?;
                }
                Ok(())
            }
        }
    }
}

impl<T> fmt::Display for WeakLetter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho, angle_glyph(self.alpha.rank))
    }
}

impl<T> fmt::Display for StrongLetter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})",
            self.sym,
            self.rho,
            angle_glyph(self.alpha.rank)
        )
    }
}

impl<T> fmt::Display for WordBody<WeakLetter<T>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordBody::Center => f.write_str("(0,0)"),
            WordBody::Letters(ls) => {
                for l in ls {
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

impl<T> fmt::Display for WordBody<StrongLetter<T>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordBody::Center => f.write_str("(0,0,0)"),
            WordBody::Letters(ls) => {
                for l in ls {
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

/// The word of a single radius: the `Zero` token when the center is
/// occupied, otherwise the letters coding successive normalized gaps
/// `d(p_{i-1}, p_i) / σ` outward from the center.
pub fn radius_word<T: Real>(
    radius: &Radius<T>,
    sigma: T,
    center_occupied: bool,
    encoding: &Encoding<T>,
) -> RadiusWord<T> {
    if center_occupied {
        return RadiusWord::Zero;
    }
    let mut letters = Vec::with_capacity(radius.sensors.len());
    let mut prev = T::zero();
    for &(_, d) in &radius.sensors {
        letters.push(encoding.distances.letter((d - prev) / sigma));
        prev = d;
    }
    RadiusWord::Letters(letters)
}
