//! Order-preserving integer coding of real quantities.
//!
//! Values are clustered under the tolerance and each cluster becomes one
//! letter rank, so for any two coded values `x ≤ y` implies `rank(x) ≤
//! rank(y)` and distinct ranks reflect genuinely distinct values. Distance
//! codes and angle codes live in separate codebooks and are never compared
//! to each other.

use super::Letter;
use crate::geometry::RadialDecomposition;
use crate::scalar::{Real, Tolerance};

#[derive(Debug, Clone, PartialEq)]
struct CodeClass<T> {
    lo: T,
    hi: T,
    representative: T,
}

/// One namespace of letter codes: the sorted value classes of an encoding
/// session.
#[derive(Debug, Clone, PartialEq)]
pub struct Codebook<T> {
    classes: Vec<CodeClass<T>>,
    eps: T,
}

impl<T: Real> Codebook<T> {
    /// Clusters the values (chains of neighbors closer than `eps` merge) and
    /// assigns dense ranks in increasing value order.
    pub fn build(mut values: Vec<T>, eps: T) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite code value"));
        let mut classes: Vec<(T, T, T, usize)> = Vec::new(); // (lo, hi, sum, count)
        for v in values {
            match classes.last_mut() {
                Some(c) if v - c.1 < eps => {
                    c.1 = v;
                    c.2 = c.2 + v;
                    c.3 += 1;
                }
                _ => classes.push((v, v, v, 1)),
            }
        }
        Codebook {
            classes: classes
                .into_iter()
                .map(|(lo, hi, sum, count)| CodeClass {
                    lo,
                    hi,
                    representative: sum / T::from_f64_lossy(count as f64),
                })
                .collect(),
            eps,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Representative (mean) value of a class, for reporting.
    pub fn class_value(&self, rank: usize) -> T {
        self.classes[rank].representative
    }

    /// The letter for a value that was part of the encoding session.
    ///
    /// Panics if the value falls in no class; encodings are value-scoped, so
    /// every value that will ever be looked up was seen by [`Codebook::build`].
    pub fn letter(&self, value: T) -> Letter<T> {
        let idx = self.classes.partition_point(|c| c.hi < value - self.eps);
        let class = self
            .classes
            .get(idx)
            .filter(|c| value >= c.lo - self.eps && value <= c.hi + self.eps)
            .unwrap_or_else(|| panic!("value {value} outside every code class"));
        Letter {
            rank: idx as u32,
            value: class.representative,
        }
    }
}

/// The two letter namespaces of one encoding session.
#[derive(Debug, Clone, PartialEq)]
pub struct Encoding<T> {
    pub distances: Codebook<T>,
    pub angles: Codebook<T>,
}

/// Collects every quantity the words will code — consecutive sensor gaps
/// along each radius, normalized by the circle radius, plus the successive
/// inter-radius angles — and builds both codebooks.
pub fn encode_letters<T: Real>(
    decomp: &RadialDecomposition<T>,
    tol: Tolerance<T>,
) -> Encoding<T> {
    let sigma = decomp.circle.radius;
    let mut gaps = Vec::new();
    for radius in &decomp.radii {
        let mut prev = T::zero();
        for &(_, d) in &radius.sensors {
            gaps.push((d - prev) / sigma);
            prev = d;
        }
    }
    let eps = tol.unit_eps();
    Encoding {
        distances: Codebook::build(gaps, eps),
        angles: Codebook::build(decomp.angles_ccw.clone(), eps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{decompose, Configuration};
    use approx::assert_relative_eq;

    #[test]
    fn values_within_tolerance_share_a_class() {
        let book = Codebook::build(vec![0.5, 0.5 + 1e-12, 0.9], 1e-9);
        assert_eq!(book.len(), 2);
        assert_eq!(book.letter(0.5).rank, 0);
        assert_eq!(book.letter(0.5 + 1e-12).rank, 0);
        assert_eq!(book.letter(0.9).rank, 1);
        assert_relative_eq!(book.class_value(0), 0.5, epsilon = 1e-10);
    }

    #[test]
    fn ranks_follow_value_order() {
        let book = Codebook::build(vec![0.7, 0.1, 0.4], 1e-9);
        assert!(book.letter(0.1) < book.letter(0.4));
        assert!(book.letter(0.4) < book.letter(0.7));
    }

    #[test]
    #[should_panic(expected = "outside every code class")]
    fn unknown_value_panics() {
        let book = Codebook::build(vec![0.5], 1e-9);
        book.letter(0.75);
    }

    #[test]
    fn boundary_only_configuration_has_one_distance_class() {
        let config =
            Configuration::from_xy(&[(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]).unwrap();
        let d = decompose(&config, Tolerance::default()).unwrap();
        let enc = encode_letters(&d, Tolerance::default());
        assert_eq!(enc.distances.len(), 1);
        assert_relative_eq!(enc.distances.class_value(0), 1.0, epsilon = 1e-9);
        for radius in &d.radii {
            assert_eq!(enc.distances.letter(radius.sensors[0].1 / d.circle.radius).rank, 0);
        }
    }
}
