//! Smallest enclosing circle, computed by the incremental move-to-front
//! method in expected linear time.
//!
//! The input is first brought into a canonical order (sorted by coordinates)
//! and then shuffled with a fixed seed, so the returned circle is bit-stable
//! across runs and across permutations of the same point set.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Circle, Configuration, Point};
use crate::scalar::Real;

const SHUFFLE_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// Multiplicative slack used for containment tests during construction.
fn slack<T: Real>() -> T {
    T::epsilon() * T::from_f64_lossy(64.0)
}

/// The unique minimal-radius circle containing all points of the
/// configuration. A single point yields the degenerate circle of radius 0.
pub fn smallest_enclosing_circle<T: Real>(config: &Configuration<T>) -> Circle<T> {
    let mut pts: Vec<Point<T>> = config.points().to_vec();
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .expect("finite coordinates")
            .then(a.y.partial_cmp(&b.y).expect("finite coordinates"))
    });
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    let mut circle = Circle::new(pts[0], T::zero());
    for i in 1..pts.len() {
        if !circle.contains(pts[i], slack()) {
            circle = circle_with_one_boundary(&pts[..=i], pts[i]);
        }
    }
    circle
}

// `p` is on the boundary of the result.
fn circle_with_one_boundary<T: Real>(pts: &[Point<T>], p: Point<T>) -> Circle<T> {
    let mut circle = Circle::new(p, T::zero());
    for (i, &q) in pts.iter().enumerate() {
        if !circle.contains(q, slack()) {
            circle = if circle.radius == T::zero() {
                diameter_circle(p, q)
            } else {
                circle_with_two_boundary(&pts[..=i], p, q)
            };
        }
    }
    circle
}

// `p` and `q` are on the boundary of the result.
fn circle_with_two_boundary<T: Real>(pts: &[Point<T>], p: Point<T>, q: Point<T>) -> Circle<T> {
    let base = diameter_circle(p, q);
    let mut left: Option<Circle<T>> = None;
    let mut right: Option<Circle<T>> = None;

    let pq = q - p;
    for &r in pts {
        if base.contains(r, slack()) {
            continue;
        }
        let side = pq.cross(r - p);
        let Some(c) = circumcircle(p, q, r) else {
            continue;
        };
        let c_side = pq.cross(c.center - p);
        if side > T::zero() {
            if left.map_or(true, |l| c_side > pq.cross(l.center - p)) {
                left = Some(c);
            }
        } else if side < T::zero() && right.map_or(true, |r0| c_side < pq.cross(r0.center - p)) {
            right = Some(c);
        }
    }

    match (left, right) {
        (None, None) => base,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                l
            } else {
                r
            }
        }
    }
}

fn diameter_circle<T: Real>(a: Point<T>, b: Point<T>) -> Circle<T> {
    let half = T::from_f64_lossy(0.5);
    let center = Point::new((a.x + b.x) * half, (a.y + b.y) * half);
    Circle::new(center, center.distance(a).max(center.distance(b)))
}

/// Circumcircle of three points, or `None` when they are collinear.
/// Coordinates are shifted to the triangle's midrange first for stability.
fn circumcircle<T: Real>(a: Point<T>, b: Point<T>, c: Point<T>) -> Option<Circle<T>> {
    let half = T::from_f64_lossy(0.5);
    let ox = (a.x.min(b.x).min(c.x) + a.x.max(b.x).max(c.x)) * half;
    let oy = (a.y.min(b.y).min(c.y) + a.y.max(b.y).max(c.y)) * half;
    let (ax, ay) = (a.x - ox, a.y - oy);
    let (bx, by) = (b.x - ox, b.y - oy);
    let (cx, cy) = (c.x - ox, c.y - oy);
    let two = T::from_f64_lossy(2.0);
    let d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * two;
    if d == T::zero() {
        return None;
    }
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let x = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let y = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    let center = Point::new(ox + x, oy + y);
    let radius = center.distance(a).max(center.distance(b)).max(center.distance(c));
    Some(Circle::new(center, radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::Rng;

    #[test]
    fn two_points_span_a_diameter() {
        let config = Configuration::from_xy(&[(0.0, 0.0), (2.0, 0.0)]).unwrap();
        let c = smallest_enclosing_circle(&config);
        assert_relative_eq!(c.center.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(c.center.y, 0.0, epsilon = 1e-12);
        assert_relative_eq!(c.radius, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn equilateral_triangle_circumcircle() {
        let h = 3f64.sqrt() / 2.0;
        let config = Configuration::from_xy(&[(1.0, 0.0), (-0.5, h), (-0.5, -h)]).unwrap();
        let c = smallest_enclosing_circle(&config);
        assert_relative_eq!(c.center.x, 0.0, epsilon = 1e-12);
        assert_relative_eq!(c.center.y, 0.0, epsilon = 1e-12);
        assert_relative_eq!(c.radius, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn single_point_gives_zero_radius() {
        let config = Configuration::from_xy(&[(3.0, 4.0)]).unwrap();
        let c = smallest_enclosing_circle(&config);
        assert_eq!(c.center, Point::new(3.0, 4.0));
        assert_eq!(c.radius, 0.0);
    }

    #[test]
    fn result_is_independent_of_input_order() {
        let pts = [(0.1, 0.9), (0.4, 0.2), (0.8, 0.7), (0.3, 0.3), (0.9, 0.1)];
        let a = smallest_enclosing_circle(&Configuration::from_xy(&pts).unwrap());
        let mut rev = pts;
        rev.reverse();
        let b = smallest_enclosing_circle(&Configuration::from_xy(&rev).unwrap());
        assert_eq!(a, b); // bit-identical
    }

    #[test]
    fn boundary_rule_holds() {
        // the circle passes through two opposite points or at least three points
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(2..=12);
            let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
            let config = match Configuration::from_xy(&pts) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let c = smallest_enclosing_circle(&config);
            let eps = 1e-9 * c.radius.max(1e-12);
            let on_boundary: Vec<Point<f64>> = config
                .points()
                .iter()
                .copied()
                .filter(|p| (p.distance(c.center) - c.radius).abs() <= eps)
                .collect();
            if on_boundary.len() >= 3 {
                continue;
            }
            assert_eq!(on_boundary.len(), 2, "too few boundary points");
            let mid = diameter_circle(on_boundary[0], on_boundary[1]);
            assert_relative_eq!(mid.center.x, c.center.x, epsilon = 1e-9);
            assert_relative_eq!(mid.center.y, c.center.y, epsilon = 1e-9);
        }
    }
}
