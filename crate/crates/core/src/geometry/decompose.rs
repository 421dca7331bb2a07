//! Radial decomposition: the geometric normal form every word is built from.
//!
//! Sensors are grouped onto the occupied radii of the smallest enclosing
//! circle. Points are sorted by polar angle about the center and consecutive
//! points whose angular gap is below tolerance share a radius; near-ties right
//! at the tolerance boundary can flip a cluster split, which is why the
//! tolerance is caller-controlled.

use super::{smallest_enclosing_circle, Circle, Configuration, Point};
use crate::error::{Error, Result};
use crate::scalar::{Real, Tolerance};

/// An occupied radius: a ray from the center through at least one sensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Radius<T> {
    /// Unit vector from the center along the ray.
    pub direction: Point<T>,
    /// Polar angle of `direction`, in `(-π, π]`.
    pub angle: T,
    /// `(sensor index, distance from center)`, sorted by increasing distance.
    pub sensors: Vec<(usize, T)>,
}

impl<T: Real> Radius<T> {
    /// The sensor on this radius nearest to the center.
    pub fn nearest(&self) -> (usize, T) {
        self.sensors[0]
    }
}

/// The configuration reduced to its circle, optional center sensor, occupied
/// radii in counterclockwise order, and successive inter-radius angles.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialDecomposition<T> {
    pub circle: Circle<T>,
    /// Index of the sensor at the circle center, if any.
    pub center_sensor: Option<usize>,
    /// Occupied radii sorted by polar angle (counterclockwise).
    pub radii: Vec<Radius<T>>,
    /// `angles_ccw[i]` is the counterclockwise angle from `radii[i]` to
    /// `radii[(i + 1) % len]`; the entries sum to 2π.
    pub angles_ccw: Vec<T>,
}

impl<T: Real> RadialDecomposition<T> {
    pub fn radius_count(&self) -> usize {
        self.radii.len()
    }

    /// Total sensors accounted for (center sensor plus all on-radius sensors).
    pub fn sensor_count(&self) -> usize {
        self.center_sensor.iter().len() + self.radii.iter().map(|r| r.sensors.len()).sum::<usize>()
    }
}

/// Counterclockwise angle from `from` to `to`, in `[0, 2π)`.
fn ccw_gap<T: Real>(from: T, to: T) -> T {
    let mut d = to - from;
    while d < T::zero() {
        d = d + T::two_pi();
    }
    while d >= T::two_pi() {
        d = d - T::two_pi();
    }
    d
}

pub fn decompose<T: Real>(
    config: &Configuration<T>,
    tol: Tolerance<T>,
) -> Result<RadialDecomposition<T>> {
    let circle = smallest_enclosing_circle(config);
    let n = config.len();
    if n == 1 {
        // the degenerate circle of radius 0: the lone sensor is its center
        return Ok(RadialDecomposition {
            circle,
            center_sensor: Some(0),
            radii: Vec::new(),
            angles_ccw: Vec::new(),
        });
    }

    let eps_pos = tol.length_eps(circle.radius);
    for i in 0..n {
        for j in (i + 1)..n {
            if config.get(i).distance(config.get(j)) <= eps_pos {
                return Err(Error::DegenerateInput { first: i, second: j });
            }
        }
    }

    let mut center_sensor: Option<usize> = None;
    // (index, distance, polar angle) for every off-center sensor
    let mut polar: Vec<(usize, T, T)> = Vec::with_capacity(n);
    for (i, &p) in config.points().iter().enumerate() {
        let v = p - circle.center;
        let d = v.norm();
        if d <= eps_pos {
            if let Some(first) = center_sensor {
                return Err(Error::DegenerateInput { first, second: i });
            }
            center_sensor = Some(i);
        } else {
            polar.push((i, d, v.angle()));
        }
    }

    polar.sort_by(|a, b| {
        a.2.partial_cmp(&b.2)
            .expect("finite angle")
            .then(a.1.partial_cmp(&b.1).expect("finite distance"))
            .then(a.0.cmp(&b.0))
    });

    let angle_eps = tol.unit_eps();
    let mut clusters: Vec<Vec<(usize, T, T)>> = Vec::new();
    for entry in polar {
        match clusters.last_mut() {
            Some(cluster) if ccw_gap(cluster.last().unwrap().2, entry.2) < angle_eps => {
                cluster.push(entry);
            }
            _ => clusters.push(vec![entry]),
        }
    }
    // wraparound across the ±π cut: the last cluster may continue the first
    if clusters.len() > 1 {
        let last_angle = clusters.last().unwrap().last().unwrap().2;
        let first_angle = clusters[0][0].2;
        if ccw_gap(last_angle, first_angle) < angle_eps {
            let tail = clusters.pop().unwrap();
            clusters[0].extend(tail);
        }
    }

    let mut radii: Vec<Radius<T>> = clusters
        .into_iter()
        .map(|mut members| {
            members.sort_by(|a, b| a.1.partial_cmp(&b.1).expect("finite distance"));
            // the farthest member carries the most reliable angular estimate
            let angle = members.last().unwrap().2;
            Radius {
                direction: Point::from_polar(T::one(), angle),
                angle,
                sensors: members.into_iter().map(|(i, d, _)| (i, d)).collect(),
            }
        })
        .collect();
    radii.sort_by(|a, b| a.angle.partial_cmp(&b.angle).expect("finite angle"));

    let k = radii.len();
    let angles_ccw: Vec<T> = if k == 1 {
        vec![T::two_pi()]
    } else {
        (0..k)
            .map(|i| ccw_gap(radii[i].angle, radii[(i + 1) % k].angle))
            .collect()
    };

    let decomp = RadialDecomposition {
        circle,
        center_sensor,
        radii,
        angles_ccw,
    };
    debug_assert_eq!(decomp.sensor_count(), n);
    Ok(decomp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, TAU};

    fn default_tol() -> Tolerance<f64> {
        Tolerance::default()
    }

    #[test]
    fn square_has_four_right_angles() {
        let config =
            Configuration::from_xy(&[(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0)]).unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert_eq!(d.radius_count(), 4);
        assert!(d.center_sensor.is_none());
        for (i, a) in d.angles_ccw.iter().enumerate() {
            assert_relative_eq!(*a, FRAC_PI_2, epsilon = 1e-9, max_relative = 1e-9);
            assert_eq!(d.radii[i].sensors.len(), 1);
            assert_relative_eq!(d.radii[i].sensors[0].1, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn midpoint_of_diameter_is_the_center_sensor() {
        let config = Configuration::from_xy(&[(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0)]).unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert_eq!(d.center_sensor, Some(0));
        assert_eq!(d.radius_count(), 2);
    }

    #[test]
    fn right_triangle_has_no_center_sensor() {
        // circumcenter of this triangle is (0.5, 0.5), which is unoccupied
        let config = Configuration::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert!(d.center_sensor.is_none());
        assert_eq!(d.radius_count(), 3);
        assert_relative_eq!(d.circle.center.x, 0.5, epsilon = 1e-12);
        assert_relative_eq!(d.circle.center.y, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn coincident_points_within_tolerance_are_rejected() {
        let config =
            Configuration::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1e-12)]).unwrap();
        assert_eq!(
            decompose(&config, default_tol()),
            Err(Error::DegenerateInput { first: 1, second: 2 })
        );
    }

    #[test]
    fn single_point_decomposes_to_center_only() {
        let config = Configuration::from_xy(&[(2.0, 3.0)]).unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert_eq!(d.center_sensor, Some(0));
        assert_eq!(d.radius_count(), 0);
        assert_eq!(d.circle.radius, 0.0);
    }

    #[test]
    fn collinear_points_share_a_radius() {
        // three points on one ray plus a counterweight
        let config = Configuration::from_xy(&[(0.5, 0.0), (1.0, 0.0), (0.25, 0.0), (-1.0, 0.0)])
            .unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert_eq!(d.radius_count(), 2);
        let east = d.radii.iter().find(|r| r.angle.abs() < 1e-9).unwrap();
        assert_eq!(
            east.sensors.iter().map(|&(i, _)| i).collect::<Vec<_>>(),
            vec![2, 0, 1]
        );
        for &(i, dist) in &east.sensors {
            let p = d.circle.center + east.direction * dist;
            assert_relative_eq!(p.x, config.get(i).x, epsilon = 1e-9);
            assert_relative_eq!(p.y, config.get(i).y, epsilon = 1e-9);
        }
    }

    #[test]
    fn angle_closure_and_partition() {
        let config = Configuration::from_xy(&[
            (0.9, 0.1),
            (0.3, 0.8),
            (-0.5, 0.4),
            (-0.7, -0.6),
            (0.2, -0.9),
            (0.05, 0.03),
        ])
        .unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert_eq!(d.sensor_count(), config.len());
        let total: f64 = d.angles_ccw.iter().sum();
        assert_relative_eq!(total, TAU, epsilon = 1e-9);
    }

    #[test]
    fn clusters_merge_across_the_angle_cut() {
        // two sensors straddling the -x axis land on one radius
        let config = Configuration::from_xy(&[
            (-0.5, 1e-13),
            (-1.0, -1e-13),
            (1.0, 0.0),
            (0.0, 1.0),
        ])
        .unwrap();
        let d = decompose(&config, default_tol()).unwrap();
        assert_eq!(d.radius_count(), 3);
        let west = d
            .radii
            .iter()
            .find(|r| (r.angle.abs() - std::f64::consts::PI).abs() < 1e-6)
            .unwrap();
        assert_eq!(west.sensors.len(), 2);
    }
}
