//! Deterministic seeded generators.
//!
//! All randomness flows through [`RationalStream`]: a ChaCha8 stream keyed by
//! the seed, with the retry counter selecting the stream. Values are
//! rationals with denominator `2^20`. Every generator verifies its own
//! post-condition and re-seeds until it holds.

use num::{BigInt, One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{integer, is_general_position, Configuration, Point, PointId, Scalar};
use crate::linprog::point_in_hull;
use crate::pivot::DoubledConfig;

const DENOM_BITS: u32 = 20;
const REPAIR_ATTEMPTS: u64 = 256;

/// Seeded stream of rationals with denominator `2^20`.
pub struct RationalStream {
    rng: ChaCha8Rng,
}

impl RationalStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RationalStream { rng }
    }

    fn denom() -> i64 {
        1 << DENOM_BITS
    }

    fn ratio(k: i64) -> Scalar {
        Scalar::new(BigInt::from(k), BigInt::from(Self::denom()))
    }

    /// Uniform on the grid of `[-1, 1]`.
    pub fn unit(&mut self) -> Scalar {
        let n = Self::denom();
        Self::ratio(self.rng.gen_range(-n..=n))
    }

    /// Uniform on the grid of the open interval `(-1, 1)`.
    pub fn open_unit(&mut self) -> Scalar {
        let n = Self::denom();
        Self::ratio(self.rng.gen_range(-n + 1..n))
    }

    /// Uniform on the grid of `[lo, hi]`.
    pub fn in_range(&mut self, lo: &Scalar, hi: &Scalar) -> Scalar {
        let n = Self::denom();
        lo + (hi - lo) * Self::ratio(self.rng.gen_range(0..=n))
    }

    pub fn point_in_box(&mut self, d: usize, half_width: &Scalar) -> Point {
        Point::new((0..d).map(|_| self.unit() * half_width).collect())
    }

    /// A point strictly inside the ball of `radius` about the origin.
    pub fn point_in_ball(&mut self, d: usize, radius: &Scalar) -> Point {
        let r2 = radius * radius;
        loop {
            let p = Point::new((0..d).map(|_| self.open_unit() * radius).collect());
            if p.squared_norm() < r2 {
                return p;
            }
        }
    }
}

/// Nonzero direction number `attempt` of the chain derived from `seed`.
pub fn direction_chain(d: usize, seed: u64, attempt: u64) -> Point {
    let mut s = RationalStream::new(seed ^ 0x9e37_79b9_7f4a_7c15, attempt);
    loop {
        let p = s.point_in_box(d, &Scalar::one());
        if !p.is_origin() {
            return p;
        }
    }
}

/// Vertices of the reference simplex around the origin: `e_1, ..., e_d` and
/// `-(e_1 + ... + e_d)`.
pub fn simplex_vertices(d: usize) -> Vec<Point> {
    let mut v: Vec<Point> = (0..d)
        .map(|i| Point::new((0..d).map(|k| integer((k == i) as i64)).collect()))
        .collect();
    v.push(Point::new(vec![integer(-1); d]));
    v
}

fn repair<T>(what: &str, mut attempt_fn: impl FnMut(u64) -> Result<Option<T>>) -> Result<T> {
    for attempt in 0..REPAIR_ATTEMPTS {
        if let Some(v) = attempt_fn(attempt)? {
            return Ok(v);
        }
    }
    Err(Error::RetryExhausted(format!(
        "{what}: no valid configuration after {REPAIR_ATTEMPTS} attempts"
    )))
}

/// Builds a configuration and keeps it only if it is valid and in general
/// position.
fn accept(d: usize, colours: Vec<Vec<Point>>) -> Option<Configuration> {
    let c = Configuration::new(d, colours).ok()?;
    is_general_position(&c).holds().then_some(c)
}

/// `n` points per colour clustered within `radius` of the vertices of the
/// reference simplex.
pub fn gen_simplex_cluster(
    d: usize,
    n_per_colour: usize,
    radius: &Scalar,
    seed: u64,
) -> Result<Configuration> {
    if d == 0 || n_per_colour == 0 {
        return Err(Error::Precondition(
            "dimension and cluster size must be positive".into(),
        ));
    }
    if !radius.is_positive() {
        return Err(Error::Precondition("radius must be positive".into()));
    }
    if *radius >= Scalar::one() {
        return Err(Error::Precondition(format!(
            "radius {radius} lets a cluster reach the origin"
        )));
    }
    let vertices = simplex_vertices(d);
    repair("simplex cluster", |attempt| {
        let mut s = RationalStream::new(seed, attempt);
        let colours = vertices
            .iter()
            .map(|v| {
                (0..n_per_colour)
                    .map(|_| v.add(&s.point_in_ball(d, radius)))
                    .collect()
            })
            .collect();
        Ok(accept(d, colours))
    })
}

/// Each colour holds a perturbed, rescaled copy of the reference simplex
/// (so it contains the origin) plus `n - (d + 1)` points from the ball of
/// radius 2.
pub fn gen_random_barany(d: usize, n_per_colour: usize, seed: u64) -> Result<Configuration> {
    if d == 0 || n_per_colour < d + 1 {
        return Err(Error::Precondition(format!(
            "need at least d+1 = {} points per colour",
            d + 1
        )));
    }
    let vertices = simplex_vertices(d);
    let origin = Point::origin(d);
    let (half, two, eighth) = (
        Scalar::new(1.into(), 2.into()),
        integer(2),
        Scalar::new(1.into(), 8.into()),
    );
    repair("random Barany configuration", |attempt| {
        let mut s = RationalStream::new(seed, attempt);
        let colours: Vec<Vec<Point>> = (0..=d)
            .map(|_| {
                let scale = s.in_range(&half, &two);
                let mut class: Vec<Point> = vertices
                    .iter()
                    .map(|v| v.scale(&scale).add(&s.point_in_box(d, &(&scale * &eighth))))
                    .collect();
                class.extend((d + 1..n_per_colour).map(|_| s.point_in_ball(d, &two)));
                class
            })
            .collect();
        for class in &colours {
            if point_in_hull(class, &origin)?.is_none() {
                return Ok(None);
            }
        }
        Ok(accept(d, colours))
    })
}

/// Points drawn from the ball of `radius` about `centre`, `sizes[c]` of
/// colour `c`.
pub fn gen_random_ball(
    d: usize,
    sizes: &[usize],
    centre: &Point,
    radius: &Scalar,
    seed: u64,
) -> Result<Configuration> {
    if sizes.len() != d + 1 || centre.dim() != d {
        return Err(Error::Precondition(
            "need d+1 sizes and a centre in R^d".into(),
        ));
    }
    if !radius.is_positive() {
        return Err(Error::Precondition("radius must be positive".into()));
    }
    repair("random ball configuration", |attempt| {
        let mut s = RationalStream::new(seed, attempt);
        let colours = sizes
            .iter()
            .map(|&n| {
                (0..n)
                    .map(|_| centre.add(&s.point_in_ball(d, radius)))
                    .collect()
            })
            .collect();
        Ok(accept(d, colours))
    })
}

/// Two points per colour: a rescaled perturbed vertex `V_i` of the reference
/// simplex and a rescaled perturbed antipode `-V_i`. At least one colourful
/// simplex contains the origin.
pub fn gen_doubled(d: usize, seed: u64) -> Result<DoubledConfig> {
    if d == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    let vertices = simplex_vertices(d);
    let origin = Point::origin(d);
    let (half, three_halves, third) = (
        Scalar::new(1.into(), 2.into()),
        Scalar::new(3.into(), 2.into()),
        Scalar::new(1.into(), 3.into()),
    );
    repair("doubled configuration", |attempt| {
        let mut s = RationalStream::new(seed, attempt);
        let pairs: Vec<[Point; 2]> = vertices
            .iter()
            .map(|v| {
                let a = v
                    .scale(&s.in_range(&half, &three_halves))
                    .add(&s.point_in_box(d, &third));
                let b = v
                    .neg()
                    .scale(&s.in_range(&half, &three_halves))
                    .add(&s.point_in_box(d, &third));
                [a, b]
            })
            .collect();
        let Some(config) = accept(d, pairs.iter().map(|p| p.to_vec()).collect()) else {
            return Ok(None);
        };
        let mut any = false;
        for mask in 0..1usize << (d + 1) {
            let ids: Vec<PointId> = (0..=d).map(|c| PointId::new(c, mask >> c & 1)).collect();
            if point_in_hull(&config.points_of(&ids), &origin)?.is_some() {
                any = true;
                break;
            }
        }
        if !any {
            return Ok(None);
        }
        DoubledConfig::from_configuration(config, d).map(Some)
    })
}

/// Shifts every coordinate by a seeded rational in `(-magnitude, magnitude)`
/// and retries until the copy is in general position.
pub fn perturb(config: &Configuration, magnitude: &Scalar, seed: u64) -> Result<Configuration> {
    if !magnitude.is_positive() {
        return Err(Error::Precondition(
            "perturbation magnitude must be positive".into(),
        ));
    }
    let d = config.dimension();
    repair("perturbation", |attempt| {
        let mut s = RationalStream::new(seed, attempt);
        let colours = config
            .colours()
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|p| {
                        Point::new(
                            p.coords()
                                .iter()
                                .map(|x| x + s.open_unit() * magnitude)
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        Ok(accept(d, colours))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational;
    use num::Zero;

    fn on_stream_grid(x: &Scalar) -> bool {
        (BigInt::from(RationalStream::denom()) % x.denom()).is_zero()
    }

    #[test]
    fn cluster_examples() {
        let c = gen_simplex_cluster(2, 3, &rational(1, 100), 7).unwrap();
        assert_eq!(c.total_points(), 9);
        assert!(c.colours().iter().all(|k| k.len() == 3));
        let single = gen_simplex_cluster(3, 1, &rational(1, 100), 7).unwrap();
        let ids: Vec<PointId> = single.ids().collect();
        assert!(point_in_hull(&single.points_of(&ids), &Point::origin(3))
            .unwrap()
            .is_some());
        assert!(gen_simplex_cluster(2, 3, &integer(10), 7).is_err());
    }

    #[test]
    fn cluster_points_stay_near_their_vertex() {
        let r = rational(1, 100);
        let c = gen_simplex_cluster(3, 4, &r, 3).unwrap();
        for (class, v) in c.colours().iter().zip(simplex_vertices(3)) {
            for p in class {
                assert!(p.sub(&v).squared_norm() < &r * &r);
            }
        }
    }

    #[test]
    fn barany_examples() {
        let c = gen_random_barany(2, 4, 13).unwrap();
        for class in c.colours() {
            assert!(point_in_hull(class, &Point::origin(2)).unwrap().is_some());
        }
        assert!(gen_random_barany(2, 2, 13).is_err());
    }

    #[test]
    fn doubled_examples() {
        let d1 = gen_doubled(1, 1).unwrap();
        assert_eq!(d1.config().total_points(), 4);
        let d3 = gen_doubled(3, 5).unwrap();
        assert_eq!(d3.pivot_colour(), 3);
        // Containing systems of a doubled configuration come in pairs.
        for d in [&d1, &d3] {
            let n = crate::census::enumerate_containing(d.config(), 1 << 10).unwrap().len();
            assert!(n >= 2 && n.is_multiple_of(2), "{n}");
        }
        assert_eq!(crate::census::enumerate_containing(d1.config(), 1 << 10).unwrap().len(), 2);
    }

    #[test]
    fn perturbation_repairs_collinear_input() {
        let c = Configuration::new(
            2,
            vec![
                vec![Point::from_integers(&[1, 0])],
                vec![Point::from_integers(&[2, 0])],
                vec![Point::from_integers(&[3, 0])],
            ],
        )
        .unwrap();
        assert!(!is_general_position(&c).holds());
        let q = perturb(&c, &rational(1, 1000), 4).unwrap();
        assert!(is_general_position(&q).holds());
        assert_eq!(q, perturb(&c, &rational(1, 1000), 4).unwrap());
        assert!(perturb(&c, &Scalar::zero(), 4).is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(
            gen_random_barany(3, 4, 11).unwrap(),
            gen_random_barany(3, 4, 11).unwrap()
        );
        assert_ne!(
            gen_random_barany(3, 4, 11).unwrap(),
            gen_random_barany(3, 4, 12).unwrap()
        );
        assert_eq!(direction_chain(3, 1, 2), direction_chain(3, 1, 2));
        assert_ne!(direction_chain(3, 1, 2), direction_chain(3, 1, 3));
    }

    #[test]
    fn stream_values_live_on_the_grid() {
        let mut s = RationalStream::new(9, 0);
        for _ in 0..100 {
            let x = s.unit();
            assert!(on_stream_grid(&x));
            assert!(x.abs() <= Scalar::one());
            assert!(s.open_unit().abs() < Scalar::one());
        }
    }
}
