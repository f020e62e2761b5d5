//! Oracles and instance families shared by the integration tests.
//!
//! The oracles only use orientations, determinants and plain rational
//! arithmetic, so they share no code path with the LP or pivoting code they
//! check.

#![allow(dead_code)]

use colourful::gen::{gen_random_ball, gen_random_barany, gen_simplex_cluster, RationalStream};
use colourful::geometry::{orientation, rational, Configuration, Point, PointId, Scalar, Sign};
use itertools::Itertools;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Convex coefficients reproduce `q` exactly.
pub fn coefficients_reproduce(points: &[Point], coefficients: &[Scalar], q: &Point) -> bool {
    if points.len() != coefficients.len() || coefficients.iter().any(Signed::is_negative) {
        return false;
    }
    let total: Scalar = coefficients.iter().sum();
    if total != rational(1, 1) {
        return false;
    }
    let d = q.dim();
    (0..d).all(|k| {
        let s: Scalar = points
            .iter()
            .zip(coefficients)
            .map(|(p, c)| &p.coords()[k] * c)
            .sum();
        s == q.coords()[k]
    })
}

/// Sign of `q` relative to the hyperplane through `t`, normalised so that the
/// origin's side is `Positive`. `None` if the origin lies on the hyperplane.
pub fn side_oracle(t: &[Point], q: &Point) -> Option<Sign> {
    let d = q.dim();
    let with = |x: &Point| {
        let mut v = t.to_vec();
        v.push(x.clone());
        orientation(&v).unwrap()
    };
    let origin_side = with(&Point::origin(d));
    if origin_side == Sign::Zero {
        return None;
    }
    let s = with(q);
    Some(if origin_side == Sign::Positive {
        s
    } else {
        s.flip()
    })
}

/// True iff no point of `S_colour u S_missing` is strictly on the origin's
/// side of `aff(T)`.
pub fn refutation_oracle(
    config: &Configuration,
    t: &[PointId],
    missing: usize,
    colour: usize,
) -> bool {
    let mut colours: Vec<usize> = t.iter().map(|id| id.colour).collect();
    colours.push(missing);
    colours.sort_unstable();
    if colours != (0..config.num_colours()).collect::<Vec<_>>() || colour == missing {
        return false;
    }
    let pts = config.points_of(t);
    config
        .colour(colour)
        .iter()
        .chain(config.colour(missing))
        .all(|q| matches!(side_oracle(&pts, q), Some(s) if s != Sign::Positive))
}

/// Whether `q` lies in `conv(points)`: some affinely independent subset of
/// at most `d + 1` points has `q` in its closed hull. Lower-dimensional
/// subsets are tested in a coordinate projection where they are
/// full-dimensional, then lifted back.
pub fn in_hull_oracle(points: &[Point], q: &Point) -> bool {
    let d = q.dim();
    if points.iter().any(|p| p == q) {
        return true;
    }
    for k in 2..=(d + 1).min(points.len()) {
        for subset in points.iter().cloned().combinations(k) {
            if in_simplex(&subset, q) {
                return true;
            }
        }
    }
    false
}

/// `q` in the closed simplex spanned by `k` affinely independent points.
fn in_simplex(simplex: &[Point], q: &Point) -> bool {
    let d = q.dim();
    let k = simplex.len() - 1;
    // Choose k coordinates on which the simplex projects full-dimensionally;
    // q must also satisfy the remaining affine relations.
    for coords in (0..d).combinations(k) {
        let project =
            |p: &Point| Point::new(coords.iter().map(|&c| p.coords()[c].clone()).collect());
        let proj: Vec<Point> = simplex.iter().map(project).collect();
        let base = orientation(&proj).unwrap();
        if base == Sign::Zero {
            continue;
        }
        let pq = project(q);
        // Barycentric signs in the projection.
        for i in 0..=k {
            let mut v = proj.clone();
            v[i] = pq.clone();
            let s = orientation(&v).unwrap();
            if s != Sign::Zero && s != base {
                return false;
            }
        }
        // The projection is injective on aff(simplex); lift q back and compare.
        return lifts_to(simplex, &proj, &pq, q);
    }
    false
}

/// Solves the barycentric system in the projection with Cramer's rule and
/// checks the lifted point equals `q`.
fn lifts_to(simplex: &[Point], proj: &[Point], pq: &Point, q: &Point) -> bool {
    let k = proj.len() - 1;
    let det = |pts: &[Point]| -> Scalar {
        let rows: Vec<Vec<Scalar>> = pts[1..]
            .iter()
            .map(|p| p.sub(&pts[0]).coords().to_vec())
            .collect();
        colourful::geometry::determinant(rows)
    };
    let base = det(proj);
    let mut lambdas = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut v = proj.to_vec();
        v[i] = pq.clone();
        lambdas.push(det(&v) / &base);
    }
    let lifted = Point::combination(simplex, &lambdas);
    lifted == *q
}

/// Whether the direction `y` lies in the open cone spanned by `d` vectors,
/// by Cramer's rule signs. `None` when `y` is on the boundary or the cone is
/// flat.
pub fn in_open_cone(generators: &[Point], y: &Point) -> Option<bool> {
    let d = y.dim();
    let det_with = |gens: &[Point]| {
        let mut v = vec![Point::origin(d)];
        v.extend_from_slice(gens);
        orientation(&v).unwrap()
    };
    let base = det_with(generators);
    if base == Sign::Zero {
        return None;
    }
    let mut inside = true;
    for i in 0..d {
        let mut g = generators.to_vec();
        g[i] = y.clone();
        match det_with(&g) {
            Sign::Zero => return None,
            s if s != base => inside = false,
            _ => {}
        }
    }
    Some(inside)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_c0de)
}

/// Instance family of the random property checks, `d in {2, 3}`, at most 4
/// points per colour, in general position. Mixes configurations meeting
/// every condition, configurations meeting none, and in-between cases.
pub fn family(seed: u64) -> Configuration {
    let d = 2 + (seed % 2) as usize;
    let mut r = rng(seed);
    let sizes: Vec<usize> = (0..=d).map(|_| r.gen_range(1..=4)).collect();
    let mut centre = Point::origin(d);
    match (seed / 2) % 6 {
        0 => return gen_random_barany(d, r.gen_range(d + 1..=4), seed).unwrap(),
        1 => {
            let radius = [
                rational(1, 100),
                rational(1, 10),
                rational(1, 3),
                rational(3, 4),
            ][r.gen_range(0..4)]
            .clone();
            return gen_simplex_cluster(d, r.gen_range(1..=4), &radius, seed).unwrap();
        }
        2 => {}
        3 => {
            centre = Point::new(
                (0..d)
                    .map(|k| {
                        if k == 0 {
                            rational(1, 2)
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect(),
            )
        }
        4 => {
            centre = Point::new(
                (0..d)
                    .map(|k| {
                        if k == 0 {
                            rational(5, 4)
                        } else {
                            rational(-1, 3)
                        }
                    })
                    .collect(),
            )
        }
        _ => {
            centre = Point::new(
                (0..d)
                    .map(|k| {
                        if k == 0 {
                            rational(3, 1)
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect(),
            )
        }
    }
    gen_random_ball(d, &sizes, &centre, &rational(2, 1), seed).unwrap()
}

/// Planar family with every colour nonempty.
pub fn planar_family(seed: u64) -> Configuration {
    let mut r = rng(seed ^ 0x2d);
    match seed % 3 {
        0 => gen_random_barany(2, r.gen_range(3..=5), seed).unwrap(),
        1 => gen_simplex_cluster(2, r.gen_range(1..=4), &rational(1, 4), seed).unwrap(),
        _ => {
            let sizes: Vec<usize> = (0..3).map(|_| r.gen_range(2..=5)).collect();
            gen_random_ball(2, &sizes, &Point::origin(2), &rational(2, 1), seed).unwrap()
        }
    }
}

/// Generic directions from a seeded stream kept apart from the streams the
/// generators use for the same seed.
pub fn directions(d: usize, seed: u64, n: usize) -> Vec<Point> {
    let mut s = RationalStream::new(seed, 1 << 40);
    (0..n)
        .map(|_| loop {
            let p = s.point_in_ball(d, &rational(1, 1));
            if !p.is_origin() {
                break p;
            }
        })
        .collect()
}
