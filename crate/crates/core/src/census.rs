//! Brute-force census of colourful simplices containing the origin.
//!
//! The census only ever calls [`point_in_hull`], so it shares no code path
//! with the pivoting machinery it is used to check.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Configuration, Point, PointId, Transversal};
use crate::linprog::{point_in_hull, HullCertificate};
use crate::pivot::octahedron_covers;

pub const DEFAULT_BOUND: u128 = 1_000_000;

/// One point per colour, optionally with convex coefficients for the origin
/// aligned with `members`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourfulSimplex {
    pub members: Vec<PointId>,
    pub certificate: Option<HullCertificate>,
}

impl ColourfulSimplex {
    /// Computes a containment certificate for `members`, if the origin lies in
    /// their hull.
    pub fn certify(config: &Configuration, mut members: Vec<PointId>) -> Result<Option<Self>> {
        members.sort();
        let points = config.points_of(&members);
        let origin = Point::origin(config.dimension());
        Ok(point_in_hull(&points, &origin)?.map(|c| ColourfulSimplex {
            members,
            certificate: Some(c),
        }))
    }

    /// Exact re-verification: one point per colour and a valid certificate.
    pub fn verify(&self, config: &Configuration) -> bool {
        let colours: Vec<usize> = self.members.iter().map(|m| m.colour).sorted().collect();
        if colours != (0..config.num_colours()).collect::<Vec<_>>() {
            return false;
        }
        let Some(cert) = &self.certificate else {
            return false;
        };
        let points = config.points_of(&self.members);
        cert.verify(&points, &Point::origin(config.dimension()))
    }
}

/// Every colourful system whose hull contains the origin, sorted by member ids.
pub fn enumerate_containing(config: &Configuration, bound: u128) -> Result<Vec<ColourfulSimplex>> {
    let size = config.system_count();
    if size > bound {
        return Err(Error::SizeBound { size, bound });
    }
    let systems: Vec<Vec<PointId>> = (0..config.num_colours())
        .map(|c| config.colour_ids(c).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect();
    let found: Result<Vec<Option<ColourfulSimplex>>> = systems
        .into_par_iter()
        .map(|members| ColourfulSimplex::certify(config, members))
        .collect();
    let mut found: Vec<ColourfulSimplex> = found?.into_iter().flatten().collect();
    found.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub holds: bool,
    pub count: usize,
    pub floor: usize,
}

/// At least `min_i |S_i|` containing simplices as soon as there is one.
pub fn check_atleast(config: &Configuration, bound: u128) -> Result<CountCheck> {
    let count = enumerate_containing(config, bound)?.len();
    let floor = config.colours().iter().map(Vec::len).min().unwrap_or(0);
    Ok(CountCheck {
        holds: count == 0 || count >= floor,
        count,
        floor,
    })
}

/// All `missing`-transversals, lexicographic in member ids.
pub fn transversals_missing(config: &Configuration, missing: usize) -> Vec<Vec<PointId>> {
    (0..config.num_colours())
        .filter(|&c| c != missing)
        .map(|c| config.colour_ids(c).collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect()
}

/// First disjoint pair of same-missing-colour transversals whose octahedron
/// covers the sphere of directions.
pub fn find_covering_octahedron(
    config: &Configuration,
    bound: u128,
) -> Result<Option<(Transversal, Transversal)>> {
    for missing in 0..config.num_colours() {
        let all = transversals_missing(config, missing);
        let pairs = (all.len() as u128).pow(2) / 2;
        if pairs > bound {
            return Err(Error::SizeBound { size: pairs, bound });
        }
        for (a, first) in all.iter().enumerate() {
            for second in &all[a + 1..] {
                if first.iter().zip(second).any(|(x, y)| x == y) {
                    continue;
                }
                let t = config.transversal(first)?;
                let u = config.transversal(second)?;
                if octahedron_covers(&t, &u)? {
                    return Ok(Some((t, u)));
                }
            }
        }
    }
    Ok(None)
}

/// At least `min_{i != j} |S_i u S_j| - 2` containing simplices whenever a
/// covering octahedron exists.
pub fn check_atleast2(config: &Configuration, bound: u128) -> Result<CountCheck> {
    let sizes: Vec<usize> = config.colours().iter().map(Vec::len).collect();
    let floor = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, a)| sizes[i + 1..].iter().map(move |b| a + b))
        .min()
        .unwrap_or(0)
        .saturating_sub(2);
    let count = enumerate_containing(config, bound)?.len();
    let covering = find_covering_octahedron(config, bound)?;
    Ok(CountCheck {
        holds: covering.is_none() || count >= floor,
        count,
        floor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_random_barany, gen_simplex_cluster};
    use crate::geometry::rational;

    fn p(c: &[i64]) -> Point {
        Point::from_integers(c)
    }

    fn triangle() -> Configuration {
        Configuration::new(
            2,
            vec![vec![p(&[1, 0])], vec![p(&[-1, 1])], vec![p(&[-1, -1])]],
        )
        .unwrap()
    }

    fn half_plane() -> Configuration {
        Configuration::new(
            2,
            vec![
                vec![p(&[1, 0]), p(&[2, 3])],
                vec![p(&[3, -1])],
                vec![p(&[1, 2]), p(&[4, 1])],
            ],
        )
        .unwrap()
    }

    #[test]
    fn cluster_census_is_full() {
        let c = gen_simplex_cluster(2, 3, &rational(1, 100), 7).unwrap();
        let all = enumerate_containing(&c, DEFAULT_BOUND).unwrap();
        assert_eq!(all.len(), 27);
        assert!(all.iter().all(|s| s.verify(&c)));
    }

    #[test]
    fn small_censuses() {
        assert_eq!(
            enumerate_containing(&triangle(), DEFAULT_BOUND)
                .unwrap()
                .len(),
            1
        );
        assert!(enumerate_containing(&half_plane(), DEFAULT_BOUND)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn size_bound_is_enforced() {
        let c = gen_simplex_cluster(2, 3, &rational(1, 100), 7).unwrap();
        assert_eq!(
            enumerate_containing(&c, 26),
            Err(Error::SizeBound {
                size: 27,
                bound: 26
            })
        );
    }

    #[test]
    fn atleast_examples() {
        let c = gen_simplex_cluster(2, 3, &rational(1, 100), 7).unwrap();
        let r = check_atleast(&c, DEFAULT_BOUND).unwrap();
        assert_eq!((r.holds, r.count, r.floor), (true, 27, 3));
        let r = check_atleast(&triangle(), DEFAULT_BOUND).unwrap();
        assert_eq!((r.holds, r.count, r.floor), (true, 1, 1));
        let b = gen_random_barany(2, 4, 13).unwrap();
        let r = check_atleast(&b, DEFAULT_BOUND).unwrap();
        assert!(r.holds && r.count >= 4);
    }

    #[test]
    fn covering_octahedron_search() {
        let quadrant = Configuration::new(
            2,
            vec![
                vec![p(&[1, 0]), p(&[-1, 0])],
                vec![p(&[0, 1]), p(&[0, -1])],
                vec![p(&[3, 5])],
            ],
        )
        .unwrap();
        let (t, u) = find_covering_octahedron(&quadrant, DEFAULT_BOUND)
            .unwrap()
            .unwrap();
        assert_eq!(t.missing_colour(), u.missing_colour());
        assert!(find_covering_octahedron(&half_plane(), DEFAULT_BOUND)
            .unwrap()
            .is_none());
        let b = gen_random_barany(2, 4, 13).unwrap();
        assert!(find_covering_octahedron(&b, DEFAULT_BOUND)
            .unwrap()
            .is_some());
    }

    #[test]
    fn atleast2_examples() {
        let b = gen_random_barany(2, 4, 13).unwrap();
        let r = check_atleast2(&b, DEFAULT_BOUND).unwrap();
        assert_eq!(r.floor, 6);
        assert!(r.holds);
        let r = check_atleast2(&half_plane(), DEFAULT_BOUND).unwrap();
        assert!(r.holds);
        let c = gen_simplex_cluster(2, 3, &rational(1, 100), 7).unwrap();
        let r = check_atleast2(&c, DEFAULT_BOUND).unwrap();
        assert!(r.holds);
        assert_eq!(r.count, 27);
    }

    #[test]
    fn covering_octahedron_does_not_force_the_pair_floor() {
        // General position; the unique covering pairs miss colour 1 and every
        // containing simplex uses the same two points of colours 0 and 2.
        let c = Configuration::new(
            2,
            vec![
                vec![p(&[3, 1]), p(&[1, -2]), p(&[10, -1])],
                vec![p(&[9, 2]), p(&[2, 3]), p(&[47, 4])],
                vec![p(&[5, 3]), p(&[-1, -11]), p(&[20, 6]), p(&[-2, 1])],
            ],
        )
        .unwrap();
        assert!(crate::geometry::is_general_position(&c).holds());
        let (t, _) = find_covering_octahedron(&c, DEFAULT_BOUND)
            .unwrap()
            .unwrap();
        assert_eq!(t.missing_colour(), 1);
        let r = check_atleast2(&c, DEFAULT_BOUND).unwrap();
        assert_eq!((r.holds, r.count, r.floor), (false, 3, 4));
    }
}
