//! Path following on doubled configurations and octahedral complexes.
//!
//! A doubled configuration has exactly two points per colour. One colour is
//! the *pivot colour*: nodes of the path graph are
//!
//! * `N1`: `d + 2` points containing the origin, one of each ordinary colour
//!   and both pivot points;
//! * `N2`: `d + 1` points containing the origin, both pivot points, exactly
//!   one ordinary colour absent;
//! * `N3`: a colourful simplex containing the origin.
//!
//! `N1` nodes are adjacent to the `N2`/`N3` nodes they contain. Degrees are
//! 2, 2 and 1, so following the path from one `N3` node ends at another.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use num::{One, Signed, Zero};

use crate::census::ColourfulSimplex;
use crate::error::{Error, Result};
use crate::gen::direction_chain;
use crate::geometry::{
    is_general_position, solve_in_basis, Configuration, GeneralPosition, Point, PointId, Scalar,
    Transversal,
};
use crate::linprog::{point_in_hull, HullCertificate};

static PIVOT_STEPS: AtomicU64 = AtomicU64::new(0);

/// N1 nodes visited by path following since the last reset.
pub fn pivot_steps() -> u64 {
    PIVOT_STEPS.load(Ordering::Relaxed)
}

pub fn reset_pivot_steps() {
    PIVOT_STEPS.store(0, Ordering::Relaxed);
}

/// Attempts of the deterministic direction chain before giving up.
pub const DIRECTION_ATTEMPTS: u64 = 64;

/// Exactly two points per colour, in general position with the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledConfig {
    config: Configuration,
    pivot_colour: usize,
}

impl DoubledConfig {
    /// The pivot colour is the last one.
    pub fn new(dimension: usize, pairs: Vec<[Point; 2]>) -> Result<Self> {
        Self::with_pivot_colour(dimension, pairs, dimension)
    }

    pub fn with_pivot_colour(
        dimension: usize,
        pairs: Vec<[Point; 2]>,
        pivot_colour: usize,
    ) -> Result<Self> {
        let colours = pairs.into_iter().map(|pair| pair.to_vec()).collect();
        Self::from_configuration(Configuration::new(dimension, colours)?, pivot_colour)
    }

    pub fn from_configuration(config: Configuration, pivot_colour: usize) -> Result<Self> {
        if pivot_colour >= config.num_colours() {
            return Err(Error::Precondition(format!(
                "pivot colour {pivot_colour} out of range"
            )));
        }
        if let Some(c) = config.colours().iter().position(|c| c.len() != 2) {
            return Err(Error::Precondition(format!(
                "colour {c} has {} points, a doubled configuration needs exactly 2",
                config.colour(c).len()
            )));
        }
        if let GeneralPosition::Dependent(w) = is_general_position(&config) {
            return Err(Error::DegenerateInput(format!(
                "doubled configuration not in general position: {w:?}"
            )));
        }
        Ok(DoubledConfig {
            config,
            pivot_colour,
        })
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn dimension(&self) -> usize {
        self.config.dimension()
    }

    pub fn pivot_colour(&self) -> usize {
        self.pivot_colour
    }

    pub fn into_configuration(self) -> Configuration {
        self.config
    }

    fn partner(&self, id: PointId) -> PointId {
        PointId::new(id.colour, 1 - id.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    N1,
    N2 { absent_colour: usize },
    N3,
    None,
}

fn contains_origin(config: &Configuration, subset: &[PointId]) -> Result<bool> {
    let pts = config.points_of(subset);
    Ok(point_in_hull(&pts, &Point::origin(config.dimension()))?.is_some())
}

pub fn classify_node(doubled: &DoubledConfig, subset: &[PointId]) -> Result<NodeClass> {
    let config = doubled.config();
    let d = config.dimension();
    let mut counts = vec![0usize; config.num_colours()];
    let mut seen = HashSet::new();
    for &id in subset {
        if id.colour >= counts.len() || id.index >= 2 || !seen.insert(id) {
            return Err(Error::Precondition(format!("invalid subset member {id}")));
        }
        counts[id.colour] += 1;
    }
    let p = doubled.pivot_colour();
    let ordinary = || (0..counts.len()).filter(move |&c| c != p);
    let shape = if subset.len() == d + 2 && counts[p] == 2 && ordinary().all(|c| counts[c] == 1) {
        NodeClass::N1
    } else if subset.len() == d + 1 && counts.iter().all(|&k| k == 1) {
        NodeClass::N3
    } else if subset.len() == d + 1 && counts[p] == 2 {
        let absent: Vec<usize> = ordinary().filter(|&c| counts[c] == 0).collect();
        match absent.as_slice() {
            [c] => NodeClass::N2 { absent_colour: *c },
            _ => NodeClass::None,
        }
    } else {
        NodeClass::None
    };
    if shape == NodeClass::None || !contains_origin(config, subset)? {
        return Ok(NodeClass::None);
    }
    Ok(shape)
}

/// The two `(d+1)`-subsets of `nu` (as index lists into `nu`) whose hulls
/// contain the origin. Anything other than exactly two signals degeneracy.
pub fn two_containing_subsets(nu: &[Point]) -> Result<[(Vec<usize>, HullCertificate); 2]> {
    let d = nu.first().map_or(0, Point::dim);
    if nu.len() != d + 2 {
        return Err(Error::Precondition(format!(
            "expected {} points, found {}",
            d + 2,
            nu.len()
        )));
    }
    let origin = Point::origin(d);
    let mut found = Vec::new();
    for skip in 0..nu.len() {
        let idx: Vec<usize> = (0..nu.len()).filter(|&i| i != skip).collect();
        let pts: Vec<Point> = idx.iter().map(|&i| nu[i].clone()).collect();
        if let Some(cert) = point_in_hull(&pts, &origin)? {
            found.push((idx, cert));
        }
    }
    match <[_; 2]>::try_from(found) {
        Ok(pair) => Ok(pair),
        Err(v) => Err(Error::DegeneratePivot { found: v.len() }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathNode {
    pub members: Vec<PointId>,
    pub class: NodeClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotPath {
    /// The other `N3` endpoint, certified.
    pub endpoint: ColourfulSimplex,
    /// Every node visited, start and endpoint included.
    pub nodes: Vec<PathNode>,
}

/// Follows the path from the `N3` node `start` to the other end.
pub fn second_simplex(doubled: &DoubledConfig, start: &[PointId]) -> Result<PivotPath> {
    let mut start = start.to_vec();
    start.sort();
    match classify_node(doubled, &start)? {
        NodeClass::N3 => {}
        other => {
            return Err(Error::InvalidStart(format!(
                "start must be a colourful simplex containing the origin, got {other:?}"
            )))
        }
    }
    let config = doubled.config();
    let p = doubled.pivot_colour();
    let pivot_in_start = *start.iter().find(|id| id.colour == p).unwrap();

    let mut nodes = vec![PathNode {
        members: start.clone(),
        class: NodeClass::N3,
    }];
    let mut visited: HashSet<Vec<PointId>> = HashSet::from([start.clone()]);
    let mut prev = start.clone();
    let mut current = start.clone();
    current.push(doubled.partner(pivot_in_start));
    current.sort();

    loop {
        PIVOT_STEPS.fetch_add(1, Ordering::Relaxed);
        if !visited.insert(current.clone()) {
            return Err(Error::InternalInvariantViolation(format!(
                "path revisited node {current:?}"
            )));
        }
        nodes.push(PathNode {
            members: current.clone(),
            class: NodeClass::N1,
        });
        let pts = config.points_of(&current);
        let pair = two_containing_subsets(&pts)?;
        let candidates: Vec<(Vec<PointId>, HullCertificate)> = pair
            .into_iter()
            .map(|(idx, cert)| (idx.iter().map(|&i| current[i]).collect(), cert))
            .collect();
        let Some((next, cert)) = candidates.into_iter().find(|(m, _)| *m != prev) else {
            return Err(Error::InternalInvariantViolation(
                "both containing subsets equal the previous node".into(),
            ));
        };
        let class = classify_node(doubled, &next)?;
        if !visited.insert(next.clone()) {
            return Err(Error::InternalInvariantViolation(format!(
                "path revisited node {next:?}"
            )));
        }
        nodes.push(PathNode {
            members: next.clone(),
            class,
        });
        match class {
            NodeClass::N3 => {
                let endpoint = ColourfulSimplex {
                    members: next,
                    certificate: Some(cert),
                };
                debug_assert!(endpoint.verify(config));
                return Ok(PivotPath { endpoint, nodes });
            }
            NodeClass::N2 { absent_colour } => {
                let dropped = *current
                    .iter()
                    .find(|id| id.colour == absent_colour)
                    .ok_or_else(|| {
                        Error::InternalInvariantViolation("N2 colour missing from N1".into())
                    })?;
                let mut following = next.clone();
                following.push(doubled.partner(dropped));
                following.sort();
                prev = next;
                current = following;
            }
            other => {
                return Err(Error::InternalInvariantViolation(format!(
                    "containing subset of an N1 node classified as {other:?}"
                )))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Octahedral complexes

/// A maximal cell: one vertex per non-missing colour, drawn from either
/// transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    /// `from_second[k]` is true when the k-th colour's vertex comes from the
    /// second transversal.
    pub from_second: Vec<bool>,
    pub vertices: Vec<(usize, Point)>,
}

impl Cell {
    pub fn points(&self) -> Vec<Point> {
        self.vertices.iter().map(|(_, p)| p.clone()).collect()
    }
}

/// The `2^d` mixed cells built from two disjoint transversals with the same
/// missing colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctahedronComplex {
    pub transversal_pair: (Transversal, Transversal),
    pub cells: Vec<Cell>,
}

impl OctahedronComplex {
    /// For every ridge (a cell minus one vertex), the number of cells
    /// containing it. A pseudomanifold has every count equal to 2.
    pub fn ridge_counts(&self) -> BTreeMap<Vec<(usize, bool)>, usize> {
        let mut counts = BTreeMap::new();
        for cell in &self.cells {
            let tagged: Vec<(usize, bool)> = cell
                .vertices
                .iter()
                .zip(&cell.from_second)
                .map(|((c, _), s)| (*c, *s))
                .collect();
            for drop in 0..tagged.len() {
                let mut ridge = tagged.clone();
                ridge.remove(drop);
                *counts.entry(ridge).or_insert(0) += 1;
            }
        }
        counts
    }
}

pub fn build_octahedron_complex(t: &Transversal, u: &Transversal) -> Result<OctahedronComplex> {
    if t.missing_colour() != u.missing_colour() || t.dimension() != u.dimension() {
        return Err(Error::IncompatibleTransversals);
    }
    let first = t.points();
    if u.points().iter().any(|p| first.contains(p)) {
        return Err(Error::IncompatibleTransversals);
    }
    let d = t.dimension();
    let cells = (0..1usize << d)
        .map(|mask| {
            let from_second: Vec<bool> = (0..d).map(|k| mask >> k & 1 == 1).collect();
            let vertices = (0..d)
                .map(|k| {
                    if from_second[k] {
                        u.members()[k].clone()
                    } else {
                        t.members()[k].clone()
                    }
                })
                .collect();
            Cell {
                from_second,
                vertices,
            }
        })
        .collect();
    Ok(OctahedronComplex {
        transversal_pair: (t.clone(), u.clone()),
        cells,
    })
}

/// Where the ray `{s * direction : s > 0}` crosses a simplex spanned by `d`
/// points: `Some(s)` for an interior crossing, `None` for a miss.
/// Boundary hits are reported as `NonGenericDirection`.
pub fn ray_hits_simplex(vertices: &[Point], direction: &Point) -> Result<Option<Scalar>> {
    let mu = solve_in_basis(vertices, direction).ok_or(Error::DegenerateCell)?;
    if mu.iter().any(Signed::is_negative) {
        return Ok(None);
    }
    if mu.iter().any(Zero::is_zero) {
        return Err(Error::NonGenericDirection);
    }
    let total: Scalar = mu.iter().sum();
    Ok(Some(Scalar::one() / total))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossings {
    pub count: usize,
    pub odd: bool,
}

pub fn ray_crossing_parity(m: &OctahedronComplex, direction: &Point) -> Result<Crossings> {
    if direction.is_origin() {
        return Err(Error::NonGenericDirection);
    }
    let mut hits = Vec::new();
    for cell in &m.cells {
        if let Some(s) = ray_hits_simplex(&cell.points(), direction)? {
            if hits.contains(&s) {
                return Err(Error::NonGenericDirection);
            }
            hits.push(s);
        }
    }
    Ok(Crossings {
        count: hits.len(),
        odd: hits.len() % 2 == 1,
    })
}

/// Crossing parity along the first generic direction of the seeded chain.
pub fn generic_crossings(m: &OctahedronComplex) -> Result<(Point, Crossings)> {
    let d = m.transversal_pair.0.dimension();
    for attempt in 0..DIRECTION_ATTEMPTS {
        let dir = direction_chain(d, 0, attempt);
        match ray_crossing_parity(m, &dir) {
            Ok(c) => return Ok((dir, c)),
            Err(Error::NonGenericDirection) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NonGenericDirection)
}

/// True iff the colourful cones of the pair cover every direction, decided by
/// the crossing parity of one generic ray.
pub fn octahedron_covers(t: &Transversal, u: &Transversal) -> Result<bool> {
    let m = build_octahedron_complex(t, u)?;
    Ok(generic_crossings(&m)?.1.odd)
}
