//! Checkers for the sufficient conditions of the colourful Carathéodory
//! family, each returning a re-verifiable witness or counterexample.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use log::warn;

use crate::census::transversals_missing;
use crate::error::{Error, Result};
use crate::geometry::{Configuration, Hyperplane, Point, PointId, Sign};
use crate::linprog::{line_meets_hull, point_in_hull, ray_hull_sup};

/// Largest number of transversals `check_half_space_condition` will enumerate.
pub const MAX_TRANSVERSALS: u128 = 10_000_000;

/// Either the condition holds, with a witness, or it fails, with a
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionVerdict<W, C> {
    Holds(W),
    Fails(C),
}

impl<W, C> ConditionVerdict<W, C> {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionVerdict::Holds(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            ConditionVerdict::Holds(w) => Some(w),
            ConditionVerdict::Fails(_) => None,
        }
    }

    pub fn counterexample(&self) -> Option<&C> {
        match self {
            ConditionVerdict::Holds(_) => None,
            ConditionVerdict::Fails(c) => Some(c),
        }
    }
}

fn origin_of(config: &Configuration) -> Point {
    Point::origin(config.dimension())
}

/// Origin in the hull of every colour class. Fails with the first colour
/// whose hull misses it.
pub fn check_barany(config: &Configuration) -> Result<ConditionVerdict<(), usize>> {
    let origin = origin_of(config);
    for (c, class) in config.colours().iter().enumerate() {
        if point_in_hull(class, &origin)?.is_none() {
            return Ok(ConditionVerdict::Fails(c));
        }
    }
    Ok(ConditionVerdict::Holds(()))
}

/// Origin in `conv(S_i u S_j)` for every pair of colours.
pub fn check_pairwise(config: &Configuration) -> Result<ConditionVerdict<(), (usize, usize)>> {
    let origin = origin_of(config);
    for (i, j) in (0..config.num_colours()).tuple_combinations() {
        if point_in_hull(&config.union_of(i, j), &origin)?.is_none() {
            return Ok(ConditionVerdict::Fails((i, j)));
        }
    }
    Ok(ConditionVerdict::Holds(()))
}

/// The colour `k` that serves the pair `(i, j)` in the ray condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairWitness {
    pub pair: (usize, usize),
    pub k: usize,
}

/// A pair for which no third colour works, with one failing point per
/// admissible colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayCounterexample {
    pub pair: (usize, usize),
    pub failures: Vec<(usize, PointId)>,
}

/// First `x_k` whose ray towards the origin meets `conv(points)` only at
/// `x_k` itself (or not at all).
fn first_ray_failure(
    config: &Configuration,
    points: &[Point],
    k: usize,
) -> Result<Option<PointId>> {
    for id in config.colour_ids(k) {
        if !ray_hull_sup(points, config.point(id))?.beyond_start() {
            return Ok(Some(id));
        }
    }
    Ok(None)
}

/// For each pair `i < j` some `k` outside the pair has, for every `x_k`, the
/// ray from `x_k` through the origin meeting `conv(S_i u S_j)` past `x_k`.
pub fn check_ray_condition(
    config: &Configuration,
) -> Result<ConditionVerdict<Vec<PairWitness>, RayCounterexample>> {
    if let Some(c) = (0..config.num_colours()).find(|&c| config.colour(c).is_empty()) {
        return Err(Error::EmptyColour(c));
    }
    let mut witnesses = Vec::new();
    for (i, j) in (0..config.num_colours()).tuple_combinations() {
        let union = config.union_of(i, j);
        let mut failures = Vec::new();
        let mut found = None;
        for k in (0..config.num_colours()).filter(|&k| k != i && k != j) {
            match first_ray_failure(config, &union, k)? {
                None => {
                    found = Some(k);
                    break;
                }
                Some(x) => failures.push((k, x)),
            }
        }
        match found {
            Some(k) => witnesses.push(PairWitness { pair: (i, j), k }),
            None => {
                return Ok(ConditionVerdict::Fails(RayCounterexample {
                    pair: (i, j),
                    failures,
                }))
            }
        }
    }
    Ok(ConditionVerdict::Holds(witnesses))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpaceSummary {
    pub transversals_checked: usize,
    /// Transversals skipped because they were affinely dependent or their
    /// hull passed through the origin.
    pub transversals_skipped: usize,
}

/// A transversal `T` missing colour `missing` such that no point of
/// `S_colour u S_missing` lies strictly on the origin's side of `aff(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpaceCounterexample {
    pub transversal: Vec<PointId>,
    pub missing: usize,
    pub colour: usize,
}

/// First colour `i != j` with no point of `S_i u S_j` in the open half-space
/// `H+(T)`, or `None` if every colour has one.
pub(crate) fn empty_half_space_colour(
    config: &Configuration,
    plane: &Hyperplane,
    missing: usize,
) -> Option<usize> {
    let missing_hit = config
        .colour(missing)
        .iter()
        .any(|p| plane.side(p) == Sign::Positive);
    if missing_hit {
        return None;
    }
    (0..config.num_colours())
        .filter(|&i| i != missing)
        .find(|&i| {
            config
                .colour(i)
                .iter()
                .all(|p| plane.side(p) != Sign::Positive)
        })
}

/// For every `j`, every `j`-missing transversal `T` and every `i != j`,
/// `S_i u S_j` meets the open half-space of `aff(T)` containing the origin.
///
/// Transversals that are degenerate (dependent, or with the origin on their
/// affine hull) are skipped with a warning; if all are, the input is rejected.
pub fn check_half_space_condition(
    config: &Configuration,
) -> Result<ConditionVerdict<HalfSpaceSummary, HalfSpaceCounterexample>> {
    let total: u128 = (0..config.num_colours())
        .map(|j| {
            (0..config.num_colours())
                .filter(|&i| i != j)
                .map(|i| config.colour(i).len() as u128)
                .product::<u128>()
        })
        .sum();
    if total > MAX_TRANSVERSALS {
        return Err(Error::SizeBound {
            size: total,
            bound: MAX_TRANSVERSALS,
        });
    }
    let mut summary = HalfSpaceSummary {
        transversals_checked: 0,
        transversals_skipped: 0,
    };
    for j in 0..config.num_colours() {
        for ids in transversals_missing(config, j) {
            let plane = match Hyperplane::through(&config.points_of(&ids)) {
                Ok(h) => h,
                Err(Error::DegenerateTransversal) => {
                    warn!("skipping degenerate transversal {ids:?}");
                    summary.transversals_skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            summary.transversals_checked += 1;
            if let Some(i) = empty_half_space_colour(config, &plane, j) {
                return Ok(ConditionVerdict::Fails(HalfSpaceCounterexample {
                    transversal: ids,
                    missing: j,
                    colour: i,
                }));
            }
        }
    }
    if summary.transversals_checked == 0 {
        return Err(Error::DegenerateInput(
            "no transversal is affinely independent with the origin off its affine hull".into(),
        ));
    }
    Ok(ConditionVerdict::Holds(summary))
}

/// The pair `(i, j)` and point `x_k` whose line through the origin misses
/// `conv(S_i u S_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCounterexample {
    pub pair: (usize, usize),
    pub point: PointId,
}

/// Planar condition: for pairwise distinct `i, j, k` and every `x_k`, the
/// line through `x_k` and the origin meets `conv(S_i u S_j)`.
pub fn check_line_condition(
    config: &Configuration,
) -> Result<ConditionVerdict<(), LineCounterexample>> {
    if config.dimension() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: config.dimension(),
        });
    }
    for (i, j) in (0..3).tuple_combinations() {
        let k = 3 - i - j;
        let union = config.union_of(i, j);
        for id in config.colour_ids(k) {
            if !line_meets_hull(&union, config.point(id))? {
                return Ok(ConditionVerdict::Fails(LineCounterexample {
                    pair: (i, j),
                    point: id,
                }));
            }
        }
    }
    Ok(ConditionVerdict::Holds(()))
}

/// A subset of colour indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColourSet(pub BTreeSet<usize>);

impl ColourSet {
    pub fn all(config: &Configuration) -> Self {
        ColourSet((0..config.num_colours()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersect(&self, other: &ColourSet) -> ColourSet {
        ColourSet(self.0.intersection(&other.0).copied().collect())
    }
}

impl FromIterator<usize> for ColourSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ColourSet(iter.into_iter().collect())
    }
}

/// Memoised evaluation of the set map on colour sets.
pub struct ColourMap<'a> {
    config: &'a Configuration,
    served: HashMap<(usize, usize, usize), bool>,
}

impl<'a> ColourMap<'a> {
    pub fn new(config: &'a Configuration) -> Self {
        ColourMap {
            config,
            served: HashMap::new(),
        }
    }

    fn serves(&mut self, i: usize, j: usize, k: usize) -> Result<bool> {
        if let Some(&v) = self.served.get(&(i, j, k)) {
            return Ok(v);
        }
        let union = self.config.union_of(i, j);
        let v = first_ray_failure(self.config, &union, k)?.is_none();
        self.served.insert((i, j, k), v);
        Ok(v)
    }

    /// Colours `k` such that some pair of distinct colours of `b` has every
    /// ray from a point of `S_k` through the origin meeting the pair's hull
    /// past its start. Empty when `|b| < 2`.
    pub fn apply(&mut self, b: &ColourSet) -> Result<ColourSet> {
        let mut out = ColourSet::default();
        if b.len() < 2 {
            return Ok(out);
        }
        for k in 0..self.config.num_colours() {
            for (&i, &j) in b.0.iter().tuple_combinations() {
                if self.serves(i, j, k)? {
                    out.0.insert(k);
                    break;
                }
            }
        }
        Ok(out)
    }
}

/// The iterates `B_0, B_1, ...` of `B_{l+1} = F(B_l) n B_l` up to and
/// including the first repeated set.
pub fn fixed_point_iterates(config: &Configuration, b0: &ColourSet) -> Result<Vec<ColourSet>> {
    let mut map = ColourMap::new(config);
    let mut iterates = vec![b0.clone()];
    loop {
        let last = iterates.last().unwrap();
        let next = map.apply(last)?.intersect(last);
        if next == *last {
            return Ok(iterates);
        }
        iterates.push(next);
    }
}

pub fn fixed_point_colours(config: &Configuration, b0: &ColourSet) -> Result<ColourSet> {
    Ok(fixed_point_iterates(config, b0)?.pop().unwrap())
}
