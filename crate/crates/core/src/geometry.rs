//! Exact rational points, colour classes and affine predicates.
//!
//! Every predicate here is evaluated in exact rational arithmetic. A sign is
//! never guessed: zero means the points really are affinely dependent.

use std::fmt;

use itertools::Itertools;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms.
pub type Scalar = BigRational;

/// Builds the rational `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(value: &Scalar) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A point of `R^d` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| integer(c)).collect())
    }

    /// Builds a point from `(numerator, denominator)` pairs.
    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Point(coords.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    pub fn origin(dimension: usize) -> Self {
        Point(vec![Scalar::zero(); dimension])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, factor: &Scalar) -> Point {
        Point(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn squared_norm(&self) -> Scalar {
        self.dot(self)
    }

    /// Affine combination `sum_i weights[i] * points[i]`.
    pub fn combination(points: &[Point], weights: &[Scalar]) -> Point {
        let dim = points.first().map_or(0, Point::dim);
        let mut acc = vec![Scalar::zero(); dim];
        for (p, w) in points.iter().zip(weights) {
            for (a, c) in acc.iter_mut().zip(&p.0) {
                *a += w * c;
            }
        }
        Point(acc)
    }

    pub fn centroid(points: &[Point]) -> Point {
        let w = Scalar::new(BigInt::one(), BigInt::from(points.len()));
        Point::combination(points, &vec![w; points.len()])
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

/// Identifies a point inside a [`Configuration`]: colour class and position
/// within that class. Both are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId {
    pub colour: usize,
    pub index: usize,
}

impl PointId {
    pub fn new(colour: usize, index: usize) -> Self {
        PointId { colour, index }
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}#{}", self.colour, self.index)
    }
}

/// `d + 1` colour classes of points in `R^d`.
///
/// Construction rejects wrong arity, wrong coordinate counts, duplicate points
/// and the origin itself. Nothing is repaired silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    dimension: usize,
    colours: Vec<Vec<Point>>,
}

impl Configuration {
    pub fn new(dimension: usize, colours: Vec<Vec<Point>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidConfiguration(
                "dimension must be at least 1".into(),
            ));
        }
        if colours.len() != dimension + 1 {
            return Err(Error::InvalidConfiguration(format!(
                "expected d+1 = {} colour classes, found {}",
                dimension + 1,
                colours.len()
            )));
        }
        let mut seen = std::collections::HashMap::new();
        for (c, class) in colours.iter().enumerate() {
            for (i, p) in class.iter().enumerate() {
                if p.dim() != dimension {
                    return Err(Error::DimensionMismatch {
                        expected: dimension,
                        found: p.dim(),
                    });
                }
                if p.is_origin() {
                    return Err(Error::InvalidConfiguration(format!(
                        "point {} equals the origin",
                        PointId::new(c, i)
                    )));
                }
                if let Some(prev) = seen.insert(p.clone(), PointId::new(c, i)) {
                    return Err(Error::InvalidConfiguration(format!(
                        "duplicate point {p} at {prev} and {}",
                        PointId::new(c, i)
                    )));
                }
            }
        }
        Ok(Configuration { dimension, colours })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn num_colours(&self) -> usize {
        self.colours.len()
    }

    pub fn colours(&self) -> &[Vec<Point>] {
        &self.colours
    }

    pub fn colour(&self, c: usize) -> &[Point] {
        &self.colours[c]
    }

    pub fn point(&self, id: PointId) -> &Point {
        &self.colours[id.colour][id.index]
    }

    pub fn points_of(&self, ids: &[PointId]) -> Vec<Point> {
        ids.iter().map(|&id| self.point(id).clone()).collect()
    }

    pub fn total_points(&self) -> usize {
        self.colours.iter().map(Vec::len).sum()
    }

    /// All point ids, colour-major.
    pub fn ids(&self) -> impl Iterator<Item = PointId> + '_ {
        self.colours
            .iter()
            .enumerate()
            .flat_map(|(c, class)| (0..class.len()).map(move |i| PointId::new(c, i)))
    }

    pub fn colour_ids(&self, c: usize) -> impl Iterator<Item = PointId> {
        (0..self.colours[c].len()).map(move |i| PointId::new(c, i))
    }

    /// Position of `id` in the colour-major flattening.
    pub fn flat_index(&self, id: PointId) -> usize {
        self.colours[..id.colour]
            .iter()
            .map(Vec::len)
            .sum::<usize>()
            + id.index
    }

    pub fn id_of_flat(&self, mut flat: usize) -> Option<PointId> {
        for (c, class) in self.colours.iter().enumerate() {
            if flat < class.len() {
                return Some(PointId::new(c, flat));
            }
            flat -= class.len();
        }
        None
    }

    /// Builds the transversal made of `ids`, which must carry `d` distinct colours.
    pub fn transversal(&self, ids: &[PointId]) -> Result<Transversal> {
        let used: Vec<usize> = ids.iter().map(|id| id.colour).collect();
        let missing = (0..self.num_colours())
            .find(|c| !used.contains(c))
            .ok_or_else(|| Error::Precondition("transversal uses every colour".into()))?;
        Transversal::new(
            missing,
            ids.iter()
                .map(|&id| (id.colour, self.point(id).clone()))
                .collect(),
        )
    }

    /// Union of two colour classes, in order.
    pub fn union_of(&self, i: usize, j: usize) -> Vec<Point> {
        self.colours[i]
            .iter()
            .chain(&self.colours[j])
            .cloned()
            .collect()
    }

    /// Number of colourful systems (one point per colour).
    pub fn system_count(&self) -> u128 {
        self.colours.iter().map(|c| c.len() as u128).product()
    }
}

/// A colourful set of `d` points missing exactly one colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    missing_colour: usize,
    members: Vec<(usize, Point)>,
}

impl Transversal {
    /// `members` are `(colour, point)` pairs; they are sorted by colour.
    pub fn new(missing_colour: usize, mut members: Vec<(usize, Point)>) -> Result<Self> {
        let d = members.len();
        if d == 0 {
            return Err(Error::Precondition("empty transversal".into()));
        }
        members.sort_by_key(|(c, _)| *c);
        if members.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Precondition("repeated colour in transversal".into()));
        }
        if members.iter().any(|(c, _)| *c == missing_colour || *c > d) {
            return Err(Error::Precondition(format!(
                "transversal colours must be the {d} colours other than {missing_colour}"
            )));
        }
        if let Some((_, p)) = members.iter().find(|(_, p)| p.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
        Ok(Transversal {
            missing_colour,
            members,
        })
    }

    pub fn missing_colour(&self) -> usize {
        self.missing_colour
    }

    pub fn dimension(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[(usize, Point)] {
        &self.members
    }

    pub fn points(&self) -> Vec<Point> {
        self.members.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn point_of_colour(&self, colour: usize) -> Option<&Point> {
        self.members
            .iter()
            .find(|(c, _)| *c == colour)
            .map(|(_, p)| p)
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra

/// Determinant of a square matrix by fraction-based Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot_row = m[col].clone();
        det *= &pivot_row[col];
        for row in m.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot_row[col];
            for c in col..n {
                let t = &f * &pivot_row[c];
                row[c] -= t;
            }
        }
    }
    det
}

/// Rank of a (not necessarily square) matrix.
pub fn rank(mut m: Vec<Vec<Scalar>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let pivot_row = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot_row[col];
            for c in col..cols {
                let t = &f * &pivot_row[c];
                row[c] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Unique solution of the square system `a x = b`, or `None` if `a` is singular.
pub fn solve_linear(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.len();
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let inv = m[col][col].recip();
        for x in &mut m[col][col..=n] {
            *x *= &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..=n {
                let t = &f * &pivot_row[c];
                row[c] -= t;
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Columns-as-points system: solves `sum_i coeffs[i] * columns[i] = target`
/// when `columns` are `d` points in `R^d`.
pub fn solve_in_basis(columns: &[Point], target: &Point) -> Option<Vec<Scalar>> {
    let d = target.dim();
    let a: Vec<Vec<Scalar>> = (0..d)
        .map(|r| columns.iter().map(|c| c.coords()[r].clone()).collect())
        .collect();
    solve_linear(&a, target.coords())
}

fn check_dims(points: &[Point], d: usize) -> Result<()> {
    match points.iter().find(|p| p.dim() != d) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: d,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

/// True iff the points are affinely independent.
pub fn affinely_independent(points: &[Point]) -> bool {
    match points.split_first() {
        None => true,
        Some((first, rest)) => {
            if rest.len() > first.dim() {
                return false;
            }
            let rows: Vec<Vec<Scalar>> = rest.iter().map(|p| p.sub(first).0).collect();
            rank(rows) == rest.len()
        }
    }
}

// ---------------------------------------------------------------------------
// Predicates

/// Sign of `det[p_1 - p_0; ...; p_d - p_0]` for `d + 1` points of `R^d`.
pub fn orientation(points: &[Point]) -> Result<Sign> {
    let Some(first) = points.first() else {
        return Err(Error::Precondition(
            "orientation of an empty point list".into(),
        ));
    };
    let d = first.dim();
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            found: points.len(),
        });
    }
    check_dims(points, d)?;
    let rows = points[1..].iter().map(|p| p.sub(first).0).collect();
    Ok(Sign::of(&determinant(rows)))
}

/// The affine hyperplane spanned by `d` points, oriented so that the origin
/// lies on its positive side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Point,
    offset: Scalar,
}

impl Hyperplane {
    /// Fails with `DegenerateTransversal` when the points are affinely
    /// dependent or their affine hull passes through the origin.
    pub fn through(points: &[Point]) -> Result<Self> {
        let d = points.len();
        if d == 0 {
            return Err(Error::DegenerateTransversal);
        }
        check_dims(points, d)?;
        let base = &points[0];
        let rows: Vec<Vec<Scalar>> = points[1..].iter().map(|p| p.sub(base).0).collect();
        // Cofactor expansion along an appended last row `p - base`.
        let mut normal = Vec::with_capacity(d);
        for k in 0..d {
            let minor: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != k)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let cof = determinant(minor);
            normal.push(if (d - 1 + k).is_multiple_of(2) { cof } else { -cof });
        }
        let mut normal = Point(normal);
        if normal.is_origin() {
            return Err(Error::DegenerateTransversal);
        }
        let mut offset = normal.dot(base);
        match Sign::of(&offset) {
            Sign::Zero => return Err(Error::DegenerateTransversal),
            Sign::Positive => {
                normal = normal.neg();
                offset = -offset;
            }
            Sign::Negative => {}
        }
        Ok(Hyperplane { normal, offset })
    }

    /// `normal . p - offset`; positive at the origin.
    pub fn evaluate(&self, p: &Point) -> Scalar {
        self.normal.dot(p) - &self.offset
    }

    pub fn side(&self, p: &Point) -> Sign {
        Sign::of(&self.evaluate(p))
    }
}

/// +1 iff `p` lies in the open half-space bounded by `aff(T)` that contains the
/// origin, 0 iff `p` is on `aff(T)`, -1 otherwise.
pub fn side_of(t: &Transversal, p: &Point) -> Result<Sign> {
    if p.dim() != t.dimension() {
        return Err(Error::DimensionMismatch {
            expected: t.dimension(),
            found: p.dim(),
        });
    }
    Ok(Hyperplane::through(&t.points())?.side(p))
}

/// A vertex of the general-position test: a configuration point or the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Origin,
    Point(PointId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneralPosition {
    General,
    /// An inclusion-minimal affinely dependent subset.
    Dependent(Vec<Vertex>),
}

impl GeneralPosition {
    pub fn holds(&self) -> bool {
        matches!(self, GeneralPosition::General)
    }
}

/// Every subset of at most `d + 1` elements of the configuration plus the
/// origin must be affinely independent.
pub fn is_general_position(config: &Configuration) -> GeneralPosition {
    let d = config.dimension();
    let mut vertices = vec![(Vertex::Origin, Point::origin(d))];
    vertices.extend(
        config
            .ids()
            .map(|id| (Vertex::Point(id), config.point(id).clone())),
    );
    let size = (d + 1).min(vertices.len());
    for subset in (0..vertices.len()).combinations(size) {
        let pts: Vec<Point> = subset.iter().map(|&i| vertices[i].1.clone()).collect();
        if !affinely_independent(&pts) {
            return GeneralPosition::Dependent(minimize_dependent(&vertices, subset));
        }
    }
    GeneralPosition::General
}

fn minimize_dependent(vertices: &[(Vertex, Point)], mut subset: Vec<usize>) -> Vec<Vertex> {
    let mut k = 0;
    while k < subset.len() {
        let mut trial = subset.clone();
        trial.remove(k);
        let pts: Vec<Point> = trial.iter().map(|&i| vertices[i].1.clone()).collect();
        if !affinely_independent(&pts) {
            subset = trial;
        } else {
            k += 1;
        }
    }
    subset.into_iter().map(|i| vertices[i].0).collect()
}

/// Largest colourful set that is affinely independent and whose affine hull
/// avoids the origin, with one maximiser. Such a set together with the origin
/// is affinely independent, so this is the largest linearly independent
/// colourful set.
pub fn max_independent_colourful(config: &Configuration) -> (usize, Vec<PointId>) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    search_independent(config, 0, &mut current, &mut best);
    (best.len(), best)
}

fn search_independent(
    config: &Configuration,
    colour: usize,
    current: &mut Vec<PointId>,
    best: &mut Vec<PointId>,
) {
    let d = config.dimension();
    if current.len() > best.len() {
        *best = current.clone();
    }
    if best.len() == d || colour == config.num_colours() {
        return;
    }
    if current.len() + (config.num_colours() - colour) <= best.len() {
        return;
    }
    for id in config.colour_ids(colour) {
        current.push(id);
        let rows: Vec<Vec<Scalar>> = current
            .iter()
            .map(|&i| config.point(i).coords().to_vec())
            .collect();
        if rank(rows) == current.len() {
            search_independent(config, colour + 1, current, best);
        }
        current.pop();
        if best.len() == d {
            return;
        }
    }
    search_independent(config, colour + 1, current, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Point {
        Point::from_integers(c)
    }

    fn cfg(d: usize, colours: Vec<Vec<Point>>) -> Configuration {
        Configuration::new(d, colours).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(
            orientation(&[p(&[0, 0]), p(&[1, 0]), p(&[0, 1])]).unwrap(),
            Sign::Positive
        );
        assert_eq!(
            orientation(&[p(&[0, 0]), p(&[0, 1]), p(&[1, 0])]).unwrap(),
            Sign::Negative
        );
        assert_eq!(
            orientation(&[p(&[0, 0]), p(&[1, 1]), p(&[2, 2])]).unwrap(),
            Sign::Zero
        );
    }

    #[test]
    fn orientation_rejects_mismatched_dimensions() {
        assert!(matches!(
            orientation(&[p(&[0, 0]), p(&[1, 0, 0]), p(&[0, 1])]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(orientation(&[p(&[0, 0]), p(&[1, 0])]).is_err());
    }

    #[test]
    fn side_of_examples() {
        let t = Transversal::new(2, vec![(0, p(&[1, 0])), (1, p(&[0, 1]))]).unwrap();
        assert_eq!(side_of(&t, &p(&[0, 0])).unwrap(), Sign::Positive);
        assert_eq!(side_of(&t, &p(&[1, 1])).unwrap(), Sign::Negative);
        let half = Point::from_ratios(&[(1, 2), (1, 2)]);
        assert_eq!(side_of(&t, &half).unwrap(), Sign::Zero);
    }

    #[test]
    fn side_of_rejects_degenerate_transversals() {
        let through_origin = Transversal::new(2, vec![(0, p(&[1, 1])), (1, p(&[-1, -1]))]).unwrap();
        assert_eq!(
            side_of(&through_origin, &p(&[3, 0])),
            Err(Error::DegenerateTransversal)
        );
        let repeated = Transversal::new(2, vec![(0, p(&[1, 1])), (1, p(&[1, 1]))]).unwrap();
        assert_eq!(
            side_of(&repeated, &p(&[3, 0])),
            Err(Error::DegenerateTransversal)
        );
    }

    #[test]
    fn general_position_examples() {
        let good = cfg(
            2,
            vec![vec![p(&[1, 0])], vec![p(&[0, 1])], vec![p(&[-1, -1])]],
        );
        assert!(is_general_position(&good).holds());

        let bad = cfg(
            2,
            vec![vec![p(&[1, 0])], vec![p(&[2, 0])], vec![p(&[0, 1])]],
        );
        let GeneralPosition::Dependent(w) = is_general_position(&bad) else {
            panic!("collinear points accepted");
        };
        assert_eq!(
            w,
            vec![
                Vertex::Origin,
                Vertex::Point(PointId::new(0, 0)),
                Vertex::Point(PointId::new(1, 0))
            ]
        );
    }

    #[test]
    fn general_position_small_sets() {
        // Fewer than d + 1 elements in total: the whole set is tested.
        let c = cfg(3, vec![vec![p(&[1, 0, 0])], vec![], vec![], vec![]]);
        assert!(is_general_position(&c).holds());
    }

    #[test]
    fn configuration_validation() {
        let e = Configuration::new(2, vec![vec![p(&[1, 0])], vec![p(&[0, 1])]]).unwrap_err();
        assert!(e.to_string().contains("expected d+1 = 3 colour classes"));
        assert!(Configuration::new(2, vec![vec![p(&[1, 0])], vec![p(&[1, 0])], vec![]]).is_err());
        assert!(Configuration::new(2, vec![vec![p(&[0, 0])], vec![], vec![]]).is_err());
        assert!(Configuration::new(2, vec![vec![p(&[1])], vec![], vec![]]).is_err());
    }

    #[test]
    fn flat_indices_round_trip() {
        let c = cfg(1, vec![vec![p(&[1]), p(&[2])], vec![p(&[-1])]]);
        for (flat, id) in c.ids().enumerate() {
            assert_eq!(c.flat_index(id), flat);
            assert_eq!(c.id_of_flat(flat), Some(id));
        }
        assert_eq!(c.id_of_flat(3), None);
    }

    #[test]
    fn degeneracy_rank_on_a_line() {
        let c = cfg(
            2,
            vec![
                vec![p(&[1, 0]), p(&[-2, 0])],
                vec![p(&[3, 0])],
                vec![p(&[-1, 0])],
            ],
        );
        assert_eq!(max_independent_colourful(&c).0, 1);
    }

    #[test]
    fn degeneracy_rank_in_a_plane_through_origin() {
        // Everything in the plane z = 0 and generic inside it.
        let c = cfg(
            3,
            vec![
                vec![p(&[1, 0, 0]), p(&[2, 3, 0])],
                vec![p(&[0, 1, 0])],
                vec![p(&[-1, -1, 0])],
                vec![p(&[5, -2, 0])],
            ],
        );
        let (a, w) = max_independent_colourful(&c);
        assert_eq!(a, 2);
        assert_eq!(w.len(), 2);
        assert_ne!(w[0].colour, w[1].colour);
    }

    #[test]
    fn degeneracy_rank_empty() {
        let c = cfg(2, vec![vec![], vec![], vec![]]);
        assert_eq!(max_independent_colourful(&c), (0, vec![]));
    }

    #[test]
    fn linear_solve_and_rank() {
        let a = vec![vec![integer(2), integer(1)], vec![integer(1), integer(3)]];
        let x = solve_linear(&a, &[integer(3), integer(5)]).unwrap();
        assert_eq!(x, vec![rational(4, 5), rational(7, 5)]);
        assert_eq!(
            rank(vec![
                vec![integer(1), integer(2)],
                vec![integer(2), integer(4)]
            ]),
            1
        );
        assert!(solve_linear(
            &[vec![integer(1), integer(2)], vec![integer(2), integer(4)]],
            &[integer(1), integer(1)]
        )
        .is_none());
    }
}
