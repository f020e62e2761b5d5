//! Planar search via the orientation digraph.
//!
//! Points of different colours are joined by an arc `u -> v` exactly when the
//! origin lies strictly to the right of the directed line through `u` and
//! `v`. A directed triangle of such arcs contains the origin. A shortest
//! circuit has length 3 or 4, and a 4-circuit uses only two colours; a ray
//! through the origin away from a point of the third colour then crosses one
//! of its arcs, which closes a triangle.

use std::collections::VecDeque;

use num::{Signed, Zero};

use crate::census::ColourfulSimplex;
use crate::conditions::{check_line_condition, ConditionVerdict};
use crate::error::{Error, Result};
use crate::geometry::{orientation, Configuration, Point, PointId, Scalar, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    /// Colour-major, so node `k` is the configuration's flat index `k`.
    pub nodes: Vec<(PointId, Point)>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl OrientedGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.out[node]
    }

    pub fn predecessors(&self, node: usize) -> &[usize] {
        &self.inc[node]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.out[from].binary_search(&to).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn colour(&self, node: usize) -> usize {
        self.nodes[node].0.colour
    }

    pub fn point(&self, node: usize) -> &Point {
        &self.nodes[node].1
    }
}

fn check_planar(config: &Configuration) -> Result<()> {
    if config.dimension() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: config.dimension(),
        });
    }
    Ok(())
}

pub fn build_digraph(config: &Configuration) -> Result<OrientedGraph> {
    check_planar(config)?;
    let nodes: Vec<(PointId, Point)> = config
        .ids()
        .map(|id| (id, config.point(id).clone()))
        .collect();
    let n = nodes.len();
    let origin = Point::origin(2);
    let mut out = vec![Vec::new(); n];
    let mut inc = vec![Vec::new(); n];
    for a in 0..n {
        for b in a + 1..n {
            if nodes[a].0.colour == nodes[b].0.colour {
                continue;
            }
            let (u, v) =
                match orientation(&[nodes[a].1.clone(), nodes[b].1.clone(), origin.clone()])? {
                    Sign::Negative => (a, b),
                    Sign::Positive => (b, a),
                    Sign::Zero => {
                        return Err(Error::DegenerateInput(format!(
                            "origin lies on the line through {} and {}",
                            nodes[a].0, nodes[b].0
                        )))
                    }
                };
            out[u].push(v);
            inc[v].push(u);
        }
    }
    for list in out.iter_mut().chain(inc.iter_mut()) {
        list.sort_unstable();
    }
    Ok(OrientedGraph { nodes, out, inc })
}

/// Shortest path from `from` to `to` by breadth-first search, visiting
/// successors in index order.
fn shortest_path(g: &OrientedGraph, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.len()];
    let mut queue = VecDeque::from([from]);
    parent[from] = from;
    while let Some(u) = queue.pop_front() {
        for &v in g.successors(u) {
            if parent[v] != usize::MAX {
                continue;
            }
            parent[v] = u;
            if v == to {
                let mut path = vec![v];
                let mut cur = v;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(v);
        }
    }
    None
}

/// A shortest directed circuit as a node sequence (first node not repeated).
/// Ties go to the circuit through the smallest node, then to BFS order.
pub fn shortest_circuit(g: &OrientedGraph) -> Result<Vec<usize>> {
    for node in 0..g.len() {
        if g.successors(node).is_empty() || g.predecessors(node).is_empty() {
            return Err(Error::NoCircuit(Some(g.nodes[node].0)));
        }
    }
    let mut best: Option<Vec<usize>> = None;
    for s in 0..g.len() {
        for &p in g.predecessors(s) {
            if let Some(path) = shortest_path(g, s, p) {
                if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                    best = Some(path);
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 3) {
            break;
        }
    }
    let circuit = best.ok_or(Error::NoCircuit(None))?;
    match circuit.len() {
        3 => {}
        4 => {
            let mut colours: Vec<usize> = circuit.iter().map(|&k| g.colour(k)).collect();
            colours.sort_unstable();
            colours.dedup();
            if colours.len() != 2 {
                return Err(Error::InternalInvariantViolation(
                    "shortest 4-circuit uses three colours".into(),
                ));
            }
        }
        n => {
            return Err(Error::InternalInvariantViolation(format!(
                "shortest circuit has length {n}"
            )))
        }
    }
    Ok(circuit)
}

/// Crossings of the ray `{s * direction : s > 0}` with the arcs of `circuit`:
/// `(k_plus, k_minus)`, where `k_plus` counts crossings from the right side
/// of an arc to its left.
pub fn crossing_counts(
    g: &OrientedGraph,
    circuit: &[usize],
    direction: &Point,
) -> Result<(usize, usize)> {
    let mut plus = 0;
    let mut minus = 0;
    for (a, b) in arcs_of(circuit) {
        match crossing(g.point(a), g.point(b), direction)? {
            Some(Sign::Positive) => plus += 1,
            Some(Sign::Negative) => minus += 1,
            _ => {}
        }
    }
    Ok((plus, minus))
}

fn arcs_of(circuit: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..circuit.len()).map(move |k| (circuit[k], circuit[(k + 1) % circuit.len()]))
}

fn cross(a: &Point, b: &Point) -> Scalar {
    let (x, y) = (a.coords(), b.coords());
    &x[0] * &y[1] - &x[1] * &y[0]
}

/// How the ray crosses the segment `[a, b]`: `Positive` when it passes from
/// the right of `a -> b` to the left, `Negative` for the reverse, `None` for
/// a miss. Hits at an endpoint, or a ray along the segment's line, are
/// non-generic.
fn crossing(a: &Point, b: &Point, direction: &Point) -> Result<Option<Sign>> {
    let e = b.sub(a);
    let denom = cross(direction, &e);
    if denom.is_zero() {
        if cross(a, direction).is_zero() {
            return Err(Error::NonGenericDirection);
        }
        return Ok(None);
    }
    // a + lambda e = s direction
    let lambda = cross(a, direction) / &denom;
    let s = cross(&e, a) / -&denom;
    if !s.is_positive() {
        if s.is_zero() {
            return Err(Error::NonGenericDirection);
        }
        return Ok(None);
    }
    if lambda.is_zero() || lambda == Scalar::from_integer(1.into()) {
        return Err(Error::NonGenericDirection);
    }
    if lambda.is_negative() || lambda > Scalar::from_integer(1.into()) {
        return Ok(None);
    }
    Ok(Some(Sign::of(&cross(&e, direction))))
}

/// The colourful triangle closed by a 2-coloured 4-circuit and the point `w`
/// of the third colour, if the ray away from `w` crosses an arc generically.
pub fn triangle_from_circuit(
    g: &OrientedGraph,
    circuit: &[usize],
    w: usize,
) -> Result<Option<[usize; 3]>> {
    let direction = g.point(w).neg();
    for (a, b) in arcs_of(circuit) {
        if crossing(g.point(a), g.point(b), &direction)? == Some(Sign::Positive) {
            return Ok(Some([a, b, w]));
        }
    }
    Ok(None)
}

/// A colourful triangle containing the origin, certified, for a planar
/// configuration meeting the line condition.
pub fn find_triangle_2d(config: &Configuration) -> Result<ColourfulSimplex> {
    check_planar(config)?;
    if let ConditionVerdict::Fails(cx) = check_line_condition(config)? {
        return Err(Error::ConditionViolated(format!(
            "the line through {} and the origin misses the hull of colours {} and {}",
            cx.point, cx.pair.0, cx.pair.1
        )));
    }
    let g = build_digraph(config)?;
    let circuit = shortest_circuit(&g)?;
    let nodes: Vec<usize> = if circuit.len() == 3 {
        circuit
    } else {
        let used: Vec<usize> = circuit.iter().map(|&k| g.colour(k)).collect();
        let third = (0..3).find(|c| !used.contains(c)).unwrap();
        let candidates: Vec<usize> = (0..g.len()).filter(|&k| g.colour(k) == third).collect();
        if candidates.is_empty() {
            return Err(Error::ConditionViolated(format!("colour {third} is empty")));
        }
        let mut found = None;
        for w in candidates {
            match triangle_from_circuit(&g, &circuit, w) {
                Ok(Some(t)) => {
                    found = Some(t);
                    break;
                }
                Ok(None) => {
                    return Err(Error::InternalInvariantViolation(
                        "ray away from the third colour crosses no arc from the right".into(),
                    ))
                }
                Err(Error::NonGenericDirection) => continue,
                Err(e) => return Err(e),
            }
        }
        found
            .ok_or_else(|| {
                Error::DegenerateInput(
                    "every ray away from the third colour hits a circuit vertex".into(),
                )
            })?
            .to_vec()
    };
    let members = nodes.iter().map(|&k| g.nodes[k].0).collect();
    ColourfulSimplex::certify(config, members)?
        .ok_or_else(|| Error::InternalInvariantViolation("found triangle misses the origin".into()))
}
