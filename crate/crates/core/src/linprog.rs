//! Exact LP feasibility for convex-hull queries.
//!
//! A dense two-phase simplex over rationals with Bland's rule. Instances are
//! tiny (a handful of points in dimension at most 4 or 5), so the tableau is
//! kept dense and recomputed from scratch for every query.

use std::sync::atomic::{AtomicU64, Ordering};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Point, Scalar};

static LP_CALLS: AtomicU64 = AtomicU64::new(0);
static LP_PIVOTS: AtomicU64 = AtomicU64::new(0);

/// Number of LPs solved and simplex pivots performed since the last reset.
/// Process-wide counters; only meaningful for single-query reporting.
pub fn counters() -> (u64, u64) {
    (
        LP_CALLS.load(Ordering::Relaxed),
        LP_PIVOTS.load(Ordering::Relaxed),
    )
}

pub fn reset_counters() {
    LP_CALLS.store(0, Ordering::Relaxed);
    LP_PIVOTS.store(0, Ordering::Relaxed);
}

/// Convex coefficients certifying that a point lies in `conv(P)`.
///
/// `coefficients[i]` is the weight of the i-th input point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullCertificate {
    pub coefficients: Vec<Scalar>,
}

impl HullCertificate {
    /// Exact check: non-negative weights summing to one that reproduce `q`.
    pub fn verify(&self, points: &[Point], q: &Point) -> bool {
        if self.coefficients.len() != points.len() {
            return false;
        }
        if self.coefficients.iter().any(Signed::is_negative) {
            return false;
        }
        let total: Scalar = self.coefficients.iter().sum();
        total.is_one() && Point::combination(points, &self.coefficients) == *q
    }
}

/// Result of maximising `t` over `{t >= 0 : (1 - t) x in conv(P)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RayOutcome {
    Empty,
    /// Optimal `t`, with a certificate for the point `(1 - t) x`.
    Max {
        t: Scalar,
        certificate: HullCertificate,
    },
}

impl RayOutcome {
    /// True iff the ray meets the hull in a point other than `x` itself.
    pub fn beyond_start(&self) -> bool {
        matches!(self, RayOutcome::Max { t, .. } if t.is_positive())
    }
}

/// Maximise `c.x` subject to `a x = b`, `x >= 0`.
#[derive(Debug, Clone)]
struct StandardLp {
    a: Vec<Vec<Scalar>>,
    b: Vec<Scalar>,
    c: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum LpSolution {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Scalar>, value: Scalar },
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Scalar>>,
    basis: Vec<usize>,
    /// Reduced costs for maximisation; the last entry is minus the objective.
    objective: Vec<Scalar>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.objective.len() - 1
    }

    fn set_costs(&mut self, costs: &[Scalar]) {
        let w = self.width();
        let mut obj: Vec<Scalar> = costs.to_vec();
        obj.resize(w, Scalar::zero());
        obj.push(Scalar::zero());
        for (row, &bv) in self.rows.iter().zip(&self.basis) {
            let cb = &costs.get(bv).cloned().unwrap_or_else(Scalar::zero);
            if cb.is_zero() {
                continue;
            }
            for (o, r) in obj.iter_mut().zip(row) {
                *o -= cb * r;
            }
        }
        self.objective = obj;
    }

    fn pivot(&mut self, row: usize, col: usize) {
        LP_PIVOTS.fetch_add(1, Ordering::Relaxed);
        let inv = self.rows[row][col].recip();
        for v in self.rows[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[row].clone();
        for (r, other) in self.rows.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (o, p) in other.iter_mut().zip(&pivot_row) {
                *o -= &f * p;
            }
        }
        let f = self.objective[col].clone();
        if !f.is_zero() {
            for (o, p) in self.objective.iter_mut().zip(&pivot_row) {
                *o -= &f * p;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule simplex on columns `< allowed`. Returns false if unbounded.
    fn optimise(&mut self, allowed: usize) -> bool {
        loop {
            let Some(col) = (0..allowed).find(|&j| self.objective[j].is_positive()) else {
                return true;
            };
            let rhs = self.width();
            let mut best: Option<(usize, Scalar)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[col];
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

impl StandardLp {
    fn solve(&self) -> LpSolution {
        LP_CALLS.fetch_add(1, Ordering::Relaxed);
        let m = self.b.len();
        let n = self.c.len();
        // Phase I: artificial variables n..n+m, rows normalised to b >= 0.
        let mut rows = Vec::with_capacity(m);
        for (i, (row, rhs)) in self.a.iter().zip(&self.b).enumerate() {
            let flip = rhs.is_negative();
            let mut r: Vec<Scalar> = row
                .iter()
                .map(|v| if flip { -v } else { v.clone() })
                .collect();
            r.extend((0..m).map(|k| {
                if k == i {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            r.push(if flip { -rhs } else { rhs.clone() });
            rows.push(r);
        }
        let mut tab = Tableau {
            rows,
            basis: (n..n + m).collect(),
            objective: vec![Scalar::zero(); n + m + 1],
        };
        let mut phase_one = vec![Scalar::zero(); n];
        phase_one.extend((0..m).map(|_| -Scalar::one()));
        tab.set_costs(&phase_one);
        let bounded = tab.optimise(n + m);
        debug_assert!(bounded, "phase I is always bounded");
        let w = tab.width();
        if !tab.objective[w].is_zero() {
            return LpSolution::Infeasible;
        }
        // Drive remaining artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= n {
                match (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                    Some(j) => tab.pivot(r, j),
                    None => {
                        tab.rows.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        // Phase II on the original columns only.
        for row in tab.rows.iter_mut() {
            let rhs = row.pop().unwrap();
            row.truncate(n);
            row.push(rhs);
        }
        tab.objective = vec![Scalar::zero(); n + 1];
        tab.set_costs(&self.c);
        if !tab.optimise(n) {
            return LpSolution::Unbounded;
        }
        let mut x = vec![Scalar::zero(); n];
        for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
            x[bv] = row[n].clone();
        }
        let value = -tab.objective[n].clone();
        LpSolution::Optimal { x, value }
    }
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

/// Rows `sum_i lambda_i p_i[k]` for every coordinate, then `sum_i lambda_i`.
fn hull_rows(points: &[Point], d: usize) -> Vec<Vec<Scalar>> {
    let mut a: Vec<Vec<Scalar>> = (0..d)
        .map(|k| points.iter().map(|p| p.coords()[k].clone()).collect())
        .collect();
    a.push(vec![Scalar::one(); points.len()]);
    a
}

/// Certificate for `q in conv(points)`, if it holds.
pub fn point_in_hull(points: &[Point], q: &Point) -> Result<Option<HullCertificate>> {
    let d = q.dim();
    check_dims(points, d)?;
    if points.is_empty() {
        return Ok(None);
    }
    let mut b = q.coords().to_vec();
    b.push(Scalar::one());
    let lp = StandardLp {
        a: hull_rows(points, d),
        b,
        c: vec![Scalar::zero(); points.len()],
    };
    match lp.solve() {
        LpSolution::Optimal { x, .. } => {
            let cert = HullCertificate { coefficients: x };
            debug_assert!(cert.verify(points, q));
            Ok(Some(cert))
        }
        LpSolution::Infeasible => Ok(None),
        LpSolution::Unbounded => Err(Error::InternalInvariantViolation(
            "feasibility LP reported unbounded".into(),
        )),
    }
}

/// `max {t >= 0 : (1 - t) x in conv(points)}` for the ray from `x` through the
/// origin.
pub fn ray_hull_sup(points: &[Point], x: &Point) -> Result<RayOutcome> {
    let d = x.dim();
    check_dims(points, d)?;
    if x.is_origin() {
        return Err(Error::ZeroPoint);
    }
    if points.is_empty() {
        return Ok(RayOutcome::Empty);
    }
    // sum lambda_i p_i + t x = x,  sum lambda_i = 1,  maximise t.
    let n = points.len();
    let mut a = hull_rows(points, d);
    for (k, row) in a.iter_mut().enumerate() {
        row.push(if k < d {
            x.coords()[k].clone()
        } else {
            Scalar::zero()
        });
    }
    let mut b = x.coords().to_vec();
    b.push(Scalar::one());
    let mut c = vec![Scalar::zero(); n];
    c.push(Scalar::one());
    match (StandardLp { a, b, c }).solve() {
        LpSolution::Infeasible => Ok(RayOutcome::Empty),
        LpSolution::Optimal { x: sol, value } => {
            let certificate = HullCertificate {
                coefficients: sol[..n].to_vec(),
            };
            debug_assert!(certificate.verify(points, &x.scale(&(Scalar::one() - &value))));
            Ok(RayOutcome::Max {
                t: value,
                certificate,
            })
        }
        LpSolution::Unbounded => Err(Error::InternalInvariantViolation(
            "ray LP over a compact hull reported unbounded".into(),
        )),
    }
}

/// True iff `conv(points)` meets the line through `x` and the origin.
pub fn line_meets_hull(points: &[Point], x: &Point) -> Result<bool> {
    let d = x.dim();
    check_dims(points, d)?;
    if x.is_origin() {
        return Err(Error::ZeroPoint);
    }
    if points.is_empty() {
        return Ok(false);
    }
    // t = t_plus - t_minus is free.
    let n = points.len();
    let mut a = hull_rows(points, d);
    for (k, row) in a.iter_mut().enumerate() {
        let xk = if k < d {
            x.coords()[k].clone()
        } else {
            Scalar::zero()
        };
        row.push(xk.clone());
        row.push(-xk);
    }
    let mut b = x.coords().to_vec();
    b.push(Scalar::one());
    let lp = StandardLp {
        a,
        b,
        c: vec![Scalar::zero(); n + 2],
    };
    match lp.solve() {
        LpSolution::Infeasible => Ok(false),
        LpSolution::Optimal { .. } => Ok(true),
        LpSolution::Unbounded => Err(Error::InternalInvariantViolation(
            "feasibility LP reported unbounded".into(),
        )),
    }
}
