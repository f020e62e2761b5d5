//! Constructive search for a colourful simplex containing the origin.
//!
//! A run fixes a ray `r = {t u : t >= 0}` hitting the relative interior of a
//! colourful `(d-1)`-simplex `sigma` at `t = sigma_param > 0`, then repeatedly
//! either finishes, or replaces `sigma` by a transversal met by `r` strictly
//! closer to the origin. Each replacement either pivots through a facet of
//! `sigma u {v}` or runs one path of the doubled-configuration pivot.

use std::sync::atomic::{AtomicU64, Ordering};

use log::debug;
use num::Signed;

use crate::census::{enumerate_containing, ColourfulSimplex, DEFAULT_BOUND};
use crate::conditions::{check_half_space_condition, ConditionVerdict};
use crate::error::{Error, Result};
use crate::gen::{direction_chain, perturb};
use crate::geometry::{
    integer, is_general_position, rational, side_of, Configuration, GeneralPosition, Point,
    PointId, Scalar, Sign, Vertex,
};
use crate::pivot::{ray_hits_simplex, second_simplex, DoubledConfig, PathNode, DIRECTION_ATTEMPTS};

static SOLVER_STEPS: AtomicU64 = AtomicU64::new(0);

pub fn solver_steps() -> u64 {
    SOLVER_STEPS.load(Ordering::Relaxed)
}

pub fn reset_solver_steps() {
    SOLVER_STEPS.store(0, Ordering::Relaxed);
}

/// Doublings of the auxiliary point's distance tried per pivot step.
const AUX_ATTEMPTS: u32 = 32;

/// Perturbation size used by [`solve_robust`].
pub fn default_perturbation() -> Scalar {
    rational(1, 1_000_000)
}

/// The loop state: the current transversal `sigma` and where the fixed ray
/// meets it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotState {
    /// Member ids sorted by colour; exactly one colour is absent.
    pub sigma: Vec<PointId>,
    pub missing_colour: usize,
    pub ray_direction: Point,
    /// `sigma_param * ray_direction` lies in the relative interior of `conv(sigma)`.
    pub sigma_param: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateReport {
    pub reason: String,
    /// A dependent vertex set, when the configuration is not in general position.
    pub witness: Option<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Simplex(ColourfulSimplex),
    /// No point of `S_colour u S_missing` lies strictly on the origin's side
    /// of `aff(transversal)`.
    Refutation {
        transversal: Vec<PointId>,
        missing: usize,
        colour: usize,
    },
    Degenerate(DegenerateReport),
}

impl SolveResult {
    /// Exact re-verification against `config`, independent of the search.
    pub fn verify(&self, config: &Configuration) -> bool {
        match self {
            SolveResult::Simplex(s) => s.verify(config),
            SolveResult::Refutation {
                transversal,
                missing,
                colour,
            } => verify_refutation(config, transversal, *missing, *colour),
            SolveResult::Degenerate(_) => false,
        }
    }
}

fn verify_refutation(
    config: &Configuration,
    ids: &[PointId],
    missing: usize,
    colour: usize,
) -> bool {
    if colour == missing || colour >= config.num_colours() || missing >= config.num_colours() {
        return false;
    }
    let Ok(t) = config.transversal(ids) else {
        return false;
    };
    if t.missing_colour() != missing {
        return false;
    }
    config
        .union_of(colour, missing)
        .iter()
        .all(|q| matches!(side_of(&t, q), Ok(s) if s != Sign::Positive))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Finished(SolveResult),
    Continue(PivotState),
}

/// One entry of a solver trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// A fresh ray was chosen.
    Ray { attempt: u64, state: PivotState },
    /// `sigma` moved through a facet of `sigma u {v}`.
    Facet {
        entering: PointId,
        state: PivotState,
    },
    /// `sigma` moved along a doubled-configuration path.
    Pivot {
        auxiliary_scale: Scalar,
        path: Vec<PathNode>,
        state: PivotState,
    },
    /// The direction proved non-generic; the run restarts.
    Restart { attempt: u64, reason: String },
}

fn ray_param(config: &Configuration, ids: &[PointId], u: &Point) -> Result<Option<Scalar>> {
    ray_hits_simplex(&config.points_of(ids), u)
}

fn with_member(ids: &[PointId], drop_colour: usize, add: PointId) -> Vec<PointId> {
    let mut out: Vec<PointId> = ids
        .iter()
        .copied()
        .filter(|m| m.colour != drop_colour)
        .collect();
    out.push(add);
    out.sort();
    out
}

/// State for the initial transversal (first point of each colour but the
/// last) and the `attempt`-th perturbation of the ray towards its centroid.
pub fn initial_state(config: &Configuration, seed: u64, attempt: u64) -> Result<PivotState> {
    let d = config.dimension();
    if let Some(c) = (0..config.num_colours()).find(|&c| config.colour(c).is_empty()) {
        return Err(Error::EmptyColour(c));
    }
    let sigma: Vec<PointId> = (0..d).map(|c| PointId::new(c, 0)).collect();
    let pts = config.points_of(&sigma);
    let centroid = Point::centroid(&pts);
    let scale = centroid
        .coords()
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(|| integer(1));
    let nudge = direction_chain(d, seed, attempt).scale(&(scale * rational(1, 1000)));
    let u = centroid.add(&nudge);
    match ray_param(config, &sigma, &u)? {
        Some(t) => Ok(PivotState {
            sigma,
            missing_colour: d,
            ray_direction: u,
            sigma_param: t,
        }),
        None => Err(Error::NonGenericDirection),
    }
}

/// One outer iteration. `NonGenericDirection` means the ray must be replaced.
pub fn solver_step(config: &Configuration, state: &PivotState) -> Result<Step> {
    step_traced(config, state, &mut |_| {})
}

fn step_traced(
    config: &Configuration,
    state: &PivotState,
    trace: &mut dyn FnMut(TraceEvent),
) -> Result<Step> {
    SOLVER_STEPS.fetch_add(1, Ordering::Relaxed);
    let j = state.missing_colour;
    let t = config.transversal(&state.sigma)?;
    let u = &state.ray_direction;

    let mut entering = None;
    for v in config.colour_ids(j) {
        if side_of(&t, config.point(v))? == Sign::Positive {
            entering = Some(v);
            break;
        }
    }

    if let Some(v) = entering {
        let mut simplex = state.sigma.clone();
        simplex.push(v);
        simplex.sort();
        if let Some(found) = ColourfulSimplex::certify(config, simplex)? {
            return Ok(Step::Finished(SolveResult::Simplex(found)));
        }
        let mut exits = Vec::new();
        for &(c, _) in t.members() {
            let tau = with_member(&state.sigma, c, v);
            if let Some(s) = ray_param(config, &tau, u)? {
                if s < state.sigma_param {
                    exits.push((tau, c, s));
                }
            }
        }
        let [(tau, c, s)]: [_; 1] = exits.try_into().map_err(|e: Vec<_>| {
            Error::InternalInvariantViolation(format!(
                "expected one exit facet below the current parameter, found {}",
                e.len()
            ))
        })?;
        let next = PivotState {
            sigma: tau,
            missing_colour: c,
            ray_direction: u.clone(),
            sigma_param: s,
        };
        trace(TraceEvent::Facet {
            entering: v,
            state: next.clone(),
        });
        return Ok(Step::Continue(next));
    }

    // No colour-j point on the origin's side: replacement points for every
    // other colour, or a refutation.
    let mut replacements = Vec::new();
    for &(i, _) in t.members() {
        let found = config
            .colour_ids(i)
            .find(|&id| matches!(side_of(&t, config.point(id)), Ok(Sign::Positive)));
        match found {
            Some(id) => replacements.push(id),
            None => {
                return Ok(Step::Finished(SolveResult::Refutation {
                    transversal: state.sigma.clone(),
                    missing: j,
                    colour: i,
                }))
            }
        }
    }

    let w = PointId::new(j, 0);
    let mut rho = integer(1);
    for _ in 0..AUX_ATTEMPTS {
        let x = u.scale(&rho).neg();
        if config.colours().iter().flatten().any(|p| *p == x) {
            rho *= integer(2);
            continue;
        }
        // Colour c holds [sigma's point, replacement]; colour j holds [x, w].
        let mut colours = Vec::with_capacity(config.num_colours());
        let mut replacement_iter = replacements.iter();
        let mut sigma_iter = state.sigma.iter();
        for c in 0..config.num_colours() {
            if c == j {
                colours.push(vec![x.clone(), config.point(w).clone()]);
            } else {
                let a = *sigma_iter.next().unwrap();
                let b = *replacement_iter.next().unwrap();
                colours.push(vec![config.point(a).clone(), config.point(b).clone()]);
            }
        }
        let doubled = match Configuration::new(config.dimension(), colours)
            .and_then(|c| DoubledConfig::from_configuration(c, j))
        {
            Ok(dc) => dc,
            Err(Error::DegenerateInput(_)) | Err(Error::InvalidConfiguration(_)) => {
                rho *= integer(2);
                continue;
            }
            Err(e) => return Err(e),
        };
        let start: Vec<PointId> = (0..config.num_colours())
            .map(|c| PointId::new(c, 0))
            .collect();
        let path = second_simplex(&doubled, &start)?;
        let back = |id: PointId| -> Option<PointId> {
            if id.colour == j {
                (id.index == 1).then_some(w)
            } else {
                let pos = state.sigma.iter().position(|m| m.colour == id.colour)?;
                Some(if id.index == 0 {
                    state.sigma[pos]
                } else {
                    replacements[pos]
                })
            }
        };
        let endpoint = &path.endpoint.members;
        if endpoint.contains(&PointId::new(j, 1)) {
            let members: Vec<PointId> = endpoint.iter().filter_map(|&m| back(m)).collect();
            let found = ColourfulSimplex::certify(config, members)?.ok_or_else(|| {
                Error::InternalInvariantViolation(
                    "pivot endpoint does not contain the origin".into(),
                )
            })?;
            return Ok(Step::Finished(SolveResult::Simplex(found)));
        }
        let mut tau: Vec<PointId> = endpoint
            .iter()
            .filter(|m| m.colour != j)
            .filter_map(|&m| back(m))
            .collect();
        tau.sort();
        let s = ray_param(config, &tau, u)?.ok_or_else(|| {
            Error::InternalInvariantViolation("pivot endpoint facet misses the ray".into())
        })?;
        if s >= state.sigma_param {
            return Err(Error::InternalInvariantViolation(format!(
                "pivot endpoint facet meets the ray at {s}, not below {}",
                state.sigma_param
            )));
        }
        let next = PivotState {
            sigma: tau,
            missing_colour: j,
            ray_direction: u.clone(),
            sigma_param: s,
        };
        trace(TraceEvent::Pivot {
            auxiliary_scale: rho,
            path: path.nodes,
            state: next.clone(),
        });
        return Ok(Step::Continue(next));
    }
    Err(Error::NonGenericDirection)
}

fn degenerate(config: &Configuration, reason: String) -> SolveResult {
    let witness = match is_general_position(config) {
        GeneralPosition::General => None,
        GeneralPosition::Dependent(w) => Some(w),
    };
    SolveResult::Degenerate(DegenerateReport { reason, witness })
}

pub fn find_colourful_simplex(config: &Configuration, seed: u64) -> Result<SolveResult> {
    find_colourful_simplex_traced(config, seed, &mut |_| {})
}

/// As [`find_colourful_simplex`], reporting every ray choice and move.
pub fn find_colourful_simplex_traced(
    config: &Configuration,
    seed: u64,
    trace: &mut dyn FnMut(TraceEvent),
) -> Result<SolveResult> {
    if let Some(c) = (0..config.num_colours()).find(|&c| config.colour(c).is_empty()) {
        return Err(Error::EmptyColour(c));
    }
    // Transversals are visited with strictly decreasing parameter.
    let max_steps = (0..config.num_colours())
        .map(|j| {
            (0..config.num_colours())
                .filter(|&i| i != j)
                .map(|i| config.colour(i).len() as u128)
                .product::<u128>()
        })
        .sum::<u128>()
        + 1;
    let mut last_reason = String::from("no generic ray found");
    'attempts: for attempt in 0..DIRECTION_ATTEMPTS {
        let mut state = match initial_state(config, seed, attempt) {
            Ok(s) => s,
            Err(Error::NonGenericDirection) => continue,
            Err(Error::DegenerateCell) => {
                return Ok(degenerate(
                    config,
                    "the initial transversal spans a hyperplane through the origin".into(),
                ))
            }
            Err(e) => return Err(e),
        };
        trace(TraceEvent::Ray {
            attempt,
            state: state.clone(),
        });
        let mut steps = 0u128;
        loop {
            steps += 1;
            if steps > max_steps {
                return Err(Error::InternalInvariantViolation(
                    "more steps than transversals".into(),
                ));
            }
            match step_traced(config, &state, trace) {
                Ok(Step::Finished(result)) => return Ok(result),
                Ok(Step::Continue(next)) => state = next,
                Err(Error::NonGenericDirection) => {
                    last_reason = format!("ray {attempt} is not generic");
                    debug!("{last_reason}; restarting");
                    trace(TraceEvent::Restart {
                        attempt,
                        reason: last_reason.clone(),
                    });
                    continue 'attempts;
                }
                Err(
                    e @ (Error::DegenerateCell
                    | Error::DegenerateTransversal
                    | Error::DegeneratePivot { .. }
                    | Error::DegenerateInput(_)),
                ) => return Ok(degenerate(config, format!("{e}; perturb the input first"))),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(degenerate(config, last_reason))
}

/// How [`solve_robust`] reached its answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Direct,
    /// Solved on a perturbed copy and re-verified on the original points.
    Perturbed,
    /// Exhaustive enumeration after the perturbed answer failed to verify.
    Census,
}

/// Solves directly when possible, otherwise on a perturbed copy whose answer
/// is accepted only if it re-verifies on the original points; falls back to
/// the census and the half-space checker.
pub fn solve_robust(config: &Configuration, seed: u64) -> Result<(SolveResult, Route)> {
    solve_robust_traced(config, seed, &mut |_| {})
}

/// As [`solve_robust`]; only the direct attempt is traced.
pub fn solve_robust_traced(
    config: &Configuration,
    seed: u64,
    trace: &mut dyn FnMut(TraceEvent),
) -> Result<(SolveResult, Route)> {
    let direct = find_colourful_simplex_traced(config, seed, trace)?;
    if direct.verify(config) {
        return Ok((direct, Route::Direct));
    }
    let perturbed = perturb(config, &default_perturbation(), seed)?;
    match find_colourful_simplex(&perturbed, seed)? {
        SolveResult::Simplex(s) => {
            if let Some(found) = ColourfulSimplex::certify(config, s.members)? {
                return Ok((SolveResult::Simplex(found), Route::Perturbed));
            }
        }
        r @ SolveResult::Refutation { .. } => {
            if r.verify(config) {
                return Ok((r, Route::Perturbed));
            }
        }
        SolveResult::Degenerate(_) => {}
    }
    if let Some(s) = enumerate_containing(config, DEFAULT_BOUND)?
        .into_iter()
        .next()
    {
        return Ok((SolveResult::Simplex(s), Route::Census));
    }
    match check_half_space_condition(config) {
        Ok(ConditionVerdict::Fails(cx)) => Ok((
            SolveResult::Refutation {
                transversal: cx.transversal,
                missing: cx.missing,
                colour: cx.colour,
            },
            Route::Census,
        )),
        Ok(ConditionVerdict::Holds(_)) | Err(Error::DegenerateInput(_)) => Ok((
            degenerate(
                config,
                "no colourful simplex contains the origin and no half-space refutation exists"
                    .into(),
            ),
            Route::Census,
        )),
        Err(e) => Err(e),
    }
}
