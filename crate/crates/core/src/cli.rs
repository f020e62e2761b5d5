//! Command-line front end and JSON interchange.
//!
//! Configurations are `{"dimension": d, "colours": [[[coord, ...], ...], ...]}`
//! with `d + 1` colour classes; a coordinate is a JSON integer or a string
//! holding an integer, a fraction `p/q` or a decimal. Floats are rejected.
//! Point ids, colours and flat indices are 0-based; flat indices run
//! colour-major.
//!
//! Every command prints one JSON report on stdout. Exit codes: 0 holds or
//! found, 1 refuted or none, 2 input error, 3 degenerate input, 4 internal
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, Zero};
use serde_json::{json, Map, Value};

use crate::census::{check_atleast, enumerate_containing, ColourfulSimplex, DEFAULT_BOUND};
use crate::conditions::{
    check_barany, check_half_space_condition, check_line_condition, check_pairwise,
    check_ray_condition, ConditionVerdict,
};
use crate::error::{Error, Result};
use crate::gen::{gen_doubled, gen_random_barany, gen_simplex_cluster};
use crate::geometry::{Configuration, Point, PointId, Scalar};
use crate::linprog;
use crate::pivot::{
    self, build_octahedron_complex, generic_crossings, second_simplex, DoubledConfig, NodeClass,
};
use crate::planar::{build_digraph, find_triangle_2d, shortest_circuit};
use crate::solver::{self, solve_robust_traced, Route, SolveResult, TraceEvent};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

// ---------------------------------------------------------------------------
// JSON

fn parse_decimal(s: &str) -> Option<Scalar> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(&digits).ok()?;
    let denom = num::pow(BigInt::from(10), frac.len());
    let value = Scalar::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Exact value of a coordinate string: integer, `p/q` or decimal.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).ok()?;
        let q = BigInt::from_str(q.trim()).ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Scalar::new(p, q));
    }
    parse_decimal(s)
}

fn parse_error(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

fn parse_coord(v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Scalar::from_integer(u.into()))
            } else {
                Err(parse_error(
                    path,
                    "floating-point numbers are inexact; quote the value",
                ))
            }
        }
        Value::String(s) => parse_scalar(s)
            .ok_or_else(|| parse_error(path, format!("not a rational number: {s:?}"))),
        _ => Err(parse_error(path, "expected a number or a string")),
    }
}

pub fn config_from_json(value: &Value) -> Result<Configuration> {
    let obj = value
        .as_object()
        .ok_or_else(|| parse_error("", "expected an object"))?;
    let d = obj
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_error("dimension", "expected a positive integer"))?
        as usize;
    let colours = obj
        .get("colours")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_error("colours", "expected an array"))?;
    let mut parsed = Vec::with_capacity(colours.len());
    for (c, class) in colours.iter().enumerate() {
        let path = format!("colours[{c}]");
        let class = class
            .as_array()
            .ok_or_else(|| parse_error(&path, "expected an array of points"))?;
        let mut points = Vec::with_capacity(class.len());
        for (k, point) in class.iter().enumerate() {
            let path = format!("colours[{c}][{k}]");
            let coords = point
                .as_array()
                .ok_or_else(|| parse_error(&path, "expected an array of coordinates"))?;
            let coords = coords
                .iter()
                .enumerate()
                .map(|(i, v)| parse_coord(v, &format!("colours[{c}][{k}][{i}]")))
                .collect::<Result<Vec<_>>>()?;
            points.push(Point::new(coords));
        }
        parsed.push(points);
    }
    Configuration::new(d, parsed)
}

pub fn parse_config(text: &str) -> Result<Configuration> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| parse_error("", format!("invalid JSON: {e}")))?;
    config_from_json(&value)
}

fn scalar_json(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

fn point_json(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(scalar_json).collect())
}

pub fn config_to_json(config: &Configuration) -> Value {
    json!({
        "dimension": config.dimension(),
        "colours": config
            .colours()
            .iter()
            .map(|class| class.iter().map(point_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn serialize_config(config: &Configuration) -> String {
    serde_json::to_string_pretty(&config_to_json(config)).expect("JSON values serialize")
}

fn id_json(config: &Configuration, id: PointId) -> Value {
    json!({
        "colour": id.colour,
        "index": id.index,
        "flat": config.flat_index(id),
        "coords": point_json(config.point(id)),
    })
}

fn ids_json(config: &Configuration, ids: &[PointId]) -> Value {
    Value::Array(ids.iter().map(|&id| id_json(config, id)).collect())
}

fn flats_json(config: &Configuration, ids: &[PointId]) -> Value {
    json!(ids
        .iter()
        .map(|&id| config.flat_index(id))
        .collect::<Vec<_>>())
}

fn simplex_json(config: &Configuration, s: &ColourfulSimplex) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("simplex".into(), ids_json(config, &s.members));
    if let Some(cert) = &s.certificate {
        m.insert(
            "certificate".into(),
            Value::Array(cert.coefficients.iter().map(scalar_json).collect()),
        );
    }
    m
}

// ---------------------------------------------------------------------------
// Arguments

#[derive(Debug, Parser)]
#[command(name = "colourful", version, about = "Colourful Carathéodory toolkit")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Condition {
    /// Origin in the hull of every colour.
    Barany,
    /// Origin in the hull of every two colours.
    Pairwise,
    /// Ray condition on pairs.
    #[value(alias = "thm1")]
    Ray,
    /// Half-space condition on transversals.
    #[value(alias = "thm2")]
    HalfSpace,
    /// Planar line condition.
    #[value(alias = "thm2d")]
    Line,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Cluster,
    Barany,
    Doubled,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a sufficient condition.
    Check {
        #[arg(long, value_enum)]
        condition: Condition,
        file: PathBuf,
    },
    /// Find a colourful simplex containing the origin, or a refutation.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stream one JSON line per step on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Planar search through the orientation digraph.
    Planar { file: PathBuf },
    /// Enumerate every colourful simplex containing the origin.
    Census {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u128,
    },
    /// Follow the pivot path of a doubled configuration.
    Second {
        file: PathBuf,
        /// Flat indices of the starting colourful simplex.
        #[arg(long, value_delimiter = ',', required = true)]
        start: Vec<usize>,
        /// Pivot colour (default: the last colour).
        #[arg(long)]
        pivot_colour: Option<usize>,
    },
    /// Generate a seeded configuration.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        per_colour: Option<usize>,
        /// Cluster radius as an exact rational.
        #[arg(long, default_value = "1/100")]
        radius: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Decide whether two transversals form a covering octahedron.
    Octahedron {
        file: PathBuf,
        /// `a1,..,ad:b1,..,bd` in flat indices.
        #[arg(long)]
        pair: String,
    },
}

// ---------------------------------------------------------------------------
// Dispatch

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegenerateInput(_)
        | Error::DegenerateTransversal
        | Error::DegeneratePivot { .. }
        | Error::DegenerateCell
        | Error::NonGenericDirection => EXIT_DEGENERATE,
        Error::InternalInvariantViolation(_) | Error::RetryExhausted(_) => EXIT_INTERNAL,
        Error::ConditionViolated(_) | Error::NoCircuit(_) => EXIT_NEGATIVE,
        _ => EXIT_INPUT,
    }
}

struct Report {
    code: i32,
    body: Map<String, Value>,
}

impl Report {
    fn new(code: i32) -> Self {
        Report {
            code,
            body: Map::new(),
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.body.insert(key.into(), value);
        self
    }
}

fn load(file: &Path) -> Result<Configuration> {
    let text = fs::read_to_string(file)
        .map_err(|e| parse_error(&file.display().to_string(), e.to_string()))?;
    parse_config(&text)
}

fn stats(started: Instant) -> Value {
    let (lp_calls, lp_pivots) = linprog::counters();
    json!({
        "lp_calls": lp_calls,
        "lp_pivots": lp_pivots,
        "pivot_steps": pivot::pivot_steps(),
        "solver_steps": solver::solver_steps(),
        "elapsed_ms": started.elapsed().as_millis() as u64,
    })
}

fn verdict_report<W, C>(
    verdict: ConditionVerdict<W, C>,
    witness: impl FnOnce(W) -> Value,
    counterexample: impl FnOnce(C) -> Value,
) -> Report {
    match verdict {
        ConditionVerdict::Holds(w) => Report::new(EXIT_OK)
            .with("holds", json!(true))
            .with("witness", witness(w)),
        ConditionVerdict::Fails(c) => Report::new(EXIT_NEGATIVE)
            .with("holds", json!(false))
            .with("counterexample", counterexample(c)),
    }
}

fn check(condition: Condition, config: &Configuration) -> Result<Report> {
    let report = match condition {
        Condition::Barany => verdict_report(
            check_barany(config)?,
            |_| Value::Null,
            |c| json!({ "colour": c }),
        ),
        Condition::Pairwise => verdict_report(
            check_pairwise(config)?,
            |_| Value::Null,
            |(i, j)| json!({ "pair": [i, j] }),
        ),
        Condition::Ray => verdict_report(
            check_ray_condition(config)?,
            |ws| {
                json!(ws
                    .iter()
                    .map(|w| json!({ "pair": [w.pair.0, w.pair.1], "k": w.k }))
                    .collect::<Vec<_>>())
            },
            |cx| {
                json!({
                    "pair": [cx.pair.0, cx.pair.1],
                    "failures": cx.failures.iter().map(|&(k, x)| json!({ "colour": k, "point": id_json(config, x) })).collect::<Vec<_>>(),
                })
            },
        ),
        Condition::HalfSpace => verdict_report(
            check_half_space_condition(config)?,
            |s| json!({ "checked": s.transversals_checked, "skipped": s.transversals_skipped }),
            |cx| {
                json!({
                    "transversal": ids_json(config, &cx.transversal),
                    "missing": cx.missing,
                    "colour": cx.colour,
                })
            },
        ),
        Condition::Line => verdict_report(
            check_line_condition(config)?,
            |_| Value::Null,
            |cx| json!({ "pair": [cx.pair.0, cx.pair.1], "point": id_json(config, cx.point) }),
        ),
    };
    let name = condition
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Ok(report.with("condition", json!(name)))
}

fn trace_json(config: &Configuration, event: &TraceEvent) -> Value {
    let state_json = |s: &solver::PivotState| {
        json!({
            "sigma": flats_json(config, &s.sigma),
            "missing": s.missing_colour,
            "sigma_param": scalar_json(&s.sigma_param),
        })
    };
    match event {
        TraceEvent::Ray { attempt, state } => {
            json!({ "event": "ray", "attempt": attempt, "direction": point_json(&state.ray_direction), "state": state_json(state) })
        }
        TraceEvent::Facet { entering, state } => {
            json!({ "event": "facet", "entering": config.flat_index(*entering), "state": state_json(state) })
        }
        TraceEvent::Pivot {
            auxiliary_scale,
            path,
            state,
        } => json!({
            "event": "pivot",
            "auxiliary_scale": scalar_json(auxiliary_scale),
            "path_length": path.len(),
            "state": state_json(state),
        }),
        TraceEvent::Restart { attempt, reason } => {
            json!({ "event": "restart", "attempt": attempt, "reason": reason })
        }
    }
}

fn solve(
    config: &Configuration,
    seed: u64,
    trace: bool,
    err: &mut (dyn Write + Send),
) -> Result<Report> {
    let mut sink = |e: TraceEvent| {
        if trace {
            let _ = writeln!(err, "{}", trace_json(config, &e));
        }
    };
    let (result, route) = solve_robust_traced(config, seed, &mut sink)?;
    let route = match route {
        Route::Direct => "direct",
        Route::Perturbed => "perturbed",
        Route::Census => "census",
    };
    let report = match result {
        SolveResult::Simplex(s) => {
            let mut r = Report::new(EXIT_OK).with("result", json!("simplex"));
            r.body.extend(simplex_json(config, &s));
            r
        }
        SolveResult::Refutation {
            transversal,
            missing,
            colour,
        } => Report::new(EXIT_NEGATIVE)
            .with("result", json!("refutation"))
            .with("transversal", ids_json(config, &transversal))
            .with("missing", json!(missing))
            .with("colour", json!(colour)),
        SolveResult::Degenerate(rep) => Report::new(EXIT_DEGENERATE)
            .with("result", json!("degenerate"))
            .with("reason", json!(rep.reason))
            .with("witness", json!(rep.witness.map(|w| format!("{w:?}")))),
    };
    Ok(report.with("route", json!(route)))
}

fn planar(config: &Configuration) -> Result<Report> {
    let triangle = find_triangle_2d(config)?;
    let g = build_digraph(config)?;
    let circuit = shortest_circuit(&g)?;
    let mut r = Report::new(EXIT_OK)
        .with("result", json!("triangle"))
        .with("circuit", json!(circuit))
        .with("circuit_length", json!(circuit.len()));
    r.body.extend(simplex_json(config, &triangle));
    Ok(r)
}

fn census(config: &Configuration, bound: u128) -> Result<Report> {
    let all = enumerate_containing(config, bound)?;
    let floor = check_atleast(config, bound)?;
    let code = if all.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    Ok(Report::new(code)
        .with("count", json!(all.len()))
        .with(
            "simplices",
            json!(all
                .iter()
                .map(|s| flats_json(config, &s.members))
                .collect::<Vec<_>>()),
        )
        .with("min_colour_size", json!(floor.floor))
        .with("at_least_min_colour_size", json!(floor.holds)))
}

fn flat_ids(config: &Configuration, flats: &[usize]) -> Result<Vec<PointId>> {
    flats
        .iter()
        .map(|&f| {
            config
                .id_of_flat(f)
                .ok_or_else(|| Error::Precondition(format!("flat index {f} out of range")))
        })
        .collect()
}

fn class_name(class: NodeClass) -> String {
    match class {
        NodeClass::N1 => "N1".into(),
        NodeClass::N2 { absent_colour } => format!("N2(absent {absent_colour})"),
        NodeClass::N3 => "N3".into(),
        NodeClass::None => "none".into(),
    }
}

fn second(config: Configuration, start: &[usize], pivot_colour: Option<usize>) -> Result<Report> {
    let pivot = pivot_colour.unwrap_or(config.dimension());
    let start = flat_ids(&config, start)?;
    let doubled = DoubledConfig::from_configuration(config, pivot)?;
    let path = second_simplex(&doubled, &start)?;
    let config = doubled.config();
    let nodes: Vec<Value> = path
        .nodes
        .iter()
        .map(|n| json!({ "members": flats_json(config, &n.members), "class": class_name(n.class) }))
        .collect();
    let mut r = Report::new(EXIT_OK)
        .with("start", flats_json(config, &start))
        .with("path", Value::Array(nodes));
    r.body.extend(simplex_json(config, &path.endpoint));
    Ok(r)
}

fn gen(
    kind: Kind,
    dim: usize,
    per_colour: Option<usize>,
    radius: &str,
    seed: u64,
    output: &Path,
) -> Result<Report> {
    let config = match kind {
        Kind::Cluster => {
            let r = parse_scalar(radius).ok_or_else(|| {
                Error::Precondition(format!("radius {radius:?} is not a rational"))
            })?;
            gen_simplex_cluster(dim, per_colour.unwrap_or(1), &r, seed)?
        }
        Kind::Barany => gen_random_barany(dim, per_colour.unwrap_or(dim + 1), seed)?,
        Kind::Doubled => {
            if per_colour.is_some_and(|n| n != 2) {
                return Err(Error::Precondition(
                    "doubled configurations have 2 points per colour".into(),
                ));
            }
            gen_doubled(dim, seed)?.into_configuration()
        }
    };
    let text = serialize_config(&config);
    if output == Path::new("-") {
        println!("{text}");
    } else {
        fs::write(output, text + "\n")
            .map_err(|e| parse_error(&output.display().to_string(), e.to_string()))?;
    }
    Ok(Report::new(EXIT_OK)
        .with("written", json!(output.display().to_string()))
        .with("dimension", json!(dim))
        .with("points", json!(config.total_points())))
}

/// Parses `a1,..,ad:b1,..,bd` into two lists of flat indices.
pub fn parse_pair_arg(arg: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let list = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| parse_error("--pair", format!("not an index: {x:?}")))
            })
            .collect()
    };
    let (a, b) = arg
        .split_once(':')
        .ok_or_else(|| parse_error("--pair", "expected a1,..,ad:b1,..,bd"))?;
    Ok((list(a)?, list(b)?))
}

fn octahedron(config: &Configuration, arg: &str) -> Result<Report> {
    let (a, b) = parse_pair_arg(arg)?;
    let t = config.transversal(&flat_ids(config, &a)?)?;
    let u = config.transversal(&flat_ids(config, &b)?)?;
    let m = build_octahedron_complex(&t, &u)?;
    let (direction, crossings) = generic_crossings(&m)?;
    let code = if crossings.odd {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok(Report::new(code)
        .with("covers", json!(crossings.odd))
        .with("missing", json!(t.missing_colour()))
        .with("cells", json!(m.cells.len()))
        .with("crossings", json!(crossings.count))
        .with("direction", point_json(&direction)))
}

fn dispatch(command: Command, err: &mut (dyn Write + Send)) -> Result<Report> {
    match command {
        Command::Check { condition, file } => check(condition, &load(&file)?),
        Command::Solve { file, seed, trace } => solve(&load(&file)?, seed, trace, err),
        Command::Planar { file } => planar(&load(&file)?),
        Command::Census { file, bound } => census(&load(&file)?, bound),
        Command::Second {
            file,
            start,
            pivot_colour,
        } => second(load(&file)?, &start, pivot_colour),
        Command::Gen {
            kind,
            dim,
            per_colour,
            radius,
            seed,
            output,
        } => gen(kind, dim, per_colour, &radius, seed, &output),
        Command::Octahedron { file, pair } => octahedron(&load(&file)?, &pair),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        EXIT_DEGENERATE => "degenerate",
        EXIT_INTERNAL => "internal",
        EXIT_NEGATIVE => "condition",
        _ => "input",
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let started = Instant::now();
    linprog::reset_counters();
    pivot::reset_pivot_steps();
    solver::reset_solver_steps();
    let Cli { jobs, command } = cli;
    let outcome = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool.install(|| dispatch(command, err)),
        Err(e) => Err(Error::Precondition(format!(
            "cannot start {jobs:?} workers: {e}"
        ))),
    };
    let (code, mut body) = match outcome {
        Ok(report) => (report.code, report.body),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let mut body = Map::new();
            body.insert("error".into(), json!(error_kind(&e)));
            body.insert("message".into(), json!(e.to_string()));
            (exit_code(&e), body)
        }
    };
    body.insert("stats".into(), stats(started));
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&Value::Object(body)).expect("JSON values serialize")
    );
    code
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr())
}
