//! Runs the pivoting solver with a step trace, then the robust wrapper.

use colourful::gen::{gen_random_ball, gen_random_barany};
use colourful::geometry::{rational, Point};
use colourful::solver::{find_colourful_simplex_traced, solve_robust, TraceEvent};
use colourful::{Result, SolveResult};
use itertools::Itertools;

fn main() -> Result<()> {
    let c = gen_random_barany(3, 4, 11)?;
    let result = find_colourful_simplex_traced(&c, 0, &mut |e| match e {
        TraceEvent::Ray { attempt, state } => println!(
            "ray attempt {attempt}: sigma {}",
            state.sigma.iter().join(" ")
        ),
        TraceEvent::Facet { entering, state } => {
            println!(
                "facet exit, {entering} enters, parameter {}",
                state.sigma_param
            )
        }
        TraceEvent::Pivot {
            auxiliary_scale,
            path,
            ..
        } => {
            println!(
                "auxiliary pivot at scale {auxiliary_scale}, path of {} nodes",
                path.len()
            )
        }
        TraceEvent::Restart { attempt, reason } => println!("restart {attempt}: {reason}"),
    })?;
    match &result {
        SolveResult::Simplex(s) => println!(
            "simplex {}, verified {}",
            s.members.iter().join(" "),
            result.verify(&c)
        ),
        other => println!("unexpected {other:?}"),
    }

    let off = gen_random_ball(
        3,
        &[2, 2, 2, 2],
        &Point::from_integers(&[4, 0, 0]),
        &rational(1, 1),
        3,
    )?;
    let (result, route) = solve_robust(&off, 0)?;
    if let SolveResult::Refutation {
        transversal,
        missing,
        colour,
    } = &result
    {
        println!(
            "refuted via {route:?}: {} misses colour {missing}, colour {colour} stays outside",
            transversal.iter().join(" ")
        );
    }
    Ok(())
}
