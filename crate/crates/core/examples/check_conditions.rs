//! Evaluates every sufficient condition on a clustered configuration and on a
//! configuration pushed off to one side of the origin.

use colourful::conditions::{
    check_barany, check_half_space_condition, check_line_condition, check_pairwise,
    check_ray_condition, fixed_point_colours, ColourSet,
};
use colourful::gen::{gen_random_ball, gen_simplex_cluster};
use colourful::geometry::{rational, Point};
use colourful::{Configuration, Result};
use itertools::Itertools;

fn report(name: &str, c: &Configuration) -> Result<()> {
    println!("{name}:");
    println!(
        "  every colour surrounds 0     {}",
        check_barany(c)?.holds()
    );
    println!(
        "  every pair surrounds 0       {}",
        check_pairwise(c)?.holds()
    );
    println!(
        "  ray condition                {}",
        check_ray_condition(c)?.holds()
    );
    match check_half_space_condition(c)?.counterexample() {
        None => println!("  half-space condition         true"),
        Some(cx) => println!(
            "  half-space condition         false (transversal {} missing {}, colour {})",
            cx.transversal.iter().join(" "),
            cx.missing,
            cx.colour
        ),
    }
    println!(
        "  line condition               {}",
        check_line_condition(c)?.holds()
    );
    let b = fixed_point_colours(c, &ColourSet::all(c))?;
    println!(
        "  fixed point of the colour map {{{}}}",
        b.0.iter().join(", ")
    );
    Ok(())
}

fn main() -> Result<()> {
    report("cluster", &gen_simplex_cluster(2, 3, &rational(1, 10), 1)?)?;
    let off = Point::from_integers(&[3, 0]);
    report(
        "shifted ball",
        &gen_random_ball(2, &[3, 3, 3], &off, &rational(2, 1), 2)?,
    )?;
    Ok(())
}
