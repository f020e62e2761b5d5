//! A configuration with the origin on a line through two points: the planar
//! search rejects it, and the robust solver answers through a perturbation.

use colourful::geometry::{is_general_position, Point};
use colourful::planar::find_triangle_2d;
use colourful::solver::solve_robust;
use colourful::{Configuration, Result, SolveResult};
use itertools::Itertools;

fn main() -> Result<()> {
    let p = |x, y| Point::from_integers(&[x, y]);
    let c = Configuration::new(
        2,
        vec![
            vec![p(1, 0), p(2, 2)],
            vec![p(-2, 0)],
            vec![p(0, -1), p(-1, 3)],
        ],
    )?;
    println!("general position: {:?}", is_general_position(&c));
    println!("planar search: {:?}", find_triangle_2d(&c).err());
    let (result, route) = solve_robust(&c, 0)?;
    match &result {
        SolveResult::Simplex(s) => println!(
            "robust solver via {route:?}: {}",
            s.members.iter().join(" ")
        ),
        other => println!("robust solver via {route:?}: {other:?}"),
    }
    println!("verified on the original points: {}", result.verify(&c));
    Ok(())
}
