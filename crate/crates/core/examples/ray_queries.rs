//! Exact hull membership, ray and line queries.

use colourful::geometry::Point;
use colourful::linprog::{line_meets_hull, point_in_hull, ray_hull_sup, RayOutcome};
use colourful::Result;
use itertools::Itertools;

fn main() -> Result<()> {
    let p = |x, y| Point::from_integers(&[x, y]);
    let square = vec![p(1, 1), p(3, 1), p(3, 3), p(1, 3)];
    let cert = point_in_hull(&square, &p(2, 2))?.expect("centre is inside");
    println!(
        "(2,2) has square weights {}",
        cert.coefficients.iter().join(", ")
    );
    println!(
        "origin inside: {}",
        point_in_hull(&square, &p(0, 0))?.is_some()
    );
    for x in [p(4, 4), p(-1, -1), p(4, -4)] {
        match ray_hull_sup(&square, &x)? {
            RayOutcome::Empty => println!("ray from {x} misses"),
            RayOutcome::Max { t, .. } => println!("ray from {x} reaches t = {t}"),
        }
        println!(
            "  line through {x} meets: {}",
            line_meets_hull(&square, &x)?
        );
    }
    Ok(())
}
