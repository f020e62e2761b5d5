//! General-position witnesses and the largest linearly independent colourful
//! set.

use colourful::geometry::{is_general_position, max_independent_colourful, Point};
use colourful::{Configuration, Result};
use itertools::Itertools;

fn main() -> Result<()> {
    let p = |x: &[i64]| Point::from_integers(x);
    let flat = Configuration::new(
        3,
        vec![
            vec![p(&[1, 0, 0])],
            vec![p(&[0, 1, 0])],
            vec![p(&[-1, -1, 0])],
            vec![p(&[2, 3, 0])],
        ],
    )?;
    let (k, ids) = max_independent_colourful(&flat);
    println!(
        "planar points in R^3: rank {k} via {}, {:?}",
        ids.iter().join(" "),
        is_general_position(&flat)
    );
    let full = Configuration::new(
        3,
        vec![
            vec![p(&[1, 0, 0])],
            vec![p(&[0, 1, 0])],
            vec![p(&[0, 0, 1])],
            vec![p(&[-1, -1, -1])],
        ],
    )?;
    println!(
        "simplex vertices: rank {}, {:?}",
        max_independent_colourful(&full).0,
        is_general_position(&full)
    );
    Ok(())
}
