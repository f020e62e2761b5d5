//! Builds the octahedral complex of two transversals and decides covering by
//! ray crossing parity.

use colourful::gen::direction_chain;
use colourful::geometry::{Point, Transversal};
use colourful::pivot::{build_octahedron_complex, ray_crossing_parity};
use colourful::Result;

fn main() -> Result<()> {
    let p = |x, y| Point::from_integers(&[x, y]);
    // Missing colour 1; each transversal takes a point from colours 0 and 2.
    let t = Transversal::new(1, vec![(0, p(3, 1)), (2, p(5, 3))])?;
    let u = Transversal::new(1, vec![(0, p(1, -2)), (2, p(-2, 1))])?;
    let m = build_octahedron_complex(&t, &u)?;
    println!(
        "{} cells, ridge counts {:?}",
        m.cells.len(),
        m.ridge_counts().values().collect::<Vec<_>>()
    );
    for attempt in 0..5 {
        let dir = direction_chain(2, 9, attempt);
        let x = ray_crossing_parity(&m, &dir)?;
        println!("direction {dir}: {} crossings, covers {}", x.count, x.odd);
    }
    Ok(())
}
