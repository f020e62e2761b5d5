//! Planar search: orientation digraph, shortest circuit, triangle.

use colourful::gen::gen_random_barany;
use colourful::planar::{build_digraph, crossing_counts, find_triangle_2d, shortest_circuit};
use colourful::Result;
use itertools::Itertools;

fn main() -> Result<()> {
    let c = gen_random_barany(2, 4, 5)?;
    let g = build_digraph(&c)?;
    println!("{} nodes, {} arcs", g.len(), g.arcs().count());
    let circuit = shortest_circuit(&g)?;
    let ids: Vec<_> = circuit.iter().map(|&n| g.nodes[n].0).collect();
    println!("shortest circuit {}", ids.iter().join(" -> "));
    let w = g.point(circuit[0]).neg();
    let (plus, minus) = crossing_counts(&g, &circuit, &w)?;
    println!("crossings of the ray through {w}: {plus} right-to-left, {minus} left-to-right");
    let t = find_triangle_2d(&c)?;
    println!(
        "triangle {}, verified {}",
        t.members.iter().join(" "),
        t.verify(&c)
    );
    Ok(())
}
