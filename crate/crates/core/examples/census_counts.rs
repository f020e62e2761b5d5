//! Counts every colourful simplex containing the origin and compares with
//! the lower bounds.

use colourful::census::{
    check_atleast, check_atleast2, enumerate_containing, find_covering_octahedron,
};
use colourful::gen::gen_random_barany;
use colourful::Result;

fn main() -> Result<()> {
    let bound = 1 << 20;
    for seed in 0..4 {
        let c = gen_random_barany(2, 4, seed)?;
        let all = enumerate_containing(&c, bound)?;
        let single = check_atleast(&c, bound)?;
        let covering = find_covering_octahedron(&c, bound)?.is_some();
        let pair = check_atleast2(&c, bound)?;
        println!(
            "seed {seed}: {} simplices, min colour size {} ({}), covering pair {covering}, pair floor {} ({})",
            all.len(),
            single.floor,
            single.holds,
            pair.floor,
            pair.holds
        );
    }
    Ok(())
}
