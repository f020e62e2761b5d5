//! Follows the pivot path of a doubled configuration from one colourful
//! simplex to a second one.

use colourful::census::enumerate_containing;
use colourful::gen::gen_doubled;
use colourful::pivot::second_simplex;
use colourful::Result;
use itertools::Itertools;

fn main() -> Result<()> {
    let doubled = gen_doubled(3, 7)?;
    let all = enumerate_containing(doubled.config(), 1 << 20)?;
    println!("{} colourful simplices contain the origin", all.len());
    let path = second_simplex(&doubled, &all[0].members)?;
    for node in &path.nodes {
        println!("  {:?} {}", node.class, node.members.iter().join(" "));
    }
    println!(
        "start {} -> end {}",
        all[0].members.iter().join(" "),
        path.endpoint.members.iter().join(" ")
    );
    Ok(())
}
