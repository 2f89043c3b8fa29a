//! Lists the families det(a, b) of a given degree, with their transposes.
//!
//!     cargo run --example enumerate_pairs -- 6

use detsurf::pairs::{enumerate_classes, enumerate_classes_with, EnumerationOptions};

fn main() -> detsurf::Result<()> {
    let d: i64 = std::env::args().nth(1).map_or(6, |s| s.parse().expect("degree"));
    let classes = enumerate_classes(d)?;
    for c in &classes {
        let tag = if c.is_self_dual() { "self-dual" } else { "" };
        let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
        println!("t={}  {}  {tag}", c.len(), members.join("  ~  "));
    }

    let all = EnumerationOptions { include_unreduced: false, transpose_dedup: false };
    let pairs = enumerate_classes_with(d, all)?.len();
    println!("degree {d}: {} classes, {pairs} normalized pairs", classes.len());
    Ok(())
}
