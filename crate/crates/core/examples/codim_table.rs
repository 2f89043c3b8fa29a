//! Codimensions of the determinantal components, in `k:r` notation.
//!
//!     cargo run --release --example codim_table -- 12

use detsurf::cohomology::component_table;

fn main() -> detsurf::Result<()> {
    let d_max: i64 = std::env::args().nth(1).map_or(9, |s| s.parse().expect("degree"));
    for d in 3..=d_max {
        let row = component_table(d)?;
        println!("{d:>3}  {:>5}  {}", row.count, row.notation());
    }
    Ok(())
}
