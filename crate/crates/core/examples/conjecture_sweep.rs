//! Checks that the extremal pairs bound the dimension of every family up to a
//! given degree.
//!
//!     cargo run --release --example conjecture_sweep -- 28

use std::time::Instant;

use detsurf::cohomology::{closed_form_check, verify_conjecture};

fn main() -> detsurf::Result<()> {
    let d_max: i64 = std::env::args().nth(1).map_or(16, |s| s.parse().expect("degree"));
    let start = Instant::now();
    let report = verify_conjecture(d_max)?;
    for c in report.cells.iter().filter(|c| c.t == 2 || c.t as i64 == c.d) {
        println!("d={:<3} t={:<3} {:>7} classes  dim in [{}, {}]", c.d, c.t, c.classes, c.min_dim, c.max_dim);
    }
    let bad = report.cells.iter().filter(|c| !c.passed()).count();
    println!("{} classes, {bad} failing cells, {:.2?}", report.total_classes(), start.elapsed());

    // the closed forms for the extremes need no enumeration
    let c = closed_form_check(100, 7)?;
    println!("d=100 t=7: max codim {} min dim {} ok={}", c.max_codim, c.min_dim, c.ok);
    Ok(())
}
