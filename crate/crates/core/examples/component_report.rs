//! Full numerical report for one family, e.g. the surfaces containing a line.
//!
//!     cargo run --example component_report -- "0 0" "1 4"

use detsurf::cohomology::{build_resolution, component_report, curve_h0_h1};
use detsurf::AdmissiblePair;

fn parse(s: &str) -> Vec<i64> {
    s.split_whitespace().map(|x| x.parse().expect("integer")).collect()
}

fn main() -> detsurf::Result<()> {
    let mut args = std::env::args().skip(1);
    let a = args.next().map_or(vec![0, 0], |s| parse(&s));
    let b = args.next().map_or(vec![1, 4], |s| parse(&s));
    let p = AdmissiblePair::new(a, b)?;

    let r = component_report(&p)?;
    println!("{p}  (degree {}, {}x{} matrix)", r.d, r.t, r.t);
    println!("curve: degree {}, genus {}", r.curve.degree, r.curve.genus);
    println!("hilbert scheme dimension {}", r.hilbert_dim);
    println!("h0(O_X(C)) = {}", r.h0_oxc);
    println!("dim {} in P^{}, codim {}", r.dim_det, r.dim_det + r.codim, r.codim);
    println!("kappa = {}, h1(N_C) = {}", r.curve.kappa, r.curve.h1_normal);
    println!("component is {}", r.classification.as_str());

    let res = build_resolution(&p)?;
    println!("A = {:?}, B = {:?}", res.a_twists.twists(), res.b_twists.twists());
    for k in r.d - 2..=res.b_twists.largest() {
        let (h0, h1) = curve_h0_h1(&res, k)?;
        println!("  h0(O_C({k})) = {h0:<6} h1 = {h1}");
    }
    Ok(())
}
