//! Degrees of the five determinantal divisors in the moduli of quartic surfaces,
//! with the lattice bookkeeping behind F3.

use detsurf::nl_lattice::{expand_divisor, nl_number, quartic_divisor_degrees};

fn main() -> detsurf::Result<()> {
    for q in quartic_divisor_degrees()? {
        println!(
            "{}  a={:?} b={:?}  C: degree {} genus {}  disc {} coset {}  degree {}",
            q.label, q.a, q.b, q.curve_degree, q.curve_genus, q.delta, q.coset, q.degree
        );
    }

    let e = expand_divisor(31, 16)?;
    println!("\nD(31,16) = NL {}:", nl_number(31, 16)?);
    for (inv, m) in &e.terms {
        println!("  {m} x P(disc {}, coset {})", inv.delta, inv.coset);
    }
    Ok(())
}
