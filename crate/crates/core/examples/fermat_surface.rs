//! The Fermat surface is determinantal for every pair: builds the matrix and
//! prints its determinant.

use detsurf::ff_oracle::{default_fermat_modulus, fermat_matrix};
use detsurf::AdmissiblePair;

fn main() -> detsurf::Result<()> {
    let p = AdmissiblePair::new(vec![0, 0, 1], vec![2, 2, 3])?;
    let d = p.degree();
    let modulus = default_fermat_modulus(d as u32);
    let m = fermat_matrix(&p, modulus)?;
    println!("{p} over F_{modulus}:");
    for i in 0..m.size() {
        let row: Vec<String> = (0..m.size()).map(|j| format!("{}", m.entry(i, j))).collect();
        println!("  [ {} ]", row.join(" | "));
    }
    println!("det = {}", m.det()?);
    Ok(())
}
