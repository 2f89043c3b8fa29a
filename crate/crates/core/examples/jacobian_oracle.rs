//! Recomputes dim det(a,b) as the rank of the differential of the determinant
//! map at a random point over F_p.

use detsurf::cohomology::dim_det;
use detsurf::ff_oracle::{jacobian_rank, DEFAULT_MODULUS};
use detsurf::pairs::enumerate_classes;

fn main() -> detsurf::Result<()> {
    for d in 3..=5 {
        for c in enumerate_classes(d)? {
            let p = &c.representative;
            let jr = jacobian_rank(p, DEFAULT_MODULUS, 42)?;
            let dim = dim_det(p)?;
            println!(
                "{p:<32} rank {:>3} of {:>3}x{:<3} -> dim {:>3} (formula {dim}){}",
                jr.rank,
                jr.target_dim,
                jr.source_dim,
                jr.dim(),
                if jr.dim() == dim { "" } else { "  MISMATCH" }
            );
        }
    }
    Ok(())
}
