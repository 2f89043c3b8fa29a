use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::field::PrimeField;
use super::matrix::DetMatrix;
use super::poly::{monomial_count, monomials};
use crate::error::{Error, Result};
use crate::pairs::AdmissiblePair;

/// Upper bound on `C(d+3, 3)`, the number of degree-`d` monomials.
pub const MAX_TARGET_DIM: usize = 10_000;

/// Consecutive seeds tried before giving up on a vanishing determinant.
pub const MAX_RESAMPLES: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobianRank {
    pub rank: usize,
    /// Seed of the sample actually used (the requested seed plus retries).
    pub seed_used: u64,
    /// Dimension of the space of entry perturbations.
    pub source_dim: usize,
    /// `C(d+3, 3)`.
    pub target_dim: usize,
}

impl JacobianRank {
    /// Projective dimension of the image, `rank - 1`.
    pub fn dim(&self) -> i128 {
        self.rank as i128 - 1
    }
}

/// Rank of a list of vectors over `F_p` by row reduction.
pub fn rank_mod_p(field: PrimeField, mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = field.sub(*x, field.mul(factor, pv));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of the differential of `det` at a random matrix of type `pair`.
///
/// A perturbation `E` of the entries maps to `Σ_{ij} cof_ij(S) E_ij`; the
/// image of the determinant map is the affine cone over `det(a, b)`, so for a
/// generic sample `rank - 1 = dim det(a, b)`. Samples with `det S = 0` are
/// skipped by moving to the next seed.
pub fn jacobian_rank(pair: &AdmissiblePair, modulus: u64, seed: u64) -> Result<JacobianRank> {
    if !pair.is_reduced() {
        return Err(Error::InvalidPair(format!("{pair} is not reduced")));
    }
    let field = PrimeField::new(modulus)?;
    let d = pair.degree() as u32;
    let target_dim = monomial_count(d);
    if target_dim > MAX_TARGET_DIM {
        return Err(Error::InvalidArgument(format!(
            "C(d+3,3) = {target_dim} exceeds the oracle bound {MAX_TARGET_DIM}"
        )));
    }
    let t = pair.len();
    for attempt in 0..MAX_RESAMPLES {
        let seed_used = seed.wrapping_add(u64::from(attempt));
        let mut rng = ChaCha8Rng::seed_from_u64(seed_used);
        let s = DetMatrix::random(pair, field, &mut rng)?;
        if s.det()?.is_zero() {
            continue;
        }
        let mut images = Vec::new();
        for i in 0..t {
            for j in 0..t {
                let cof = s.cofactor(i, j)?;
                for m in monomials(pair.entry_degree(i, j) as u32) {
                    images.push(cof.shifted_coeffs(m));
                }
            }
        }
        let source_dim = images.len();
        let rank = rank_mod_p(field, images);
        return Ok(JacobianRank { rank, seed_used, source_dim, target_dim });
    }
    Err(Error::DegenerateSample(MAX_RESAMPLES))
}
