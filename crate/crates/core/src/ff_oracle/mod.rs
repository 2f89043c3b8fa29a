//! Finite-field cross-check of the dimension formula.
//!
//! Matrices of forms are sampled over `F_p`, their determinants expanded
//! exactly, and the rank of the differential of `S ↦ det S` measured. That
//! rank minus one is the projective dimension of `det(a, b)` for a generic
//! sample, independently of any curve or cohomology computation.

mod field;
mod jacobian;
mod matrix;
mod poly;

pub use field::{default_fermat_modulus, is_prime, PrimeField, DEFAULT_MODULUS};
pub use jacobian::{jacobian_rank, rank_mod_p, JacobianRank, MAX_RESAMPLES, MAX_TARGET_DIM};
pub use matrix::{det_grid, fermat_check, fermat_matrix, fermat_polynomial, DetMatrix, MAX_DET_SIZE};
pub use poly::{monomial_index, monomials, PrimeFieldPoly};
