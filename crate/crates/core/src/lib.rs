//! Families of determinantal surfaces in projective 3-space.
//!
//! A surface `det S = 0`, where `S` is a `t x t` matrix of forms with entry
//! degrees `b_j - a_i`, belongs to the family `det(a, b)`. This crate
//! enumerates those families for a given degree, computes their dimensions
//! and codimensions in `|O(d)|` from the free resolution of an auxiliary ACM
//! curve, classifies the resulting Noether-Lefschetz components, computes the
//! degrees of the five quartic divisors from rank-2 lattice data, and checks
//! the dimension formula independently with a Jacobian rank over `F_p`.
//!
//! Module map:
//! - [`arith`]: binomials, `h^0(O(m))`, hom dimensions between twist sums.
//! - [`pairs`]: admissible pairs and their enumeration up to shift/transpose.
//! - [`cohomology`]: curve invariants, dimensions, tables and sweeps.
//! - [`nl_lattice`]: K3 lattice arithmetic and quartic divisor degrees.
//! - [`ff_oracle`]: polynomials over `F_p`, determinants, Jacobian ranks.
//! - [`cli`]: the `detsurf` command-line front end.

pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod ff_oracle;
pub mod nl_lattice;
pub mod pairs;

pub use error::{Error, Result};
pub use pairs::AdmissiblePair;
