//! Dense homogeneous polynomials in `x, y, z, w` over `F_p`.
//!
//! Monomials of a fixed degree `n` are indexed in lexicographic order with
//! `x > y > z > w`, so index 0 is `x^n` and the last index is `w^n`.

use std::fmt;

use super::field::PrimeField;
use crate::arith::binom;
use crate::error::{Error, Result};

/// Exponent vectors of degree `n`, in index order.
pub fn monomials(n: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::with_capacity(monomial_count(n));
    for e0 in (0..=n).rev() {
        for e1 in (0..=n - e0).rev() {
            for e2 in (0..=n - e0 - e1).rev() {
                out.push([e0, e1, e2, n - e0 - e1 - e2]);
            }
        }
    }
    out
}

pub(crate) fn monomial_count(n: u32) -> usize {
    binom(i64::from(n) + 3, 3) as usize
}

/// Position of `e` among the monomials of its degree.
pub fn monomial_index(e: [u32; 4]) -> usize {
    let n = (e[0] + e[1] + e[2] + e[3]) as usize;
    // monomials with a larger x-exponent: Σ_{k > e0} C(n - k + 2, 2)
    let m = n - e[0] as usize;
    let above_x: usize = (0..m).map(|r| (r + 1) * (r + 2) / 2).sum();
    // then, among total m in (y, z, w), those with a larger y-exponent
    let m2 = m - e[1] as usize;
    let above_y: usize = (0..m2).map(|r| r + 1).sum();
    above_x + above_y + (m2 - e[2] as usize)
}

#[derive(Clone, PartialEq, Eq)]
pub struct PrimeFieldPoly {
    field: PrimeField,
    degree: u32,
    coeffs: Vec<u64>,
}

impl PrimeFieldPoly {
    pub fn zero(field: PrimeField, degree: u32) -> Self {
        Self { field, degree, coeffs: vec![0; monomial_count(degree)] }
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self { field, degree: 0, coeffs: vec![c % field.modulus()] }
    }

    pub fn from_coeffs(field: PrimeField, degree: u32, coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.len() != monomial_count(degree) {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} needs {} coefficients, got {}",
                monomial_count(degree),
                coeffs.len()
            )));
        }
        let p = field.modulus();
        Ok(Self { field, degree, coeffs: coeffs.into_iter().map(|c| c % p).collect() })
    }

    /// Builds a polynomial from `(coefficient, exponents)` terms.
    pub fn from_terms(field: PrimeField, degree: u32, terms: &[(i64, [u32; 4])]) -> Result<Self> {
        let mut f = Self::zero(field, degree);
        for &(c, e) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::DegreeMismatch(e.iter().sum(), degree));
            }
            let i = monomial_index(e);
            f.coeffs[i] = field.add(f.coeffs[i], field.reduce(c));
        }
        Ok(f)
    }

    /// The variable `x_i` (`0 = x`, ..., `3 = w`).
    pub fn var(field: PrimeField, i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::from_terms(field, 1, &[(1, e)]).expect("degree-1 monomial")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: [u32; 4]) -> u64 {
        if e.iter().sum::<u32>() != self.degree {
            return 0;
        }
        self.coeffs[monomial_index(e)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch(self.modulus(), other.modulus()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let f = self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Self { field: f, degree: self.degree, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self { field: f, degree: self.degree, coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect() }
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let c = c % f.modulus();
        Self { field: f, degree: self.degree, coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut out = Self::zero(f, self.degree + other.degree);
        let (left, right) = (monomials(self.degree), monomials(other.degree));
        for (ea, &ca) in left.iter().zip(&self.coeffs) {
            if ca == 0 {
                continue;
            }
            for (eb, &cb) in right.iter().zip(&other.coeffs) {
                if cb == 0 {
                    continue;
                }
                let i = monomial_index([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]]);
                out.coeffs[i] = f.add(out.coeffs[i], f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// `self · m` for a monomial `m`, written into a coefficient vector of the
    /// product degree.
    pub(crate) fn shifted_coeffs(&self, m: [u32; 4]) -> Vec<u64> {
        let n = self.degree + m.iter().sum::<u32>();
        let mut out = vec![0; monomial_count(n)];
        for (e, &c) in monomials(self.degree).iter().zip(&self.coeffs) {
            if c != 0 {
                out[monomial_index([e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3]])] = c;
            }
        }
        out
    }
}

impl fmt::Debug for PrimeFieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (deg {}, mod {})", self.degree, self.modulus())
    }
}

impl fmt::Display for PrimeFieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 4] = ["x", "y", "z", "w"];
        let mut terms = Vec::new();
        for (e, &c) in monomials(self.degree).iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let mono: Vec<String> = e
                .iter()
                .zip(VARS)
                .filter(|(k, _)| **k > 0)
                .map(|(&k, v)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            terms.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono.join("*"),
                _ => format!("{c}*{}", mono.join("*")),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
