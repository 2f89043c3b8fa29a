use std::collections::HashMap;

use rand::Rng;

use super::field::PrimeField;
use super::poly::{monomial_count, PrimeFieldPoly};
use crate::error::{invariant, Error, Result};
use crate::pairs::AdmissiblePair;

/// Largest matrix size accepted by [`det_grid`].
pub const MAX_DET_SIZE: usize = 8;

/// Determinant of a square grid of homogeneous forms.
///
/// Laplace expansion along rows, memoized over column subsets: the minor on
/// the last `s` rows and column set `S` is computed once per `S`.
pub fn det_grid(entries: &[Vec<PrimeFieldPoly>]) -> Result<PrimeFieldPoly> {
    let t = entries.len();
    if t == 0 || t > MAX_DET_SIZE {
        return Err(Error::InvalidArgument(format!("matrix size {t} outside 1..={MAX_DET_SIZE}")));
    }
    if entries.iter().any(|row| row.len() != t) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    let field = entries[0][0].field();
    let mut minors: HashMap<u32, PrimeFieldPoly> = HashMap::new();
    minors.insert(0, PrimeFieldPoly::constant(field, 1));
    for size in 1..=t {
        let row = t - size;
        for mask in (0u32..1 << t).filter(|m| m.count_ones() as usize == size) {
            let mut acc: Option<PrimeFieldPoly> = None;
            for (pos, j) in (0..t).filter(|j| mask & (1 << j) != 0).enumerate() {
                let term = entries[row][j].mul(&minors[&(mask & !(1 << j))])?;
                let term = if pos % 2 == 1 { term.neg() } else { term };
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            minors.insert(mask, acc.expect("nonempty mask"));
        }
        // only the sizes just computed are needed next round
        minors.retain(|m, _| m.count_ones() as usize >= size);
    }
    Ok(minors.remove(&((1u32 << t) - 1)).expect("full minor"))
}

/// A `t x t` matrix of forms whose `(i, j)` entry has degree `b_j - a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetMatrix {
    pair: AdmissiblePair,
    entries: Vec<Vec<PrimeFieldPoly>>,
}

impl DetMatrix {
    pub fn new(pair: &AdmissiblePair, entries: Vec<Vec<PrimeFieldPoly>>) -> Result<Self> {
        if !pair.is_reduced() {
            return Err(Error::InvalidPair(format!("{pair} is not reduced")));
        }
        let t = pair.len();
        if t > MAX_DET_SIZE {
            return Err(Error::InvalidArgument(format!("matrix size {t} exceeds {MAX_DET_SIZE}")));
        }
        if entries.len() != t || entries.iter().any(|r| r.len() != t) {
            return Err(Error::InvalidArgument(format!("expected a {t}x{t} grid")));
        }
        let p = entries[0][0].modulus();
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.modulus() != p {
                    return Err(Error::ModulusMismatch(p, e.modulus()));
                }
                let want = pair.entry_degree(i, j) as u32;
                if e.degree() != want {
                    return Err(Error::DegreeMismatch(e.degree(), want));
                }
            }
        }
        Ok(Self { pair: pair.shift_normalize(0), entries })
    }

    /// Entries with independent uniform coefficients.
    pub fn random<R: Rng + ?Sized>(pair: &AdmissiblePair, field: PrimeField, rng: &mut R) -> Result<Self> {
        let t = pair.len();
        let p = field.modulus();
        let entries = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| {
                        let deg = pair.entry_degree(i, j).max(0) as u32;
                        let c = (0..monomial_count(deg)).map(|_| rng.gen_range(0..p)).collect();
                        PrimeFieldPoly::from_coeffs(field, deg, c)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pair, entries)
    }

    pub fn pair(&self) -> &AdmissiblePair {
        &self.pair
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &PrimeFieldPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<PrimeFieldPoly>] {
        &self.entries
    }

    pub fn det(&self) -> Result<PrimeFieldPoly> {
        det_grid(&self.entries)
    }

    /// Signed cofactor `(-1)^{i+j} det(S without row i, column j)`.
    pub fn cofactor(&self, i: usize, j: usize) -> Result<PrimeFieldPoly> {
        let t = self.size();
        let field = self.entries[0][0].field();
        if t == 1 {
            return Ok(PrimeFieldPoly::constant(field, 1));
        }
        let minor: Vec<Vec<PrimeFieldPoly>> = (0..t)
            .filter(|&r| r != i)
            .map(|r| (0..t).filter(|&c| c != j).map(|c| self.entries[r][c].clone()).collect())
            .collect();
        let m = det_grid(&minor)?;
        Ok(if (i + j) % 2 == 1 { m.neg() } else { m })
    }

    /// Multiplies row `i` by `c`.
    pub fn scale_row(&mut self, i: usize, c: u64) {
        for e in &mut self.entries[i] {
            *e = e.scale(c);
        }
    }
}

/// `x^d + y^d + z^d + w^d`.
pub fn fermat_polynomial(field: PrimeField, d: u32) -> PrimeFieldPoly {
    PrimeFieldPoly::from_terms(field, d, &[(1, [d, 0, 0, 0]), (1, [0, d, 0, 0]), (1, [0, 0, d, 0]), (1, [0, 0, 0, d])])
        .expect("degree-d monomials")
}

/// Product of the linear forms `u - r v` over the roots `r` of `r^d = -1`,
/// grouped into consecutive factors of the requested degrees.
fn split_sum_of_powers(field: PrimeField, d: u32, u: usize, v: usize, degrees: &[u32]) -> Result<Vec<PrimeFieldPoly>> {
    let zeta = field.element_of_order(2 * u64::from(d)).ok_or_else(|| {
        Error::InvalidArgument(format!("F_{} has no primitive {}-th root of unity", field.modulus(), 2 * d))
    })?;
    let mut roots = (0..d).map(|k| field.pow(zeta, 2 * u64::from(k) + 1));
    let (pu, pv) = (PrimeFieldPoly::var(field, u), PrimeFieldPoly::var(field, v));
    degrees
        .iter()
        .map(|&deg| {
            let mut acc = PrimeFieldPoly::constant(field, 1);
            for _ in 0..deg {
                let r = roots.next().ok_or_else(|| invariant("entry degrees exceed d"))?;
                acc = acc.mul(&pu.sub(&pv.scale(r))?)?;
            }
            Ok(acc)
        })
        .collect()
}

/// The Fermat matrix of type `(a, b)`: `f_i` on the diagonal, `g_i` below
/// it and `g_t` in the top-right corner, with `Π f_i = x^d + y^d` and
/// `(-1)^{t-1} Π g_i = z^d + w^d`, so that `det = x^d + y^d + z^d + w^d`.
pub fn fermat_matrix(pair: &AdmissiblePair, modulus: u64) -> Result<DetMatrix> {
    if !pair.is_reduced() {
        return Err(Error::InvalidPair(format!("{pair} is not reduced")));
    }
    let field = PrimeField::new(modulus)?;
    let d = pair.degree();
    let two_d = 2 * d as u64;
    if !(modulus - 1).is_multiple_of(two_d) {
        return Err(Error::InvalidArgument(format!("modulus {modulus} is not ≡ 1 mod {two_d}")));
    }
    let t = pair.len();
    let f_deg: Vec<u32> = (0..t).map(|i| pair.entry_degree(i, i) as u32).collect();
    let g_deg: Vec<u32> = (0..t)
        .map(|i| if i + 1 < t { pair.entry_degree(i + 1, i) } else { pair.entry_degree(0, t - 1) } as u32)
        .collect();
    if f_deg.iter().sum::<u32>() != d as u32 || g_deg.iter().sum::<u32>() != d as u32 {
        return Err(invariant(format!("{pair}: diagonal degrees do not sum to d")));
    }
    let f = split_sum_of_powers(field, d as u32, 0, 1, &f_deg)?;
    let mut g = split_sum_of_powers(field, d as u32, 2, 3, &g_deg)?;
    if t.is_multiple_of(2) {
        g[t - 1] = g[t - 1].neg();
    }
    let mut entries: Vec<Vec<PrimeFieldPoly>> =
        (0..t).map(|i| (0..t).map(|j| PrimeFieldPoly::zero(field, pair.entry_degree(i, j) as u32)).collect()).collect();
    for i in 0..t {
        entries[i][i] = f[i].clone();
        if i + 1 < t {
            entries[i + 1][i] = g[i].clone();
        }
    }
    entries[0][t - 1] = g[t - 1].clone();
    DetMatrix::new(pair, entries)
}

/// Whether the Fermat matrix of `pair` has determinant exactly
/// `x^d + y^d + z^d + w^d`.
pub fn fermat_check(pair: &AdmissiblePair, modulus: u64) -> Result<bool> {
    let m = fermat_matrix(pair, modulus)?;
    let field = PrimeField::new(modulus)?;
    Ok(m.det()? == fermat_polynomial(field, pair.degree() as u32))
}
