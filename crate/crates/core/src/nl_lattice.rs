//! Rank-2 lattices of quartic K3 surfaces and Noether-Lefschetz degrees.
//!
//! A quasi-polarized lattice `L_{h,d}` has Gram matrix `[[4, d], [d, 2h-2]]`
//! in a basis `(H, K)`, discriminant `Δ = d² - 8h + 8` and coset `δ ≡ d mod 4`.
//! The divisor `D_{h,d}` of surfaces carrying a class `D` with `D² = 2h-2`,
//! `H·D = d` decomposes as `Σ μ(h,d|Δ',δ') P_{Δ',δ'}` over the lattices that
//! contain such a class. Degrees of the `D_{h,d}` on a pencil of quartics are
//! known coefficients of a modular form; inverting the (triangular)
//! decomposition gives the degrees of the `P_{Δ,δ}`.
//!
//! Cosets are canonicalized to `{0, 1, 2}`: replacing `K` by `-K + kH` maps
//! `δ` to `-δ`, so `δ = 3` is the same lattice as `δ = 1`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::cohomology::{build_resolution, curve_degree_genus};
use crate::error::{invariant, Error, Result};
use crate::pairs::{enumerate_classes, AdmissiblePair};

/// Coefficients of the Noether-Lefschetz modular form for quartics, keyed by
/// `Δ = 8 × exponent of q`. Every other `Δ` in `1..=20` has coefficient 0.
const NL_COEFFICIENTS: [(i64, i128); 5] = [(9, 320), (12, 5016), (16, 76950), (17, 136512), (20, 640224)];

/// Largest discriminant covered by the coefficient table.
pub const NL_TABLE_MAX_DELTA: i64 = 20;

pub fn delta_of(h: i64, d: i64) -> i64 {
    d * d - 8 * h + 8
}

pub fn canonical_coset(d: i64) -> u8 {
    match d.rem_euclid(4) {
        3 => 1,
        r => r as u8,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeInvariants {
    pub delta: i64,
    pub coset: u8,
}

impl LatticeInvariants {
    pub fn new(delta: i64, coset: u8) -> Result<Self> {
        if coset > 2 {
            return Err(Error::InvalidArgument(format!("coset {coset} is not canonical (expected 0, 1 or 2)")));
        }
        let c = i64::from(coset);
        if (delta - c * c).rem_euclid(8) != 0 {
            return Err(Error::InvalidArgument(format!("Δ = {delta} is not ≡ {coset}² mod 8")));
        }
        Ok(Self { delta, coset })
    }

    /// The invariants of `L_{h,d}`.
    pub fn of(h: i64, d: i64) -> Self {
        Self { delta: delta_of(h, d), coset: canonical_coset(d) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankTwoLattice {
    pub h: i64,
    pub d: i64,
}

impl RankTwoLattice {
    pub fn gram(&self) -> [[i64; 2]; 2] {
        [[4, self.d], [self.d, 2 * self.h - 2]]
    }

    pub fn discriminant(&self) -> i64 {
        let g = self.gram();
        -(g[0][0] * g[1][1] - g[0][1] * g[1][0])
    }
}

/// A lattice with the given invariants: `d = δ`, `h = (δ² - Δ)/8 + 1`.
pub fn representative(inv: LatticeInvariants) -> Result<RankTwoLattice> {
    let inv = LatticeInvariants::new(inv.delta, inv.coset)?;
    if inv.delta <= 0 {
        return Err(Error::InvalidArgument(format!("Δ = {} is not positive", inv.delta)));
    }
    let d = i64::from(inv.coset);
    let h = (d * d - inv.delta) / 8 + 1;
    let lat = RankTwoLattice { h, d };
    if delta_of(h, d) != inv.delta || lat.discriminant() != inv.delta {
        return Err(invariant(format!("representative {lat:?} does not have Δ = {}", inv.delta)));
    }
    Ok(lat)
}

fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&s| s >= 0 && s * s == n)
}

/// Number of classes `D = xH + yK` in the `(Δ', δ')` lattice with
/// `D² = 2h - 2` and `H·D = d`.
///
/// Completing the square gives `4 D² = (H·D)² - Δ' y²`, so `y² = Δ(h,d)/Δ'`
/// and `x = (d - δ' y) / 4` must be integral.
pub fn mu(h: i64, d: i64, inv: LatticeInvariants) -> Result<u32> {
    let delta = delta_of(h, d);
    if delta <= 0 {
        return Err(Error::InvalidArgument(format!("Δ({h},{d}) = {delta} is not positive")));
    }
    let rep = representative(inv)?;
    if delta % inv.delta != 0 {
        return Ok(0);
    }
    let Some(y) = exact_sqrt(delta / inv.delta) else {
        return Ok(0);
    };
    let g = rep.gram();
    let mut count = 0;
    for yy in [y, -y] {
        if (d - rep.d * yy).rem_euclid(4) != 0 {
            continue;
        }
        let x = (d - rep.d * yy) / 4;
        let hd = g[0][0] * x + g[0][1] * yy;
        let dd = g[0][0] * x * x + 2 * g[0][1] * x * yy + g[1][1] * yy * yy;
        if hd != d || dd != 2 * h - 2 {
            return Err(invariant(format!("class ({x},{yy}) in {rep:?} has H·D = {hd}, D² = {dd}")));
        }
        count += 1;
    }
    Ok(count)
}

/// `D_{h,d} = Σ μ P_{Δ',δ'}`, keyed by invariants, zero terms omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorExpansion {
    pub h: i64,
    pub d: i64,
    pub terms: BTreeMap<LatticeInvariants, u32>,
}

pub fn expand_divisor(h: i64, d: i64) -> Result<DivisorExpansion> {
    let delta = delta_of(h, d);
    if delta <= 0 {
        return Err(Error::InvalidArgument(format!("Δ({h},{d}) = {delta} is not positive")));
    }
    let mut terms = BTreeMap::new();
    for sub in 1..=delta {
        if delta % sub != 0 || exact_sqrt(delta / sub).is_none() {
            continue;
        }
        for coset in 0..=2u8 {
            let Ok(inv) = LatticeInvariants::new(sub, coset) else {
                continue;
            };
            let m = mu(h, d, inv)?;
            if m > 0 {
                terms.insert(inv, m);
            }
        }
    }
    let top = LatticeInvariants::of(h, d);
    if !terms.contains_key(&top) {
        return Err(invariant(format!("expansion of D_({h},{d}) is missing its own lattice {top:?}")));
    }
    Ok(DivisorExpansion { h, d, terms })
}

/// `NL_{h,d}`: the coefficient of `q^{Δ(h,d)/8}`.
pub fn nl_number(h: i64, d: i64) -> Result<i128> {
    let delta = delta_of(h, d);
    if delta <= 0 {
        return Err(Error::InvalidArgument(format!("Δ({h},{d}) = {delta} is not positive")));
    }
    if delta > NL_TABLE_MAX_DELTA {
        return Err(Error::OutOfTable(delta));
    }
    Ok(NL_COEFFICIENTS.iter().find(|(k, _)| *k == delta).map_or(0, |&(_, c)| c))
}

/// Degrees of the `P_{Δ,δ}` on a general pencil of quartics, memoized per
/// solver instance.
#[derive(Debug, Default)]
pub struct DegreeSolver {
    memo: HashMap<LatticeInvariants, i128>,
}

impl DegreeSolver {
    pub fn new() -> Self {
        Self::default()
    }

    /// `deg P(inv)`, solving `D_{witness}` for its top term. Lower terms are
    /// solved recursively using their representative lattices as witnesses.
    pub fn degree_p(&mut self, inv: LatticeInvariants, witness_h: i64, witness_d: i64) -> Result<i128> {
        if inv.delta <= 0 {
            return Ok(0);
        }
        if LatticeInvariants::of(witness_h, witness_d) != inv {
            return Err(Error::InvalidArgument(format!(
                "witness ({witness_h},{witness_d}) has invariants {:?}, not {inv:?}",
                LatticeInvariants::of(witness_h, witness_d)
            )));
        }
        let expansion = expand_divisor(witness_h, witness_d)?;
        let mut rest = nl_number(witness_h, witness_d)?;
        for (&term, &m) in &expansion.terms {
            if term == inv {
                continue;
            }
            rest -= i128::from(m) * self.degree_of(term)?;
        }
        let top = i128::from(expansion.terms[&inv]);
        if rest % top != 0 {
            return Err(invariant(format!("deg P{inv:?}: {rest} is not divisible by μ = {top}")));
        }
        let deg = rest / top;
        if deg < 0 {
            return Err(invariant(format!("deg P{inv:?} = {deg} < 0")));
        }
        Ok(deg)
    }

    /// `deg P(inv)` with the representative lattice as witness.
    pub fn degree_of(&mut self, inv: LatticeInvariants) -> Result<i128> {
        if inv.delta <= 0 {
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&inv) {
            return Ok(v);
        }
        let rep = representative(inv)?;
        let v = self.degree_p(inv, rep.h, rep.d)?;
        self.memo.insert(inv, v);
        Ok(v)
    }
}

/// [`DegreeSolver::degree_p`] with a fresh memo.
pub fn degree_p(inv: LatticeInvariants, witness_h: i64, witness_d: i64) -> Result<i128> {
    DegreeSolver::new().degree_p(inv, witness_h, witness_d)
}

/// The customary labelling `F1..F5` of the quartic determinantal divisors,
/// each given by one member of its transpose class (normalized to `a_1 = 5`).
pub const QUARTIC_LABELS: [(&str, &[i64], &[i64]); 5] = [
    ("F1", &[5, 5, 5, 5], &[6, 6, 6, 6]),
    ("F2", &[5, 6, 6], &[7, 7, 7]),
    ("F3", &[5, 5], &[7, 7]),
    ("F4", &[5, 5], &[6, 8]),
    ("F5", &[5, 6], &[7, 8]),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarticDivisor {
    pub label: String,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    #[serde(rename = "d_C")]
    pub curve_degree: i128,
    #[serde(rename = "g_C")]
    pub curve_genus: i128,
    pub delta: i64,
    pub coset: u8,
    pub degree: i128,
}

/// Invariants and degree of the divisor of quartics containing the curve
/// attached to `p`.
pub fn quartic_divisor(label: &str, p: &AdmissiblePair, solver: &mut DegreeSolver) -> Result<QuarticDivisor> {
    if p.degree() != 4 {
        return Err(Error::InvalidArgument(format!("{p} is not a quartic pair")));
    }
    let r = build_resolution(p)?;
    let (deg, genus) = curve_degree_genus(&r)?;
    let h = i64::try_from(genus).map_err(|_| Error::Overflow("curve genus"))?;
    let d = i64::try_from(deg).map_err(|_| Error::Overflow("curve degree"))?;
    let inv = LatticeInvariants::of(h, d);
    let q = p.shift_normalize(5);
    Ok(QuarticDivisor {
        label: label.to_string(),
        a: q.a().to_vec(),
        b: q.b().to_vec(),
        curve_degree: deg,
        curve_genus: genus,
        delta: inv.delta,
        coset: inv.coset,
        degree: solver.degree_p(inv, h, d)?,
    })
}

/// The five determinantal quartic divisors in their customary order.
///
/// Checks that the labelled pairs are exactly one member of each enumerated
/// degree-4 class before computing anything.
pub fn quartic_divisor_degrees() -> Result<Vec<QuarticDivisor>> {
    let classes = enumerate_classes(4)?;
    if classes.len() != QUARTIC_LABELS.len() {
        return Err(invariant(format!("expected 5 quartic classes, found {}", classes.len())));
    }
    let mut solver = DegreeSolver::new();
    let mut seen = vec![false; classes.len()];
    let mut out = Vec::with_capacity(5);
    for (label, a, b) in QUARTIC_LABELS {
        let p = AdmissiblePair::new(a.to_vec(), b.to_vec())?;
        let n = p.shift_normalize(0);
        let idx = classes
            .iter()
            .position(|c| c.members.contains(&n))
            .ok_or_else(|| invariant(format!("{label} = {p} is not an enumerated quartic class")))?;
        if std::mem::replace(&mut seen[idx], true) {
            return Err(invariant(format!("{label} repeats an earlier class")));
        }
        out.push(quartic_divisor(label, &p, &mut solver)?);
    }
    Ok(out)
}
