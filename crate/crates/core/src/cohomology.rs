//! Numerical invariants of a family `det(a, b)`.
//!
//! A general surface of type `(a, b)` (normalized so that `a_1 > d`) contains
//! an ACM curve `C` whose ideal sheaf is resolved by
//! `0 -> B -> A -> I_C -> 0` with `A = O(-d) ⊕ ⊕O(-a_i)` and `B = ⊕O(-b_j)`.
//! Everything here is read off that resolution: the degree and genus of `C`,
//! the dimension of its Hilbert scheme, `h^0(O_X(C))`, and from those the
//! dimension and codimension of `det(a, b)` inside `|O(d)|`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{binom, h0_twist, hom_dim, TwistSum};
use crate::error::{invariant, Error, Result};
use crate::pairs::{classes_of_length, enumerate_classes, AdmissiblePair, EnumerationOptions, MAX_DEGREE};

/// The resolution `0 -> B -> A -> I_C -> 0` attached to a reduced pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub degree: i64,
    /// `{d} ∪ a`, with `a` shifted so that `a_1 = d + 1`.
    pub a_twists: TwistSum,
    pub b_twists: TwistSum,
}

pub fn build_resolution(p: &AdmissiblePair) -> Result<Resolution> {
    if !p.is_reduced() {
        return Err(Error::InvalidPair(format!("{p} is not reduced (b_1 <= a_t)")));
    }
    let d = p.degree();
    if d > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!("degree {d} exceeds {MAX_DEGREE}")));
    }
    let q = p.shift_normalize(d + 1);
    let mut a = vec![d];
    a.extend_from_slice(q.a());
    Ok(Resolution { degree: d, a_twists: TwistSum::new(a)?, b_twists: TwistSum::new(q.b().to_vec())? })
}

/// Degree and arithmetic genus of the curve, from the power sums of the twists.
pub fn curve_degree_genus(r: &Resolution) -> Result<(i128, i128)> {
    let (a, b) = (&r.a_twists, &r.b_twists);
    if a.sum() != b.sum() {
        return Err(invariant(format!("twist sums differ: ΣA = {}, ΣB = {}", a.sum(), b.sum())));
    }
    let twice_deg = b.power_sum(2) - a.power_sum(2);
    if twice_deg % 2 != 0 {
        return Err(invariant("Σb² - Σa² is odd"));
    }
    let deg = twice_deg / 2;
    let six_g = b.power_sum(3) - a.power_sum(3);
    if six_g % 6 != 0 {
        return Err(invariant("Σb³ - Σa³ is not divisible by 6"));
    }
    let genus = 1 + six_g / 6 - 2 * deg;
    if deg < 1 {
        return Err(invariant(format!("curve degree {deg} < 1")));
    }
    Ok((deg, genus))
}

/// Dimension of the family of ACM curves with this resolution.
pub fn hilbert_dim(r: &Resolution) -> i128 {
    let (a, b) = (&r.a_twists, &r.b_twists);
    hom_dim(b, a) + hom_dim(a, b) - hom_dim(a, a) - hom_dim(b, b) + 1
}

/// `h^0(I_C(k))`.
pub fn ideal_h0(r: &Resolution, k: i64) -> Result<i128> {
    let from_a: i128 = r.a_twists.twists().iter().map(|&m| h0_twist(k - m)).sum();
    let from_b: i128 = r.b_twists.twists().iter().map(|&m| h0_twist(k - m)).sum();
    let v = from_a - from_b;
    if v < 0 {
        return Err(invariant(format!("h0(I_C({k})) = {v} < 0")));
    }
    Ok(v)
}

/// `(h^0(O_C(k)), h^1(O_C(k)))`, using `h^1(I_C(k)) = 0` and Riemann-Roch.
pub fn curve_h0_h1(r: &Resolution, k: i64) -> Result<(i128, i128)> {
    let (deg, genus) = curve_degree_genus(r)?;
    let h0 = h0_twist(k) - ideal_h0(r, k)?;
    let chi = i128::from(k) * deg + 1 - genus;
    let h1 = h0 - chi;
    if h0 < 0 || h1 < 0 {
        return Err(invariant(format!("negative cohomology of O_C({k}): h0 = {h0}, h1 = {h1}")));
    }
    Ok((h0, h1))
}

/// `h^0(X, O_X(C)) = C(d-1, 3) + g_C - (d - 4) d_C`.
pub fn h0_oxc(r: &Resolution) -> Result<i128> {
    let (deg, genus) = curve_degree_genus(r)?;
    let d = r.degree;
    let v = binom(d - 1, 3) + genus - i128::from(d - 4) * deg;
    if v < 1 {
        return Err(invariant(format!("h0(O_X(C)) = {v} < 1")));
    }
    Ok(v)
}

/// Dimension of `det(a, b)` as a subvariety of `|O(d)|`.
///
/// Evaluates the closed formula and cross-checks it against
/// `dim H_{a,b} - dim |O_X(C)|`.
pub fn dim_det(p: &AdmissiblePair) -> Result<i128> {
    let r = build_resolution(p)?;
    dim_det_of(&r)
}

fn dim_det_of(r: &Resolution) -> Result<i128> {
    let (deg, genus) = curve_degree_genus(r)?;
    let d = r.degree;
    let (a, b) = (&r.a_twists, &r.b_twists);
    let dim = 2 + hom_dim(b, a) - hom_dim(a, a) - hom_dim(b, b) - binom(d - 1, 3) - genus + i128::from(d - 4) * deg;
    let via_fibers = hilbert_dim(r) - (h0_oxc(r)? - 1);
    if dim != via_fibers {
        return Err(invariant(format!("dimension formula gives {dim} but dim H - dim |O_X(C)| gives {via_fibers}")));
    }
    Ok(dim)
}

/// `dim |O(d)| = C(d+3, 3) - 1`.
pub fn ambient_dim(d: i64) -> i128 {
    binom(d + 3, 3) - 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Codimension `C(d-1, 3)`.
    General,
    /// Strictly between the bounds.
    Special,
    /// Codimension 0: the family fills `|O(d)|`.
    WholeSpace,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::General => "general",
            Classification::Special => "special",
            Classification::WholeSpace => "whole_space",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveInvariants {
    #[serde(rename = "d_C")]
    pub degree: i128,
    #[serde(rename = "g_C")]
    pub genus: i128,
    /// `h^1(O_C(d))`.
    #[serde(rename = "h1_OC_d")]
    pub h1_od: i128,
    pub kappa: i128,
    /// `h^1(N_C)`, only known as `kappa + h^1(O_C(d))`.
    pub h1_normal: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub pair: AdmissiblePair,
    pub d: i64,
    pub t: usize,
    pub curve: CurveInvariants,
    pub hilbert_dim: i128,
    pub dim_det: i128,
    pub codim: i128,
    #[serde(rename = "h0_OXC")]
    pub h0_oxc: i128,
    pub classification: Classification,
}

pub fn component_report(p: &AdmissiblePair) -> Result<ComponentReport> {
    let r = build_resolution(p)?;
    let d = r.degree;
    let (deg, genus) = curve_degree_genus(&r)?;
    let dim = dim_det_of(&r)?;
    let codim = ambient_dim(d) - dim;
    let max_codim = binom(d - 1, 3);
    let kappa = max_codim - codim;
    if kappa < 0 {
        return Err(invariant(format!("{p}: kappa = {kappa} < 0")));
    }
    if codim < i128::from(d - 3) || codim > max_codim {
        return Err(invariant(format!("{p}: codimension {codim} outside [{}, {max_codim}]", d - 3)));
    }
    let (_, h1_od) = curve_h0_h1(&r, d)?;
    let classification = if codim == 0 {
        Classification::WholeSpace
    } else if codim == max_codim {
        Classification::General
    } else {
        Classification::Special
    };
    Ok(ComponentReport {
        pair: p.shift_normalize(0),
        d,
        t: p.len(),
        curve: CurveInvariants { degree: deg, genus, h1_od, kappa, h1_normal: kappa + h1_od },
        hilbert_dim: hilbert_dim(&r),
        dim_det: dim,
        codim,
        h0_oxc: h0_oxc(&r)?,
        classification,
    })
}

fn check_length(d: i64, t: usize) -> Result<()> {
    if !(2..=MAX_DEGREE).contains(&d) || t < 2 || t as i64 > d {
        return Err(Error::InvalidArgument(format!("need 2 <= t <= d, got d = {d}, t = {t}")));
    }
    Ok(())
}

/// `(min, max)` extremal pairs of degree `d` and length `t`.
///
/// max: `a = (0, d-t, ..., d-t)`, `b = (d-t+1, ...)`.
/// min: `a = 0`, `b` made of `k`'s then `k+1`'s where `d = tk + r`.
pub fn extremal_pairs(d: i64, t: usize) -> Result<(AdmissiblePair, AdmissiblePair)> {
    check_length(d, t)?;
    let ti = t as i64;
    let (k, r) = (d / ti, (d % ti) as usize);
    let min_b: Vec<i64> = (0..t).map(|j| if j < t - r { k } else { k + 1 }).collect();
    let min = AdmissiblePair::new(vec![0; t], min_b)?;
    let mut max_a = vec![d - ti; t];
    max_a[0] = 0;
    let max = AdmissiblePair::new(max_a, vec![d - ti + 1; t])?;
    Ok((min, max))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    pub d: i64,
    pub t: usize,
    pub max_codim: i128,
    pub max_codim_formula: i128,
    pub min_dim: i128,
    pub min_dim_formula: i128,
    pub ok: bool,
}

/// Compares the extremal pairs' dimensions with their closed forms.
pub fn closed_form_check(d: i64, t: usize) -> Result<ClosedFormCheck> {
    let (min, max) = extremal_pairs(d, t)?;
    let max_codim = ambient_dim(d) - dim_det(&max)?;
    let (di, ti) = (i128::from(d), t as i128);
    let max_codim_formula = if (t as i64) < d {
        let num = ti * (ti - 1) * (3 * di - 2 * ti - 5);
        if num % 6 != 0 {
            return Err(invariant(format!("t(t-1)(3d-2t-5) not divisible by 6 at d={d}, t={t}")));
        }
        num / 6
    } else {
        binom(d - 1, 3)
    };
    let (k, r) = (d / t as i64, i128::from(d % t as i64));
    let min_dim = dim_det(&min)?;
    let min_dim_formula = binom(k - 1, 3) * ti * ti + binom(k - 1, 2) * r * ti + 2 * di * di + 1;
    Ok(ClosedFormCheck {
        d,
        t,
        max_codim,
        max_codim_formula,
        min_dim,
        min_dim_formula,
        ok: max_codim == max_codim_formula && min_dim == min_dim_formula,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureCell {
    pub d: i64,
    pub t: usize,
    pub classes: usize,
    pub min_dim: i128,
    pub max_dim: i128,
    pub counterexamples: Vec<AdmissiblePair>,
}

impl ConjectureCell {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub d_max: i64,
    pub cells: Vec<ConjectureCell>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(ConjectureCell::passed)
    }

    pub fn total_classes(&self) -> usize {
        self.cells.iter().map(|c| c.classes).sum()
    }
}

/// Checks `dim det(min) <= dim det(a, b) <= dim det(max)` for every class of
/// every degree `3..=d_max`. Cells run in parallel; output order is `(d, t)`.
pub fn verify_conjecture(d_max: i64) -> Result<ConjectureReport> {
    if !(3..=MAX_DEGREE).contains(&d_max) {
        return Err(Error::InvalidArgument(format!("d_max must be in 3..={MAX_DEGREE}, got {d_max}")));
    }
    let cells: Vec<(i64, usize)> = (3..=d_max).flat_map(|d| (2..=d as usize).map(move |t| (d, t))).collect();
    let cells = cells.into_par_iter().map(|(d, t)| conjecture_cell(d, t)).collect::<Result<Vec<_>>>()?;
    Ok(ConjectureReport { d_max, cells })
}

fn conjecture_cell(d: i64, t: usize) -> Result<ConjectureCell> {
    let (min, max) = extremal_pairs(d, t)?;
    let (min_dim, max_dim) = (dim_det(&min)?, dim_det(&max)?);
    let classes = classes_of_length(d, t, EnumerationOptions::default());
    let mut counterexamples = Vec::new();
    for c in &classes {
        let dim = dim_det(&c.representative)?;
        if dim < min_dim || dim > max_dim {
            counterexamples.push(c.representative.clone());
        }
    }
    Ok(ConjectureCell { d, t, classes: classes.len(), min_dim, max_dim, counterexamples })
}

/// One row of the codimension table for degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d: i64,
    /// Number of components after merging all codimension-0 classes into one.
    pub count: usize,
    /// Codimensions, ascending, one per component.
    pub codims: Vec<i128>,
}

impl TableRow {
    /// Compressed multiset: `k:r` when `r` occurs `k > 1` times.
    pub fn notation(&self) -> String {
        let mut counts: BTreeMap<i128, usize> = BTreeMap::new();
        for &c in &self.codims {
            *counts.entry(c).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|(r, k)| if k > 1 { format!("{k}:{r}") } else { r.to_string() })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub fn component_table(d: i64) -> Result<TableRow> {
    let classes = enumerate_classes(d)?;
    let mut codims = Vec::with_capacity(classes.len());
    let mut whole_space = false;
    for c in &classes {
        let codim = ambient_dim(d) - dim_det(&c.representative)?;
        if codim == 0 {
            whole_space = true;
        } else {
            codims.push(codim);
        }
    }
    if whole_space {
        codims.push(0);
    }
    codims.sort_unstable();
    Ok(TableRow { d, count: codims.len(), codims })
}
