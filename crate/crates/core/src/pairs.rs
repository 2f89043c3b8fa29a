//! Admissible pairs `(a, b)` and their enumeration up to shift and transpose.
//!
//! A pair prescribes a `t x t` matrix whose `(i, j)` entry is a form of
//! degree `b_j - a_i`; its degree is `Σb - Σa`. Two pairs differing by a
//! common shift give the same family, and so do a pair and its transpose
//! dual `(-b reversed, -a reversed)` since `det S = det S^T`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest degree accepted by the enumeration and report entry points.
pub const MAX_DEGREE: i64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissiblePair {
    a: Vec<i64>,
    b: Vec<i64>,
}

impl AdmissiblePair {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidPair(format!("length mismatch: |a| = {}, |b| = {}", a.len(), b.len())));
        }
        if a.len() < 2 {
            return Err(Error::InvalidPair("length t must be at least 2".into()));
        }
        if a.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPair(format!("a = {a:?} is not nondecreasing")));
        }
        if b.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPair(format!("b = {b:?} is not nondecreasing")));
        }
        if let Some(i) = (0..a.len()).find(|&i| a[i] >= b[i]) {
            return Err(Error::InvalidPair(format!("a_{} = {} is not below b_{} = {}", i + 1, a[i], i + 1, b[i])));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    /// Matrix size `t`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degree(&self) -> i64 {
        self.b.iter().sum::<i64>() - self.a.iter().sum::<i64>()
    }

    /// Degree of the `(i, j)` entry, `b_j - a_i` (0-based indices).
    pub fn entry_degree(&self, i: usize, j: usize) -> i64 {
        self.b[j] - self.a[i]
    }

    /// The equivalent pair with `a_1 = base`.
    pub fn shift_normalize(&self, base: i64) -> AdmissiblePair {
        let k = base - self.a[0];
        AdmissiblePair { a: self.a.iter().map(|x| x + k).collect(), b: self.b.iter().map(|x| x + k).collect() }
    }

    /// Type of the transposed matrix, normalized to `a_1 = 0`.
    pub fn transpose_dual(&self) -> AdmissiblePair {
        AdmissiblePair { a: self.b.iter().rev().map(|x| -x).collect(), b: self.a.iter().rev().map(|x| -x).collect() }
            .shift_normalize(0)
    }

    /// Every entry has degree at least 1, i.e. `b_1 > a_t`.
    pub fn is_reduced(&self) -> bool {
        self.b[0] > self.a[self.a.len() - 1]
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("a={} b={}", fmt_seq(&self.a), fmt_seq(&self.b)))
    }
}

pub(crate) fn fmt_seq(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// A family `det(a, b)`: the normalized pairs related by transposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClass {
    pub representative: AdmissiblePair,
    /// One or two `a_1 = 0` pairs, sorted; the first is the representative.
    pub members: Vec<AdmissiblePair>,
}

impl PairClass {
    pub fn degree(&self) -> i64 {
        self.representative.degree()
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_self_dual(&self) -> bool {
        self.members.len() == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Keep pairs with constant entries (`b_1 = a_t`). Pairs with structurally
    /// zero entries (`b_1 < a_t`) are never listed; there are infinitely many.
    pub include_unreduced: bool,
    /// Merge each pair with its transpose dual.
    pub transpose_dedup: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self { include_unreduced: false, transpose_dedup: true }
    }
}

fn check_degree(d: i64) -> Result<()> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("degree must be at least 3, got {d}")));
    }
    if d > MAX_DEGREE {
        return Err(Error::InvalidArgument(format!("degree {d} exceeds the supported maximum {MAX_DEGREE}")));
    }
    Ok(())
}

/// All shift-normalized (`a_1 = 0`) pairs of degree `d` and length `t`,
/// in lexicographic order. Reduced pairs only unless `include_unreduced`.
pub fn normalized_pairs(d: i64, t: usize, include_unreduced: bool) -> Vec<AdmissiblePair> {
    let mut out = Vec::new();
    if t < 2 || d < t as i64 {
        return out;
    }
    // b_1 - a_t >= gap
    let gap = if include_unreduced { 0 } else { 1 };
    let mut a = vec![0i64; t];
    for top in 0..=d {
        a[t - 1] = top;
        fill_a(d, t, top, gap, 1, (top + gap).max(1), &mut a, &mut out);
    }
    out.sort();
    out
}

/// Chooses `a[idx..t-1]`, nondecreasing in `[a[idx-1], top]`.
#[allow(clippy::too_many_arguments)]
fn fill_a(
    d: i64,
    t: usize,
    top: i64,
    gap: i64,
    idx: usize,
    partial: i64,
    a: &mut Vec<i64>,
    out: &mut Vec<AdmissiblePair>,
) {
    // partial: lower bound on Σ_{i<idx} (b_i - a_i)
    let lb_here = |ai: i64| (top + gap - ai).max(1);
    if idx == t - 1 {
        let total = partial + lb_here(top);
        if total > d {
            return;
        }
        let sum_a: i64 = a.iter().sum();
        let mut b = Vec::with_capacity(t);
        fill_b(t, top + gap, d + sum_a, a, &mut b, out);
        return;
    }
    let lo = a[idx - 1];
    for v in lo..=top {
        let p = partial + lb_here(v);
        // each remaining index contributes at least 1
        if p + (t - idx - 1) as i64 > d {
            continue;
        }
        a[idx] = v;
        fill_a(d, t, top, gap, idx + 1, p, a, out);
    }
}

fn fill_b(t: usize, floor: i64, remaining: i64, a: &[i64], b: &mut Vec<i64>, out: &mut Vec<AdmissiblePair>) {
    let i = b.len();
    if i == t {
        if remaining == 0 {
            out.push(AdmissiblePair { a: a.to_vec(), b: b.clone() });
        }
        return;
    }
    let left = (t - i) as i64;
    let lo = floor.max(b.last().copied().unwrap_or(i64::MIN)).max(a[i] + 1);
    // b is nondecreasing, so b_i <= remaining / left
    let hi = remaining.div_euclid(left);
    for v in lo..=hi {
        b.push(v);
        fill_b(t, floor, remaining - v, a, b, out);
        b.pop();
    }
}

/// The families `det(a, b)` of degree `d`, sorted by `(t, representative)`.
pub fn enumerate_classes(d: i64) -> Result<Vec<PairClass>> {
    enumerate_classes_with(d, EnumerationOptions::default())
}

pub fn enumerate_classes_with(d: i64, opts: EnumerationOptions) -> Result<Vec<PairClass>> {
    check_degree(d)?;
    let mut out = Vec::new();
    for t in 2..=d as usize {
        out.extend(classes_of_length(d, t, opts));
    }
    Ok(out)
}

/// Classes of one length `t`; used by sweeps that fan out over `(d, t)`.
pub fn classes_of_length(d: i64, t: usize, opts: EnumerationOptions) -> Vec<PairClass> {
    let pairs = normalized_pairs(d, t, opts.include_unreduced);
    if !opts.transpose_dedup {
        return pairs.into_iter().map(|p| PairClass { representative: p.clone(), members: vec![p] }).collect();
    }
    let mut classes: BTreeMap<AdmissiblePair, Vec<AdmissiblePair>> = BTreeMap::new();
    for p in pairs {
        let dual = p.transpose_dual();
        if dual < p {
            // recorded when the dual itself comes up
            continue;
        }
        let members = if dual == p { vec![p.clone()] } else { vec![p.clone(), dual] };
        classes.insert(p, members);
    }
    classes.into_iter().map(|(representative, members)| PairClass { representative, members }).collect()
}
