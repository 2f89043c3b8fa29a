//! Exact counting primitives on projective 3-space.
//!
//! A stored twist `m` always stands for the summand `O(-m)`, so a map
//! `O(-x) -> O(-y)` has degree `x - y`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Binomial coefficient with the `n < k => 0` convention (so every negative
/// `n` gives 0). Returns `None` only if the value does not fit in `i128`.
pub fn checked_binom(n: i64, k: u32) -> Option<i128> {
    let k = i128::from(k);
    let n = i128::from(n);
    if n < k {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        // C(n, i) * (n - i) is always divisible by i + 1.
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Binomial coefficient, `0` when `n < k`.
///
/// Panics on `i128` overflow, which needs `n` far beyond any degree the
/// public entry points accept.
pub fn binom(n: i64, k: u32) -> i128 {
    checked_binom(n, k).unwrap_or_else(|| panic!("binom({n}, {k}) overflows i128"))
}

/// `h^0(P^3, O(m))`.
pub fn h0_twist(m: i64) -> i128 {
    if m >= 0 {
        binom(m + 3, 3)
    } else {
        0
    }
}

/// A direct sum of line bundles `⊕ O(-m)` on projective 3-space, stored as the
/// sorted multiset of the `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TwistSum(Vec<i64>);

impl TwistSum {
    pub fn new(mut twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::InvalidArgument("a twist sum needs at least one summand".into()));
        }
        twists.sort_unstable();
        Ok(Self(twists))
    }

    pub fn twists(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn smallest(&self) -> i64 {
        self.0[0]
    }

    pub fn largest(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// Multiset union.
    pub fn union(&self, other: &TwistSum) -> TwistSum {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        TwistSum(v)
    }

    pub fn sum(&self) -> i128 {
        self.0.iter().map(|&m| i128::from(m)).sum()
    }

    pub fn power_sum(&self, exp: u32) -> i128 {
        self.0.iter().map(|&m| i128::from(m).pow(exp)).sum()
    }
}

/// `hom(X, Y) = h^0(Hom(X, Y))`: the sum of `h^0(O(x - y))` over all ordered
/// pairs of summands.
pub fn hom_dim(x: &TwistSum, y: &TwistSum) -> i128 {
    x.0.iter().flat_map(|&xi| y.0.iter().map(move |&yj| h0_twist(xi - yj))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ts(v: &[i64]) -> TwistSum {
        TwistSum::new(v.to_vec()).unwrap()
    }

    /// Degree-`m` monomials in 4 variables, counted by brute force.
    fn count_monomials(m: i64) -> i128 {
        let mut n = 0;
        for a in 0..=m {
            for b in 0..=m - a {
                for _c in 0..=m - a - b {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom(6, 3), 20);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(-4, 3), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(4 + 3, 3), 35);
        assert_eq!(binom(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn h0_twist_values() {
        assert_eq!(h0_twist(0), 1);
        assert_eq!(h0_twist(-1), 0);
        assert_eq!(h0_twist(2), count_monomials(2));
        assert_eq!(h0_twist(2), 10);
        for m in 0..12 {
            assert_eq!(h0_twist(m), count_monomials(m));
        }
    }

    #[test]
    fn hom_dim_examples() {
        for d in 3..10i64 {
            let x = ts(&vec![d + 2; d as usize]);
            let mut yv = vec![d];
            yv.extend(vec![d + 1; d as usize]);
            let y = ts(&yv);
            assert_eq!(hom_dim(&x, &y), i128::from(4 * d * d + 10 * d));
        }
        assert_eq!(hom_dim(&ts(&[5, 5]), &ts(&[5, 5])), 4);
        assert_eq!(hom_dim(&ts(&[6, 8]), &ts(&[4, 5, 5])), 93);
    }

    #[test]
    fn empty_twist_sum_rejected() {
        assert!(TwistSum::new(vec![]).is_err());
    }

    proptest! {
        #[test]
        fn identity_maps_bound(v in prop::collection::vec(-20i64..20, 1..8)) {
            let x = ts(&v);
            prop_assert!(hom_dim(&x, &x) >= x.len() as i128);
        }

        #[test]
        fn additive_under_union(
            a in prop::collection::vec(-10i64..10, 1..5),
            b in prop::collection::vec(-10i64..10, 1..5),
            c in prop::collection::vec(-10i64..10, 1..5),
        ) {
            let (a, b, c) = (ts(&a), ts(&b), ts(&c));
            prop_assert_eq!(hom_dim(&a.union(&b), &c), hom_dim(&a, &c) + hom_dim(&b, &c));
            prop_assert_eq!(hom_dim(&c, &a.union(&b)), hom_dim(&c, &a) + hom_dim(&c, &b));
        }

        #[test]
        fn monomial_recursion(m in 1i64..200) {
            prop_assert_eq!(h0_twist(m) - h0_twist(m - 1), binom(m + 2, 2));
        }
    }
}
