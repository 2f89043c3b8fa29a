use crate::error::{Error, Result};

/// 2^31 - 1.
pub const DEFAULT_MODULUS: u64 = 2_147_483_647;

/// Trial division; moduli are below 2^32 so this stays cheap.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut f = 3u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Least prime `≡ 1 mod 2d` above 10^4, so that `x^d + y^d` splits into
/// linear factors.
pub fn default_fermat_modulus(d: u32) -> u64 {
    let step = 2 * u64::from(d.max(1));
    let mut p = 10_000 / step * step + 1;
    while p <= 10_000 || !is_prime(p) {
        p += step;
    }
    p
}

/// `Z/pZ` for an odd prime `p < 2^32`; elements are `u64` in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidArgument(format!("modulus {p} is not an odd prime below 2^32")));
        }
        Ok(Self { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// An element of multiplicative order exactly `n`, if `n | p - 1`.
    pub fn element_of_order(self, n: u64) -> Option<u64> {
        if n == 0 || !(self.p - 1).is_multiple_of(n) {
            return None;
        }
        (2..self.p).map(|g| self.pow(g, (self.p - 1) / n)).find(|&z| {
            let mut acc = z;
            for _ in 1..n {
                if acc == 1 {
                    return false;
                }
                acc = self.mul(acc, z);
            }
            acc == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(DEFAULT_MODULUS));
        assert!(is_prime(73));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(1 << 33).is_err());
    }

    #[test]
    fn fermat_moduli() {
        for d in 3..=12u32 {
            let p = default_fermat_modulus(d);
            assert!(p > 10_000 && is_prime(p) && p % (2 * u64::from(d)) == 1, "d={d} p={p}");
            // least such prime
            let step = 2 * u64::from(d);
            assert!((10_001..p).filter(|q| q % step == 1).all(|q| !is_prime(q)));
        }
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(73).unwrap();
        assert_eq!(f.mul(f.inv(5), 5), 1);
        assert_eq!(f.reduce(-1), 72);
        assert_eq!(f.sub(3, 5), 71);
        let z = f.element_of_order(8).unwrap();
        assert_eq!(f.pow(z, 4), 72);
        assert!(f.element_of_order(5).is_none());
    }
}
