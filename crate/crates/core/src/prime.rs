use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^k`, saturating at `u64::MAX`.
    pub fn pow(self, k: u32) -> u64 {
        self.0.saturating_pow(k)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of `p` in `n!` (Legendre's formula).
pub fn legendre_valuation(n: u64, p: Prime) -> u64 {
    let p = p.get();
    let mut total = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: Prime) -> u32 {
    debug_assert!(n > 0);
    let p = p.get();
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_valuation(10, p(3)), 4);
        assert_eq!(legendre_valuation(0, p(5)), 0);
        assert_eq!(legendre_valuation(9, p(3)), 4);
        assert_eq!(p(3).pow(legendre_valuation(9, p(3)) as u32), 81);
    }

    #[test]
    fn legendre_matches_direct_factorial_valuation() {
        for prime in [2, 3, 5, 7] {
            let pr = p(prime);
            let mut direct = 0;
            for n in 1..=200u64 {
                direct += valuation(n, pr) as u64;
                assert_eq!(legendre_valuation(n, pr), direct, "n={n} p={prime}");
            }
        }
    }

    #[test]
    fn serde_rejects_composites() {
        assert!(serde_json::from_str::<Prime>("4").is_err());
        assert_eq!(serde_json::from_str::<Prime>("7").unwrap(), p(7));
    }
}
