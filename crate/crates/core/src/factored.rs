//! Positive integers kept in factored form.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::prime::Prime;

/// A positive integer stored as a map from primes to exponents.
///
/// Factorials and hook-formula dimensions stay exact for any degree; the
/// `p`-part of a value is read off without a factorization step.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredNat {
    exponents: BTreeMap<u64, u32>,
}

impl FactoredNat {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factor `n > 0` by trial division.
    pub fn from_u64(n: u64) -> Self {
        assert!(n > 0, "FactoredNat represents positive integers");
        let mut exponents = BTreeMap::new();
        let mut n = n;
        let mut d = 2u64;
        while d * d <= n {
            while n.is_multiple_of(d) {
                *exponents.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if n > 1 {
            *exponents.entry(n).or_insert(0) += 1;
        }
        FactoredNat { exponents }
    }

    pub fn factorial(n: u64) -> Self {
        (2..=n).fold(Self::one(), |acc, k| acc * Self::from_u64(k))
    }

    /// `p^k` as a factored value.
    pub fn prime_power(p: Prime, k: u32) -> Self {
        let mut exponents = BTreeMap::new();
        if k > 0 {
            exponents.insert(p.get(), k);
        }
        FactoredNat { exponents }
    }

    pub fn valuation(&self, p: Prime) -> u32 {
        self.exponents.get(&p.get()).copied().unwrap_or(0)
    }

    /// The largest power of `p` dividing `self`.
    pub fn p_part(&self, p: Prime) -> FactoredNat {
        Self::prime_power(p, self.valuation(p))
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &FactoredNat) -> Option<FactoredNat> {
        let mut exponents = self.exponents.clone();
        for (&q, &e) in &other.exponents {
            let slot = exponents.get_mut(&q)?;
            if *slot < e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exponents.remove(&q);
            }
        }
        Some(FactoredNat { exponents })
    }

    pub fn divides(&self, other: &FactoredNat) -> bool {
        other.checked_div(self).is_some()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.exponents.iter().map(|(&q, &e)| (q, e))
    }

    pub fn to_biguint(&self) -> BigUint {
        self.factors()
            .fold(BigUint::from(1u8), |acc, (q, e)| acc * BigUint::from(q).pow(e))
    }

    /// The value, if it fits in a `u128`.
    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 1;
        for (q, e) in self.factors() {
            for _ in 0..e {
                acc = acc.checked_mul(q as u128)?;
            }
        }
        Some(acc)
    }
}

// Multiplying adds exponents.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for FactoredNat {
    type Output = FactoredNat;
    fn mul(mut self, rhs: FactoredNat) -> FactoredNat {
        for (q, e) in rhs.exponents {
            *self.exponents.entry(q).or_insert(0) += e;
        }
        self
    }
}

impl<'a> Mul<&'a FactoredNat> for &'a FactoredNat {
    type Output = FactoredNat;
    fn mul(self, rhs: &FactoredNat) -> FactoredNat {
        self.clone() * rhs.clone()
    }
}

impl std::iter::Product for FactoredNat {
    fn product<I: Iterator<Item = FactoredNat>>(iter: I) -> Self {
        iter.fold(FactoredNat::one(), |a, b| a * b)
    }
}

/// Renders as `2^2*3*7`; one renders as `1`.
impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (q, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{q}")?;
            } else {
                write!(f, "{q}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FactoredNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
