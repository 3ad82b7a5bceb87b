//! Finite fields `GF(p^e)` with table arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::prime::Prime;

/// A field element, encoded as `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
/// `c_0 + c_1 x + ...` is its polynomial representative. Prime-field
/// elements are the integers `0..p`.
pub type Elem = u16;

const MAX_ORDER: usize = 1024;

/// `GF(p^e)` built from a monic irreducible polynomial of degree `e`.
#[derive(Clone)]
pub struct GaloisField {
    p: Prime,
    e: u32,
    q: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    modulus: Vec<u64>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.e, self.modulus)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(p: Prime, e: u32) -> Result<Self> {
        let pp = p.get();
        let err = |reason: &str| Error::Field {
            p: pp,
            e,
            reason: reason.to_string(),
        };
        if !(1..=3).contains(&e) {
            return Err(err("extension degree must be 1, 2 or 3"));
        }
        let q = pp
            .checked_pow(e)
            .filter(|&q| q as usize <= MAX_ORDER)
            .ok_or_else(|| err("field order exceeds 1024"))? as usize;
        let modulus = irreducible(pp, e);

        let digits = |x: usize| -> Vec<u64> {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = x as u64;
            for _ in 0..e {
                v.push(x % pp);
                x /= pp;
            }
            v
        };
        let encode = |v: &[u64]| -> Elem {
            v.iter().rev().fold(0u64, |acc, &c| acc * pp + c) as Elem
        };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % pp).collect();
                add[a * q + b] = encode(&sum);
                mul[a * q + b] = encode(&poly_mul_mod(&da, &db, &modulus, pp));
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem)
            .collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).ok_or_else(|| err("not a field"))? as Elem;
        }
        Ok(GaloisField {
            p,
            e,
            q,
            add,
            mul,
            neg,
            inv,
            modulus,
        })
    }

    pub fn prime_field(p: Prime) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> Prime {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, x: i64) -> Elem {
        x.rem_euclid(self.p.get() as i64) as Elem
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }
}

/// Lexicographically first monic irreducible polynomial of degree `e <= 3`,
/// coefficients low degree first. For these degrees irreducible means rootless.
fn irreducible(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = p.pow(e);
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        let mut c = code;
        for _ in 0..e {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        let has_root = (0..p).any(|x| {
            coeffs.iter().rev().fold(0, |acc, &a| (acc * x + a) % p) == 0
        });
        if !has_root {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate() {
                let idx = k - e + i;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
        }
    }
    prod.truncate(e);
    prod
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn field_axioms_small() {
        for (q, e) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (3, 3), (5, 2)] {
            let f = GaloisField::new(p(q), e).unwrap();
            let els: Vec<Elem> = f.elements().collect();
            assert_eq!(els.len(), (q as usize).pow(e));
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in els.iter().step_by(3) {
                        let lhs = f.mul(a, f.add(b, c));
                        let rhs = f.add(f.mul(a, b), f.mul(a, c));
                        assert_eq!(lhs, rhs);
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            // characteristic p
            for &a in &els {
                let mut acc = 0;
                for _ in 0..q {
                    acc = f.add(acc, a);
                }
                assert_eq!(acc, 0);
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        let f = GaloisField::new(p(3), 2).unwrap();
        let order = |a: Elem| {
            let mut x = a;
            let mut k = 1;
            while x != 1 {
                x = f.mul(x, a);
                k += 1;
            }
            k
        };
        assert!(f.elements().skip(1).any(|a| order(a) == 8));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(GaloisField::new(p(2), 4).is_err());
        assert!(GaloisField::new(p(11), 3).is_err());
        assert!(GaloisField::new(p(2), 0).is_err());
        assert_eq!(GaloisField::prime_field(p(7)).unwrap().from_int(-1), 6);
    }
}
