//! `p`-adic expansions of partitions and the Young-subgroup composition they define.

use serde::Serialize;

use crate::partition::Partition;
use crate::prime::Prime;

/// `mu = layers[0] + p*layers[1] + ... + p^k*layers[k]` coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PAdicExpansion {
    pub p: Prime,
    pub layers: Vec<Partition>,
}

impl PAdicExpansion {
    /// Coordinatewise sum of `p^i * layers[i]`.
    pub fn reconstruct(&self) -> Partition {
        let rows = self.layers.iter().map(Partition::len).max().unwrap_or(0);
        let parts = (0..rows)
            .map(|r| {
                self.layers
                    .iter()
                    .enumerate()
                    .map(|(i, layer)| layer.part(r) * self.p.pow(i as u32) as usize)
                    .sum()
            })
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Index of the top layer.
    pub fn depth(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }
}

/// `ρ(μ)`: `p^k` repeated `|layer k|` times down to `p^0` repeated `|layer 0|` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoComposition {
    pub p: Prime,
    pub parts: Vec<usize>,
}

impl RhoComposition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn as_partition(&self) -> Partition {
        Partition::from_sorted_unchecked(self.parts.clone())
    }

    /// `(p^i, multiplicity)` pairs, highest power first, zero multiplicities omitted.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        self.as_partition().exponent_form()
    }
}

/// True if some row can lose `p` cells and stay a partition.
pub fn has_horizontal_hook(mu: &Partition, p: Prime) -> bool {
    let p = p.get() as usize;
    (0..mu.len()).any(|j| mu.part(j) >= mu.part(j + 1) + p)
}

/// Strip every removable horizontal `p`-hook, bottom row first.
///
/// Returns the stripped partition and the partition of removed multiples
/// (row `j` lost `p * quotient[j]` cells).
pub fn strip_horizontal_hooks(mu: &Partition, p: Prime) -> (Partition, Partition) {
    let p = p.get() as usize;
    let mut rest = mu.parts().to_vec();
    let mut quotient = vec![0usize; rest.len()];
    for j in (0..rest.len()).rev() {
        let below = rest.get(j + 1).copied().unwrap_or(0);
        let k = (rest[j] - below) / p;
        rest[j] -= k * p;
        quotient[j] = k;
    }
    (
        Partition::from_sorted_unchecked(rest),
        Partition::from_sorted_unchecked(quotient),
    )
}

pub fn p_adic_expansion(mu: &Partition, p: Prime) -> PAdicExpansion {
    let mut layers = Vec::new();
    let mut cur = mu.clone();
    loop {
        let (rest, quotient) = strip_horizontal_hooks(&cur, p);
        if quotient.is_empty() {
            layers.push(cur);
            break;
        }
        layers.push(rest);
        cur = quotient;
    }
    PAdicExpansion { p, layers }
}

pub fn rho(mu: &Partition, p: Prime) -> RhoComposition {
    let exp = p_adic_expansion(mu, p);
    let mut parts = Vec::with_capacity(mu.size());
    for (i, layer) in exp.layers.iter().enumerate().rev() {
        parts.extend(std::iter::repeat_n(p.pow(i as u32) as usize, layer.size()));
    }
    RhoComposition { p, parts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn two_two() {
        let e = p_adic_expansion(&part(&[2, 2]), p(2));
        assert_eq!(e.layers, vec![Partition::empty(), part(&[1, 1])]);
        assert_eq!(rho(&part(&[2, 2]), p(2)).parts, vec![2, 2]);
    }

    #[test]
    fn single_box() {
        for q in [2, 3, 5] {
            let e = p_adic_expansion(&part(&[1]), p(q));
            assert_eq!(e.layers, vec![part(&[1])]);
            assert_eq!(rho(&part(&[1]), p(q)).parts, vec![1]);
        }
    }

    #[test]
    fn four_one() {
        // (4,1) = (2,1) + 2*(1)
        let e = p_adic_expansion(&part(&[4, 1]), p(2));
        assert_eq!(e.layers, vec![part(&[2, 1]), part(&[1])]);
        assert_eq!(e.reconstruct(), part(&[4, 1]));
        assert_eq!(rho(&part(&[4, 1]), p(2)).parts, vec![2, 1, 1, 1]);
    }

    #[test]
    fn seven_one_cubed() {
        let mu = part(&[7, 1, 1, 1]);
        let e = p_adic_expansion(&mu, p(3));
        assert_eq!(e.layers, vec![part(&[1, 1, 1, 1]), part(&[2])]);
        let r = rho(&mu, p(3));
        assert_eq!(r.parts, vec![3, 3, 1, 1, 1, 1]);
        assert_eq!(r.total(), 10);
    }

    #[test]
    fn empty_partition() {
        let e = p_adic_expansion(&Partition::empty(), p(3));
        assert_eq!(e.layers, vec![Partition::empty()]);
        assert!(rho(&Partition::empty(), p(3)).parts.is_empty());
    }

    #[test]
    fn round_trip_small() {
        for n in 0..=14 {
            for mu in partitions(n) {
                for q in [2, 3, 5] {
                    let e = p_adic_expansion(&mu, p(q));
                    assert_eq!(e.reconstruct(), mu);
                    for layer in &e.layers {
                        assert!(!has_horizontal_hook(layer, p(q)));
                    }
                    assert!(e.layers.len() == 1 || !e.layers.last().unwrap().is_empty());
                    assert_eq!(rho(&mu, p(q)).total(), n);
                }
            }
        }
    }
}
