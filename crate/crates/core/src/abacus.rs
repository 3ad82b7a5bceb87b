//! Beta-sets, the `m`-runner abacus, and `m`-cores.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite set of first-column hook lengths (beta-numbers), largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet {
    beads: Vec<usize>,
}

impl BetaSet {
    /// Beta-set of `mu` on `mu.len() + extra` beads.
    pub fn of(mu: &Partition, extra: usize) -> BetaSet {
        let r = mu.len() + extra;
        let beads = (0..r).map(|i| mu.part(i) + r - 1 - i).collect();
        BetaSet { beads }
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.beads.len();
        let parts = self
            .beads
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (r - 1 - i))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Push every bead up its runner; returns the core beta-set and the number of slides.
    pub fn slide_up(&self, m: usize) -> (BetaSet, usize) {
        let mut counts = vec![0usize; m];
        let mut level_sum = 0usize;
        for &b in &self.beads {
            counts[b % m] += 1;
            level_sum += b / m;
        }
        let mut beads = Vec::with_capacity(self.beads.len());
        let mut packed = 0usize;
        for (runner, &c) in counts.iter().enumerate() {
            beads.extend((0..c).map(|level| runner + m * level));
            packed += c * c.saturating_sub(1) / 2;
        }
        beads.sort_unstable_by(|a, b| b.cmp(a));
        (BetaSet { beads }, level_sum - packed)
    }
}

/// The `m`-core of a partition together with its `m`-weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreWeight {
    pub m: usize,
    pub core: Partition,
    pub weight: usize,
}

/// `m`-core and `m`-weight via bead slides on an `m`-runner abacus.
pub fn m_core_weight(mu: &Partition, m: usize) -> Result<CoreWeight> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let (core, weight) = BetaSet::of(mu, 0).slide_up(m);
    let core = core.to_partition();
    debug_assert_eq!(mu.size(), core.size() + m * weight);
    Ok(CoreWeight {
        m,
        core,
        weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let cw = m_core_weight(&part(&[2, 1]), 3).unwrap();
        assert_eq!((cw.core, cw.weight), (Partition::empty(), 1));

        let cw = m_core_weight(&part(&[4, 2]), 2).unwrap();
        assert_eq!((cw.core, cw.weight), (Partition::empty(), 3));
        assert_eq!(part(&[4, 2]).count_hooks_divisible(2), Ok(3));

        let mu = part(&[7, 1, 1, 1]);
        let cw = m_core_weight(&mu, 9).unwrap();
        assert_eq!((cw.core, cw.weight), (mu, 0));

        assert_eq!(m_core_weight(&part(&[3]), 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn empty_is_a_core() {
        for m in 2..6 {
            let cw = m_core_weight(&Partition::empty(), m).unwrap();
            assert!(cw.core.is_empty());
            assert_eq!(cw.weight, 0);
        }
    }

    #[test]
    fn beta_set_round_trip() {
        for mu in partitions(10) {
            for extra in 0..4 {
                assert_eq!(BetaSet::of(&mu, extra).to_partition(), mu);
            }
        }
    }

    #[test]
    fn extra_beads_do_not_change_core() {
        for n in 0..=14 {
            for mu in partitions(n) {
                for m in 2..=5 {
                    let base = m_core_weight(&mu, m).unwrap();
                    for extra in 1..=2 * m {
                        let (beads, w) = BetaSet::of(&mu, extra).slide_up(m);
                        assert_eq!(beads.to_partition(), base.core);
                        assert_eq!(w, base.weight);
                    }
                }
            }
        }
    }

    #[test]
    fn size_identity_and_core_is_core() {
        for n in 0..=16 {
            for mu in partitions(n) {
                for m in 2..=7 {
                    let cw = m_core_weight(&mu, m).unwrap();
                    assert_eq!(mu.size(), cw.core.size() + m * cw.weight);
                    assert!(cw.core.is_core(m));
                }
            }
        }
    }
}
