//! Necessary conditions on an abelian vertex `Z_{p^n_1} x ... x Z_{p^n_m}`.
//!
//! With `w` the `p`-weight, `c` the complexity and `s` the slack exponent,
//! an abelian vertex inside the defect group `Sylow_p(S_{pw})` must satisfy
//!
//! * the divisibility bound `s + w <= n_1 + ... + n_c`, and
//! * the embedding bound `p^{n_1} + ... + p^{n_m} <= pw`.
//!
//! Adding them gives `sum_{i<=c} (p^{n_i-1} - n_i) + sum_{i>c} p^{n_i-1} + s <= 0`.
//! Every term is non-negative, so `s = 0`, `c = m`, `p^{n_i-1} = n_i` and
//! `n_1 + ... + n_m = w`. The only solutions of `p^{k-1} = k` are `k = 1` and,
//! for `p = 2`, `k = 2`.

use serde::Serialize;

use crate::abacus::m_core_weight;
use crate::dimension::specht_dimension;
use crate::partition::Partition;
use crate::prime::{legendre_valuation, valuation, Prime};
use crate::subgroup::AbelianPType;

/// Slack exponent: `sum v_p(h(i,j)) - w`. Zero exactly for `p^2`-cores.
pub fn slack_exponent(mu: &Partition, p: Prime) -> usize {
    let total: usize = mu
        .hook_grid()
        .iter()
        .map(|h| valuation(h as u64, p) as usize)
        .sum();
    total - weight(mu, p)
}

/// Slack exponent computed as `v_p(n!) - w - v_p(dim S^mu)`.
pub fn slack_exponent_via_dimension(mu: &Partition, p: Prime) -> usize {
    let a = legendre_valuation(mu.size() as u64, p) as usize;
    let dim = specht_dimension(mu).valuation(p) as usize;
    a - weight(mu, p) - dim
}

fn weight(mu: &Partition, p: Prime) -> usize {
    m_core_weight(mu, p.get() as usize).expect("p >= 2").weight
}

/// How a candidate type fares against both inequalities, taking `c = rank`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeWitness {
    #[serde(rename = "type")]
    pub ptype: AbelianPType,
    /// `n_1 + ... + n_c - s - w`; non-negative when the divisibility bound holds.
    pub divisibility_margin: i64,
    /// `pw - sum p^{n_i}`; non-negative when the embedding bound holds.
    pub embedding_margin: i64,
    /// Left-hand side of the combined inequality.
    pub combined_lhs: i64,
}

impl TypeWitness {
    /// Evaluate both bounds for `t` with complexity `c`.
    pub fn evaluate(t: &AbelianPType, weight: usize, slack: usize, c: usize) -> TypeWitness {
        let p = t.p();
        let ns = t.exponents();
        let c = c.min(ns.len());
        let head: i64 = ns[..c].iter().map(|&n| n as i64).sum();
        let combined: i64 = ns[..c]
            .iter()
            .map(|&n| p.pow(n - 1) as i64 - n as i64)
            .chain(ns[c..].iter().map(|&n| p.pow(n - 1) as i64))
            .sum::<i64>()
            + slack as i64;
        TypeWitness {
            ptype: t.clone(),
            divisibility_margin: head - slack as i64 - weight as i64,
            embedding_margin: (p.get() as i64) * weight as i64 - t.minimal_degree() as i64,
            combined_lhs: combined,
        }
    }

    pub fn passes(&self) -> bool {
        self.divisibility_margin >= 0 && self.embedding_margin >= 0
    }
}

/// Surviving abelian types for `mu` at `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityResult {
    pub p: Prime,
    pub weight: usize,
    pub slack: usize,
    pub feasible: Vec<TypeWitness>,
}

impl FeasibilityResult {
    pub fn types(&self) -> Vec<AbelianPType> {
        self.feasible.iter().map(|w| w.ptype.clone()).collect()
    }
}

/// Closed form of the surviving types for given `p`, weight and slack.
///
/// Empty when `s > 0`; `{1^w}` for odd `p`; for `p = 2` every mixture of
/// exponents 1 and 2 summing to `w`. Lexicographic order.
pub fn gate_types(p: Prime, weight: usize, slack: usize) -> Vec<AbelianPType> {
    if slack > 0 {
        return Vec::new();
    }
    let mut out: Vec<AbelianPType> = if p.get() == 2 {
        (0..=weight / 2)
            .map(|fours| {
                let mut e = vec![2u32; fours];
                e.extend(std::iter::repeat_n(1, weight - 2 * fours));
                AbelianPType::new(p, e).expect("weakly decreasing")
            })
            .collect()
    } else {
        vec![AbelianPType::new(p, vec![1; weight]).expect("all ones")]
    };
    out.sort();
    out
}

pub fn feasible_abelian_types(mu: &Partition, p: Prime) -> FeasibilityResult {
    let w = weight(mu, p);
    let s = slack_exponent(mu, p);
    let feasible = gate_types(p, w, s)
        .iter()
        .map(|t| TypeWitness::evaluate(t, w, s, t.rank()))
        .collect();
    FeasibilityResult {
        p,
        weight: w,
        slack: s,
        feasible,
    }
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

    fn exps(ts: &[AbelianPType]) -> Vec<Vec<u32>> {
        ts.iter().map(|t| t.exponents().to_vec()).collect()
    }

    #[test]
    fn slack_examples() {
        assert_eq!(slack_exponent(&part(&[7, 1, 1, 1]), p(3)), 0);
        assert_eq!(slack_exponent(&part(&[2, 2, 1, 1]), p(2)), 1);
        assert_eq!(slack_exponent(&part(&[3, 3, 3]), p(3)), 0);
    }

    #[test]
    fn slack_routes_agree_and_detect_p2_cores() {
        for n in 0..=18 {
            for mu in partitions(n) {
                for q in [2, 3, 5] {
                    let s = slack_exponent(&mu, p(q));
                    assert_eq!(s, slack_exponent_via_dimension(&mu, p(q)));
                    assert_eq!(s == 0, mu.is_core((q * q) as usize), "{mu} p={q}");
                }
            }
        }
    }

    #[test]
    fn feasible_examples() {
        let r = feasible_abelian_types(&part(&[7, 1, 1, 1]), p(3));
        assert_eq!(exps(&r.types()), vec![vec![1, 1, 1]]);
        assert_eq!(r.feasible[0].combined_lhs, 0);

        let r = feasible_abelian_types(&part(&[2, 2, 1, 1]), p(2));
        assert_eq!(r.slack, 1);
        assert!(r.feasible.is_empty());

        // (6,3) is a 4-core of 2-weight 3
        let r = feasible_abelian_types(&part(&[6, 3]), p(2));
        assert_eq!(r.weight, 3);
        assert_eq!(exps(&r.types()), vec![vec![1, 1, 1], vec![2, 1]]);
        assert!(r.feasible.iter().all(|w| w.passes() && w.combined_lhs == 0));
    }

    #[test]
    fn weight_zero_has_trivial_type() {
        let r = feasible_abelian_types(&part(&[3, 2, 1]), p(2));
        assert_eq!(r.types(), vec![AbelianPType::trivial(p(2))]);
    }

    #[test]
    fn combined_lhs_is_sum_of_margins() {
        for t in crate::subgroup::enumerate_abelian_types(p(2), 12) {
            for s in 0..3 {
                let w = 6;
                let wit = TypeWitness::evaluate(&t, w, s, t.rank());
                let inj: i64 = t.exponents().iter().map(|&n| 2i64.pow(n - 1)).sum();
                assert_eq!(wit.combined_lhs, -wit.divisibility_margin + inj - w as i64);
            }
        }
    }
}
