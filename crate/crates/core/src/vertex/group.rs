use serde::{Serialize, Serializer};
use std::fmt;

use crate::prime::Prime;

/// A `p`-subgroup of a symmetric group named by how it arises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicGroup {
    Trivial,
    /// A Sylow `p`-subgroup of `S_degree`.
    SylowOfSym { p: Prime, degree: usize },
    /// A Sylow `p`-subgroup of the Young subgroup `S_{a_1} x ... x S_{a_k}`.
    SylowOfYoung { p: Prime, parts: Vec<usize> },
    /// `V_1(p)^rank`, generated by `rank` disjoint `p`-cycles.
    ElementaryAbelian { p: Prime, rank: usize },
}

impl SymbolicGroup {
    /// Base-`p` digits of each symmetric-group degree involved.
    fn degrees(&self) -> Vec<usize> {
        match self {
            SymbolicGroup::Trivial => vec![],
            SymbolicGroup::SylowOfSym { degree, .. } => vec![*degree],
            SymbolicGroup::SylowOfYoung { parts, .. } => parts.clone(),
            SymbolicGroup::ElementaryAbelian { p, rank } => vec![p.get() as usize; *rank],
        }
    }

    fn prime(&self) -> Option<Prime> {
        match self {
            SymbolicGroup::Trivial => None,
            SymbolicGroup::SylowOfSym { p, .. }
            | SymbolicGroup::SylowOfYoung { p, .. }
            | SymbolicGroup::ElementaryAbelian { p, .. } => Some(*p),
        }
    }

    /// `log_p |G|`.
    pub fn order_exponent(&self) -> u64 {
        let Some(p) = self.prime() else { return 0 };
        self.degrees()
            .iter()
            .map(|&k| crate::prime::legendre_valuation(k as u64, p))
            .sum()
    }

    /// A Sylow `p`-subgroup of `S_k` is abelian exactly when `k < p^2`.
    pub fn is_abelian(&self) -> bool {
        match self.prime() {
            None => true,
            Some(p) => self.degrees().iter().all(|&k| (k as u64) < p.get() * p.get()),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order_exponent() == 0
    }

    /// For abelian groups, the isomorphism type as a product of `Z_p`'s, e.g. `Z3xZ3`.
    pub fn structure(&self) -> Option<String> {
        if !self.is_abelian() {
            return None;
        }
        let rank = self.order_exponent();
        Some(match (self.prime(), rank) {
            (_, 0) | (None, _) => "1".to_string(),
            (Some(p), r) => vec![format!("Z{p}"); r as usize].join("x"),
        })
    }
}

impl fmt::Display for SymbolicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicGroup::Trivial => f.write_str("1"),
            SymbolicGroup::SylowOfSym { p, degree } => write!(f, "Sylow_{p}(S_{degree})"),
            SymbolicGroup::SylowOfYoung { p, parts } => {
                let nontrivial: Vec<String> = parts
                    .iter()
                    .filter(|&&k| k >= p.get() as usize)
                    .map(|k| format!("S_{k}"))
                    .collect();
                if nontrivial.is_empty() {
                    f.write_str("1")
                } else {
                    write!(f, "Sylow_{p}({})", nontrivial.join("x"))
                }
            }
            SymbolicGroup::ElementaryAbelian { rank: 0, .. } => f.write_str("1"),
            SymbolicGroup::ElementaryAbelian { p, rank: 1 } => write!(f, "V1({p})"),
            SymbolicGroup::ElementaryAbelian { p, rank } => write!(f, "V1({p})^{rank}"),
        }
    }
}

impl Serialize for SymbolicGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn rendering_and_structure() {
        let d = SymbolicGroup::SylowOfSym { p: p(3), degree: 9 };
        assert_eq!(d.to_string(), "Sylow_3(S_9)");
        assert!(!d.is_abelian());
        assert_eq!(d.order_exponent(), 4);

        let z3 = SymbolicGroup::SylowOfSym { p: p(3), degree: 3 };
        assert_eq!(z3.structure().as_deref(), Some("Z3"));

        let y = SymbolicGroup::SylowOfYoung { p: p(2), parts: vec![2, 2] };
        assert_eq!(y.to_string(), "Sylow_2(S_2xS_2)");
        assert_eq!(y.structure().as_deref(), Some("Z2xZ2"));

        let y = SymbolicGroup::SylowOfYoung { p: p(3), parts: vec![1, 1, 1] };
        assert_eq!(y.to_string(), "1");
        assert!(y.is_trivial());

        let w = SymbolicGroup::SylowOfYoung { p: p(3), parts: vec![6, 3] };
        assert_eq!(w.structure().as_deref(), Some("Z3xZ3xZ3"));
    }
}
