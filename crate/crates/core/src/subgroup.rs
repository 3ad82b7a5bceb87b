//! `p`-subgroups of symmetric groups: maximal elementary abelian classes and
//! abelian types that fit inside a given degree.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};
use crate::prime::Prime;

/// Conjugacy class of maximal elementary abelian `p`-subgroups of `S_n`,
/// one for each way of writing `n = i_0 + i_1 p + ... + i_r p^r` with
/// `0 <= i_0 < p`. The group is the product of `i_j` copies of `V_j(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaxElemAbelianClass {
    p: Prime,
    n: usize,
    /// `[i_0, i_1, ..., i_r]` with no trailing zeros past `i_0`.
    coefficients: Vec<usize>,
}

impl MaxElemAbelianClass {
    pub fn new(p: Prime, coefficients: Vec<usize>) -> Result<Self> {
        let mut coefficients = coefficients;
        if coefficients.is_empty() {
            coefficients.push(0);
        }
        while coefficients.len() > 1 && coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        if coefficients[0] >= p.get() as usize {
            return Err(Error::Subgroup(format!(
                "fixed-point coefficient {} must be below {p}",
                coefficients[0]
            )));
        }
        let n = coefficients
            .iter()
            .enumerate()
            .map(|(j, &i)| i * p.pow(j as u32) as usize)
            .sum();
        Ok(MaxElemAbelianClass { p, n, coefficients })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.coefficients[0]
    }

    /// Largest `j` with `i_j > 0`, zero when only fixed points remain.
    pub fn top_level(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `(j, i_j)` for every `j >= 1` with `i_j > 0`, in increasing `j`.
    pub fn factors(&self) -> Vec<(usize, usize)> {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &i)| i > 0)
            .map(|(j, &i)| (j, i))
            .collect()
    }

    /// `i_1 + 2 i_2 + ... + r i_r`.
    pub fn p_rank(&self) -> usize {
        self.factors().iter().map(|&(j, i)| j * i).sum()
    }

    /// e.g. `V1(3)^3` or `V1(2)^2 x V2(2)`; `1` for the trivial group.
    pub fn group_description(&self) -> String {
        let parts: Vec<String> = self
            .factors()
            .iter()
            .map(|&(j, i)| {
                if i == 1 {
                    format!("V{j}({})", self.p)
                } else {
                    format!("V{j}({})^{i}", self.p)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }

    fn order_key(&self) -> (usize, Vec<usize>) {
        let mut rev: Vec<usize> = self.coefficients[1..].to_vec();
        rev.reverse();
        (self.top_level(), rev)
    }
}

impl fmt::Display for MaxElemAbelianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.group_description())
    }
}

impl Serialize for MaxElemAbelianClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MaxElemAbelianClass", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("i", &self.coefficients)?;
        st.end()
    }
}

/// All maximal elementary abelian classes of `S_n`, ordered by `(r, i_r, ..., i_1)`.
pub fn max_elem_abelian_classes(n: usize, p: Prime) -> Vec<MaxElemAbelianClass> {
    let q = p.get() as usize;
    let i0 = n % q;
    let rest = (n - i0) / q;
    // rest = i_1 + i_2 p + ... + i_r p^(r-1)
    let mut powers = vec![1usize];
    while powers.last().unwrap() * q <= rest {
        let next = powers.last().unwrap() * q;
        powers.push(next);
    }
    let mut out = Vec::new();
    let mut coeffs = vec![0usize; powers.len()];
    write_as_powers(rest, powers.len(), &powers, &mut coeffs, &mut |c| {
        let mut all = vec![i0];
        all.extend_from_slice(c);
        out.push(MaxElemAbelianClass::new(p, all).expect("i_0 < p"));
    });
    out.sort_by_key(MaxElemAbelianClass::order_key);
    out
}

fn write_as_powers(
    remaining: usize,
    levels: usize,
    powers: &[usize],
    coeffs: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    if levels == 0 {
        if remaining == 0 {
            emit(coeffs);
        }
        return;
    }
    let j = levels - 1;
    if j == 0 {
        coeffs[0] = remaining;
        emit(coeffs);
        coeffs[0] = 0;
        return;
    }
    for count in 0..=remaining / powers[j] {
        coeffs[j] = count;
        write_as_powers(remaining - count * powers[j], j, powers, coeffs, emit);
    }
    coeffs[j] = 0;
}

pub fn p_rank(class: &MaxElemAbelianClass) -> usize {
    class.p_rank()
}

/// Abelian `p`-group `Z_{p^n_1} x ... x Z_{p^n_m}` with `n_1 >= ... >= n_m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianPType {
    p: Prime,
    exponents: Vec<u32>,
}

impl AbelianPType {
    pub fn new(p: Prime, exponents: Vec<u32>) -> Result<Self> {
        if exponents.contains(&0) || exponents.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Subgroup(format!(
                "abelian type exponents must be positive and weakly decreasing: {exponents:?}"
            )));
        }
        Ok(AbelianPType { p, exponents })
    }

    pub fn trivial(p: Prime) -> Self {
        AbelianPType {
            p,
            exponents: Vec::new(),
        }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// `log_p` of the group order.
    pub fn order_exponent(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// `p^n_1 + ... + p^n_m`: the smallest degree admitting a faithful action.
    pub fn minimal_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| self.p.pow(e)).sum()
    }

    pub fn is_elementary(&self) -> bool {
        self.exponents.iter().all(|&e| e == 1)
    }

    /// Whether the group embeds in `S_m`.
    ///
    /// `sum p^n_i <= m` is necessary for an embedding; it is also sufficient,
    /// since the group acts faithfully on disjoint regular orbits of sizes `p^n_i`.
    pub fn embeds_in(&self, m: usize) -> bool {
        self.minimal_degree() <= m as u64
    }
}

impl fmt::Display for AbelianPType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let factors: Vec<String> = self
            .exponents
            .iter()
            .map(|&e| format!("Z{}", self.p.pow(e)))
            .collect();
        f.write_str(&factors.join("x"))
    }
}

impl Serialize for AbelianPType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exponents.serialize(s)
    }
}

pub fn abelian_type_embeds(t: &AbelianPType, m: usize) -> bool {
    t.embeds_in(m)
}

/// Every abelian type (the trivial one included) with `sum p^n_i <= m`,
/// in lexicographic order of exponent sequences.
pub fn enumerate_abelian_types(p: Prime, m: usize) -> Vec<AbelianPType> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_types(p, m as u64, u32::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn extend_types(p: Prime, budget: u64, max_exp: u32, current: &mut Vec<u32>, out: &mut Vec<AbelianPType>) {
    out.push(AbelianPType {
        p,
        exponents: current.clone(),
    });
    let mut e = 1;
    while e <= max_exp && p.pow(e) <= budget {
        current.push(e);
        extend_types(p, budget - p.pow(e), e, current, out);
        current.pop();
        e += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    fn coeffs(classes: &[MaxElemAbelianClass]) -> Vec<Vec<usize>> {
        classes.iter().map(|c| c.coefficients().to_vec()).collect()
    }

    #[test]
    fn classes_examples() {
        let c = max_elem_abelian_classes(9, p(3));
        assert_eq!(coeffs(&c), vec![vec![0, 3], vec![0, 0, 1]]);
        assert_eq!(c[0].group_description(), "V1(3)^3");
        assert_eq!(c[1].group_description(), "V2(3)");
        assert_eq!(c.iter().map(p_rank).collect::<Vec<_>>(), vec![3, 2]);

        assert_eq!(coeffs(&max_elem_abelian_classes(3, p(2))), vec![vec![1, 1]]);
        assert_eq!(
            coeffs(&max_elem_abelian_classes(4, p(2))),
            vec![vec![0, 2], vec![0, 0, 1]]
        );
    }

    #[test]
    fn fixed_points_only() {
        let c = max_elem_abelian_classes(2, p(3));
        assert_eq!(coeffs(&c), vec![vec![2]]);
        assert_eq!(c[0].p_rank(), 0);
        assert_eq!(c[0].group_description(), "1");
    }

    #[test]
    fn json_shape() {
        let c = &max_elem_abelian_classes(9, p(3))[0];
        assert_eq!(serde_json::to_string(c).unwrap(), r#"{"p":3,"n":9,"i":[0,3]}"#);
    }

    #[test]
    fn embedding_bound() {
        assert!(AbelianPType::new(p(2), vec![2]).unwrap().embeds_in(4));
        assert!(!AbelianPType::new(p(2), vec![1, 1]).unwrap().embeds_in(3));
        assert!(AbelianPType::trivial(p(5)).embeds_in(0));
        assert!(AbelianPType::new(p(2), vec![1, 2]).is_err());
        assert!(AbelianPType::new(p(2), vec![0]).is_err());
    }

    #[test]
    fn type_enumeration() {
        let types: Vec<Vec<u32>> = enumerate_abelian_types(p(2), 6)
            .iter()
            .map(|t| t.exponents().to_vec())
            .collect();
        assert_eq!(
            types,
            vec![vec![], vec![1], vec![1, 1], vec![1, 1, 1], vec![2], vec![2, 1]]
        );
        let types = enumerate_abelian_types(p(3), 3);
        assert_eq!(types.len(), 2);
        assert_eq!(types[1].exponents(), &[1]);
        assert_eq!(enumerate_abelian_types(p(5), 1), vec![AbelianPType::trivial(p(5))]);
    }

    #[test]
    fn display() {
        assert_eq!(AbelianPType::new(p(2), vec![2, 1]).unwrap().to_string(), "Z4xZ2");
        assert_eq!(AbelianPType::trivial(p(2)).to_string(), "1");
    }

    #[test]
    fn classes_move_n_minus_i0_points() {
        for q in [2u64, 3, 5] {
            for n in 1..=40 {
                for c in max_elem_abelian_classes(n, p(q)) {
                    let moved: usize = c
                        .factors()
                        .iter()
                        .map(|&(j, i)| i * (q as usize).pow(j as u32))
                        .sum();
                    assert_eq!(moved, n - c.fixed_points());
                    assert_eq!(c.degree(), n);
                }
            }
        }
    }

    #[test]
    fn max_rank_at_multiples_of_p() {
        for q in [2u64, 3, 5] {
            for w in 1..=12 {
                let classes = max_elem_abelian_classes(q as usize * w, p(q));
                let best = classes.iter().map(|c| c.p_rank()).max().unwrap();
                assert_eq!(best, w);
                assert!(classes.iter().any(|c| c.coefficients() == [0, w]));
            }
        }
    }
}
