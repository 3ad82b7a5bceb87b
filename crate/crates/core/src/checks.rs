//! Independent oracles and exhaustive property suites.
//!
//! The oracles here deliberately avoid the fast paths used elsewhere in the
//! crate (abacus slides, bottom-up stripping, closed forms), so that each
//! suite compares two unrelated computations.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::m_core_weight;
use crate::dimension::specht_dimension;
use crate::expansion::{has_horizontal_hook, p_adic_expansion, rho, strip_horizontal_hooks};
use crate::partition::{partitions, Partition};
use crate::prime::Prime;
use crate::subgroup::{enumerate_abelian_types, max_elem_abelian_classes, AbelianPType};
use crate::tableau::standard_tableaux;
use crate::vertex::{gate_types, slack_exponent};

/// A failed comparison inside a property suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub suite: &'static str,
    pub mu: Partition,
    pub parameter: u64,
    pub detail: String,
}

/// Chooses one index below the given bound.
pub type Chooser<'a> = &'a mut dyn FnMut(usize) -> usize;

/// Cells `(i, j)` whose hook length is `m`.
fn hooks_of_length(mu: &Partition, m: usize) -> Vec<(usize, usize)> {
    let grid = mu.hook_grid();
    mu.nodes().filter(|&(i, j)| grid.get(i, j) == Some(m)).collect()
}

/// Removes the rim hook of the cell `(i, j)`.
pub fn remove_rim_hook(mu: &Partition, i: usize, j: usize) -> Partition {
    let conj = mu.conjugate();
    let leg = conj.part(j) - i - 1;
    let mut parts = mu.parts().to_vec();
    for (r, slot) in parts.iter_mut().enumerate().skip(i).take(leg) {
        *slot = mu.part(r + 1) - 1;
    }
    parts[i + leg] = j;
    trimmed(parts)
}

/// `m`-core and `m`-weight by removing rim `m`-hooks one at a time.
pub fn rim_hook_core_weight(mu: &Partition, m: usize, choose: Chooser<'_>) -> (Partition, usize) {
    let mut cur = mu.clone();
    let mut weight = 0;
    loop {
        let cells = hooks_of_length(&cur, m);
        if cells.is_empty() {
            return (cur, weight);
        }
        let (i, j) = cells[choose(cells.len()) % cells.len()];
        cur = remove_rim_hook(&cur, i, j);
        weight += 1;
    }
}

fn strip_zeros(mut parts: Vec<usize>) -> Vec<usize> {
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

fn trimmed(parts: Vec<usize>) -> Partition {
    Partition::new(strip_zeros(parts)).expect("weakly decreasing")
}

fn first(_: usize) -> usize {
    0
}

fn last(n: usize) -> usize {
    n - 1
}

/// Hook count, abacus weight and rim-hook weight agree, and both cores match.
pub fn hook_weight_suite(max_n: usize, moduli: &[usize]) -> Vec<Counterexample> {
    by_size(max_n, |mu| {
        let mut out = Vec::new();
        for &m in moduli {
            let hooks = mu.count_hooks_divisible(m).expect("m >= 2");
            let cw = m_core_weight(mu, m).expect("m >= 2");
            for (name, pick) in [("first", first as fn(usize) -> usize), ("last", last)] {
                let (core, w) = rim_hook_core_weight(mu, m, &mut { pick });
                if hooks != cw.weight || w != cw.weight || core != cw.core {
                    out.push(Counterexample {
                        suite: "hook-weight",
                        mu: mu.clone(),
                        parameter: m as u64,
                        detail: format!(
                            "hooks {hooks}, abacus weight {} core {}, stripping ({name}) weight {w} core {core}",
                            cw.weight, cw.core
                        ),
                    });
                }
            }
        }
        out
    })
}

/// The explicit 2-regular 4-core shape family equals the 2-regular 4-cores.
pub fn lemma_4core_suite(max_n: usize) -> Vec<Counterexample> {
    let two = Prime::new(2).expect("prime");
    by_size(max_n, |mu| {
        let (core, _) = rim_hook_core_weight(mu, 4, &mut first);
        let expected = mu.is_p_regular(two) && core == *mu;
        let shape = mu.is_two_regular_four_core_shape();
        if shape == expected {
            Vec::new()
        } else {
            vec![Counterexample {
                suite: "lemma-4core",
                mu: mu.clone(),
                parameter: 2,
                detail: format!("shape predicate {shape}, 2-regular 4-core {expected}"),
            }]
        }
    })
}

/// Number of standard tableaux by the branching rule.
pub fn branching_count(mu: &Partition, memo: &mut HashMap<Partition, u128>) -> u128 {
    if mu.size() <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(mu) {
        return v;
    }
    let mut total = 0;
    for i in 0..mu.len() {
        if mu.part(i) > mu.part(i + 1) {
            let mut parts = mu.parts().to_vec();
            parts[i] -= 1;
            total += branching_count(&trimmed(parts), memo);
        }
    }
    memo.insert(mu.clone(), total);
    total
}

/// Hook formula against explicit tableau enumeration (small sizes) and the
/// branching rule.
pub fn dimension_suite(max_n: usize) -> Vec<Counterexample> {
    by_size(max_n, |mu| {
        let hook = specht_dimension(mu).to_u128();
        let branch = branching_count(mu, &mut HashMap::new());
        let syt = (mu.size() <= 10).then(|| standard_tableaux(mu).len() as u128);
        let ok = hook == Some(branch) && syt.is_none_or(|s| Some(s) == hook);
        if ok {
            Vec::new()
        } else {
            vec![Counterexample {
                suite: "dim-oracle",
                mu: mu.clone(),
                parameter: 0,
                detail: format!("hook formula {hook:?}, branching {branch}, tableaux {syt:?}"),
            }]
        }
    })
}

/// Strips single horizontal `p`-hooks in the order picked by `choose`.
/// Returns the stripped partition and per-row removal counts.
pub fn strip_one_at_a_time(mu: &Partition, p: Prime, choose: Chooser<'_>) -> (Partition, Vec<usize>) {
    let pp = p.get() as usize;
    let mut parts = mu.parts().to_vec();
    let mut removed = vec![0; parts.len()];
    loop {
        let rows: Vec<usize> = (0..parts.len())
            .filter(|&j| parts[j] >= parts.get(j + 1).copied().unwrap_or(0) + pp)
            .collect();
        if rows.is_empty() {
            break;
        }
        let j = rows[choose(rows.len()) % rows.len()];
        parts[j] -= pp;
        removed[j] += 1;
    }
    (trimmed(parts), removed)
}

/// Round trip, hook-free layers, size of `rho`, and order independence of stripping.
pub fn expansion_suite(max_n: usize, primes: &[Prime]) -> Vec<Counterexample> {
    by_size(max_n, |mu| {
        let mut out = Vec::new();
        for &p in primes {
            let mut fail = |detail: String| {
                out.push(Counterexample {
                    suite: "expansion",
                    mu: mu.clone(),
                    parameter: p.get(),
                    detail,
                })
            };
            let exp = p_adic_expansion(mu, p);
            if exp.reconstruct() != *mu {
                fail(format!("layers {:?} do not reconstruct", exp.layers));
            }
            if let Some(bad) = exp.layers.iter().find(|l| has_horizontal_hook(l, p)) {
                fail(format!("layer {bad} has a horizontal {p}-hook"));
            }
            if rho(mu, p).total() != mu.size() {
                fail("rho does not sum to |mu|".into());
            }
            let (rest, quotient) = strip_horizontal_hooks(mu, p);
            for pick in [first as fn(usize) -> usize, last] {
                let (r, removed) = strip_one_at_a_time(mu, p, &mut { pick });
                let q = Partition::new(strip_zeros(removed)).ok();
                if r != rest || q.as_ref() != Some(&quotient) {
                    fail(format!("stripping orders disagree: {rest} vs {r}"));
                }
            }
        }
        out
    })
}

/// Every `p`-group type inside `S_{pw}` meeting the divisibility and
/// embedding bounds for some complexity `c <= rank`, tested directly.
pub fn brute_force_gate(p: Prime, weight: usize, slack: usize) -> Vec<AbelianPType> {
    let degree = p.get() as usize * weight;
    enumerate_abelian_types(p, degree)
        .into_iter()
        .filter(|t| {
            let ns = t.exponents();
            let fits = t.minimal_degree() <= degree as u64;
            let divisible = (0..=ns.len()).any(|c| {
                let head: usize = ns[..c].iter().map(|&n| n as usize).sum();
                slack + weight <= head
            });
            fits && divisible
        })
        .collect()
}

/// Closed-form gate against the brute-force oracle for every `(w, s)` that
/// occurs among partitions up to `max_n`, plus the shape of the survivors.
pub fn gate_suite(max_n: usize, primes: &[Prime]) -> Vec<Counterexample> {
    let all: Vec<Partition> = (0..=max_n).flat_map(partitions).collect();
    let mut out = Vec::new();
    for &p in primes {
        let mut seen: HashMap<(usize, usize), Partition> = HashMap::new();
        for mu in &all {
            let w = m_core_weight(mu, p.get() as usize).expect("p >= 2").weight;
            let s = slack_exponent(mu, p);
            seen.entry((w, s)).or_insert_with(|| mu.clone());
        }
        let mut keys: Vec<_> = seen.into_iter().collect();
        keys.sort();
        let bad: Vec<Counterexample> = keys
            .par_iter()
            .filter_map(|((w, s), mu)| {
                let (w, s) = (*w, *s);
                let closed = gate_types(p, w, s);
                let mut brute = brute_force_gate(p, w, s);
                brute.sort();
                let allowed = if p.get() == 2 { 2 } else { 1 };
                let shape_ok = closed.iter().all(|t| {
                    let sum: u32 = t.exponents().iter().sum();
                    sum as usize == w && t.exponents().iter().all(|&n| n <= allowed)
                });
                let ok = closed == brute && shape_ok && (s == 0 || closed.is_empty());
                (!ok).then(|| Counterexample {
                    suite: "gate",
                    mu: mu.clone(),
                    parameter: p.get(),
                    detail: format!("weight {w}, slack {s}: closed form {closed:?}, brute force {brute:?}"),
                })
            })
            .collect();
        out.extend(bad);
    }
    out
}

/// Number of ways to write `n = i_0 + i_1 p + i_2 p^2 + ...` with `i_0 < p`,
/// by direct enumeration of the digits from the top power down.
pub fn digit_enumeration_count(n: usize, p: Prime) -> usize {
    fn go(n: usize, powers: &[usize], p: usize) -> usize {
        match powers.split_last() {
            None => usize::from(n < p),
            Some((&top, rest)) => (0..=n / top).map(|i| go(n - i * top, rest, p)).sum(),
        }
    }
    let pp = p.get() as usize;
    let mut powers = Vec::new();
    let mut q = pp;
    while q <= n {
        powers.push(q);
        q *= pp;
    }
    go(n, &powers, pp)
}

/// Class counts against the digit-enumeration oracle.
pub fn class_count_suite(max_n: usize, primes: &[Prime]) -> Vec<(usize, Prime, usize, usize)> {
    let mut bad = Vec::new();
    for n in 0..=max_n {
        for &p in primes {
            let a = max_elem_abelian_classes(n, p).len();
            let b = digit_enumeration_count(n, p);
            if a != b {
                bad.push((n, p, a, b));
            }
        }
    }
    bad
}

fn by_size<F>(max_n: usize, check: F) -> Vec<Counterexample>
where
    F: Fn(&Partition) -> Vec<Counterexample> + Sync,
{
    let all: Vec<Partition> = (0..=max_n).flat_map(partitions).collect();
    all.par_iter().flat_map_iter(&check).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(remove_rim_hook(&part(&[2, 1]), 0, 1), part(&[1, 1]));
        assert_eq!(remove_rim_hook(&part(&[3, 2, 2]), 0, 0), part(&[1, 1]));
        assert_eq!(remove_rim_hook(&part(&[4, 3, 1]), 0, 1), part(&[2, 1, 1]));
        let (core, w) = rim_hook_core_weight(&part(&[7, 1, 1, 1]), 3, &mut first);
        assert_eq!((core, w), (Partition::row(1), 3));
    }

    #[test]
    fn digit_counts() {
        assert_eq!(digit_enumeration_count(9, Prime::new(3).unwrap()), 2);
        assert_eq!(digit_enumeration_count(4, Prime::new(2).unwrap()), 2);
        assert_eq!(digit_enumeration_count(2, Prime::new(3).unwrap()), 1);
    }

    #[test]
    fn small_suites_are_clean() {
        let ps: Vec<Prime> = [2, 3].iter().map(|&q| Prime::new(q).unwrap()).collect();
        assert!(hook_weight_suite(10, &[2, 3, 4]).is_empty());
        assert!(lemma_4core_suite(12).is_empty());
        assert!(dimension_suite(9).is_empty());
        assert!(expansion_suite(10, &ps).is_empty());
        assert!(gate_suite(10, &ps).is_empty());
        assert!(class_count_suite(20, &ps).is_empty());
    }
}
