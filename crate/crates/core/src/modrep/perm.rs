//! Permutations of `{0, .., n-1}` and tabloid permutation modules.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of tabloids.
pub const DEFAULT_TABLOID_BUDGET: usize = 200_000;

/// Largest degree the packed tabloid encoding supports.
pub const MAX_DEGREE: usize = 16;

/// A permutation in one-line notation: `i -> images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Permutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Product of the given cycles (0-based letters) on `n` points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(Error::Permutation(format!("letter {} exceeds degree {n}", a + 1)));
                }
                if touched[a] {
                    return Err(Error::Permutation(format!("letter {} repeated", a + 1)));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation with 1-based letters, e.g. `(1,2,3)(4,5)`.
    /// `()` is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Permutation(format!("expected '(' in {s:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Permutation(format!("unclosed cycle in {s:?}")));
            };
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|t| match t.trim().parse::<usize>() {
                        Ok(v) if v >= 1 => Ok(v - 1),
                        _ => Err(Error::Permutation(format!("bad letter {t:?} in {s:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    /// Nontrivial cycles, each starting at its smallest letter.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let letters: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", letters.join(","))?;
        }
        Ok(())
    }
}

/// A tabloid packed as the row index of each letter, 4 bits per letter.
pub type TabloidCode = u64;

/// The permutation module `M^mu` with basis the `mu`-tabloids.
#[derive(Clone, Debug)]
pub struct PermutationModule {
    mu: Partition,
    tabloids: Vec<TabloidCode>,
    index: HashMap<TabloidCode, usize>,
}

impl PermutationModule {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn degree(&self) -> usize {
        self.mu.size()
    }

    pub fn dimension(&self) -> usize {
        self.tabloids.len()
    }

    pub fn tabloids(&self) -> &[TabloidCode] {
        &self.tabloids
    }

    pub fn index_of(&self, t: TabloidCode) -> Option<usize> {
        self.index.get(&t).copied()
    }

    /// Row sets of the tabloid at index `i`, letters 0-based.
    pub fn rows_of(&self, i: usize) -> Vec<Vec<usize>> {
        let code = self.tabloids[i];
        let mut rows = vec![Vec::new(); self.mu.len()];
        for x in 0..self.degree() {
            rows[row_of(code, x)].push(x);
        }
        rows
    }

    /// Index of `g · T_i`.
    pub fn act(&self, g: &Permutation, i: usize) -> usize {
        let code = act_code(g, self.tabloids[i], self.degree());
        self.index[&code]
    }

    /// The permutation of tabloid indices induced by `g`.
    pub fn action(&self, g: &Permutation) -> Vec<usize> {
        (0..self.dimension()).map(|i| self.act(g, i)).collect()
    }
}

#[inline]
pub(crate) fn row_of(code: TabloidCode, letter: usize) -> usize {
    ((code >> (4 * letter)) & 0xF) as usize
}

#[inline]
pub(crate) fn act_code(g: &Permutation, code: TabloidCode, n: usize) -> TabloidCode {
    let mut out = 0;
    for x in 0..n {
        out |= (row_of(code, x) as u64) << (4 * g.apply(x));
    }
    out
}

/// Packs an assignment `letter -> row`.
pub(crate) fn encode(rows_of_letters: &[usize]) -> TabloidCode {
    rows_of_letters
        .iter()
        .enumerate()
        .fold(0, |acc, (x, &r)| acc | ((r as u64) << (4 * x)))
}

/// Number of `mu`-tabloids, `n! / prod mu_i!`, saturating.
pub fn tabloid_count(mu: &Partition) -> u128 {
    let mut remaining = mu.size() as u128;
    let mut total: u128 = 1;
    for &part in mu.parts() {
        // binomial(remaining, part), exact at each step
        let mut b: u128 = 1;
        for k in 0..part as u128 {
            b = b.saturating_mul(remaining - k) / (k + 1);
        }
        total = total.saturating_mul(b);
        remaining -= part as u128;
    }
    total
}

pub fn build_perm_module(mu: &Partition) -> Result<PermutationModule> {
    build_perm_module_with_budget(mu, DEFAULT_TABLOID_BUDGET)
}

/// Tabloids in lexicographic order of their sequence of sorted row sets.
pub fn build_perm_module_with_budget(mu: &Partition, budget: usize) -> Result<PermutationModule> {
    let n = mu.size();
    if n > MAX_DEGREE {
        return Err(Error::Budget {
            what: "degree",
            size: n as u128,
            limit: MAX_DEGREE as u128,
        });
    }
    let count = tabloid_count(mu);
    if count > budget as u128 {
        return Err(Error::Budget {
            what: "tabloids",
            size: count,
            limit: budget as u128,
        });
    }
    let mut tabloids = Vec::with_capacity(count as usize);
    let mut assignment = vec![usize::MAX; n];
    fill_rows(mu.parts(), 0, &mut assignment, &mut tabloids);
    let index = tabloids.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    Ok(PermutationModule {
        mu: mu.clone(),
        tabloids,
        index,
    })
}

fn fill_rows(parts: &[usize], row: usize, assignment: &mut [usize], out: &mut Vec<TabloidCode>) {
    if row == parts.len() {
        out.push(encode(assignment));
        return;
    }
    let free: Vec<usize> = (0..assignment.len())
        .filter(|&x| assignment[x] == usize::MAX)
        .collect();
    let mut chosen = Vec::with_capacity(parts[row]);
    choose(&free, 0, parts[row], &mut chosen, &mut |set| {
        for &x in set {
            assignment[x] = row;
        }
        fill_rows(parts, row + 1, assignment, out);
        for &x in set {
            assignment[x] = usize::MAX;
        }
    });
}

fn choose(
    pool: &[usize],
    start: usize,
    k: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..=pool.len().saturating_sub(need) {
        if pool.len() < need {
            break;
        }
        chosen.push(pool[i]);
        choose(pool, i + 1, k, chosen, visit);
        chosen.pop();
    }
}
