//! Integer partitions and their Young diagrams.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::prime::Prime;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&x| x == 0) {
            return Err(Error::Shape(format!("part {} is zero", i + 1)));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "parts increase at position {} ({} < {})",
                i + 2,
                parts[i],
                parts[i + 1]
            )));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but also rejecting negative entries.
    pub fn from_ints(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                usize::try_from(x)
                    .map_err(|_| Error::Shape(format!("part {} is negative ({x})", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition {
            parts: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// `(value^mult)`.
    pub fn rectangle(value: usize, mult: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![value; mult],
        }
    }

    pub(crate) fn from_sorted_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the last row.
    #[inline]
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `|mu|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&x| x > j).count())
            .collect();
        Partition { parts }
    }

    /// Nodes `(row, col)`, 0-based, in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }

    pub fn hook_grid(&self) -> HookGrid {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|j| (len - j - 1) + (conj.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    /// Number of hook lengths divisible by `m`.
    pub fn count_hooks_divisible(&self, m: usize) -> Result<usize> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(self.hook_grid().iter().filter(|&h| h % m == 0).count())
    }

    /// No part is repeated `p` or more times.
    pub fn is_p_regular(&self, p: Prime) -> bool {
        let p = p.get() as usize;
        self.exponent_form().iter().all(|&(_, mult)| mult < p)
    }

    /// Distinct part values with their multiplicities, largest value first.
    pub fn exponent_form(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &x in &self.parts {
            match out.last_mut() {
                Some((v, mult)) if *v == x => *mult += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// Every distinct part and its multiplicity is divisible by `p`.
    ///
    /// The empty partition is not counted as a `(p x p)`-partition.
    pub fn is_pxp(&self, p: Prime) -> bool {
        let p = p.get() as usize;
        !self.is_empty()
            && self
                .exponent_form()
                .iter()
                .all(|&(v, mult)| v % p == 0 && mult % p == 0)
    }

    /// Shape test for partitions that are both 2-regular and 4-cores.
    ///
    /// Either the last part is 1 and the row differences read `3,...,3,1,...,1`,
    /// or the last part is 2 or 3 and every row difference is 3. The empty
    /// partition qualifies.
    pub fn is_two_regular_four_core_shape(&self) -> bool {
        let Some(&last) = self.parts.last() else {
            return true;
        };
        let diffs: Vec<usize> = self.parts.windows(2).map(|w| w[0] - w[1]).collect();
        match last {
            1 => {
                let threes = diffs.iter().take_while(|&&d| d == 3).count();
                diffs[threes..].iter().all(|&d| d == 1)
            }
            2 | 3 => diffs.iter().all(|&d| d == 3),
            _ => false,
        }
    }

    /// `mu` is an `m`-core: no hook length is divisible by `m`.
    pub fn is_core(&self, m: usize) -> bool {
        m >= 2 && self.hook_grid().iter().all(|h| h % m != 0)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::from_ints(&v)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// Exponent notation, e.g. `(7,1^3)`; the empty partition is `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (v, mult)) in self.exponent_form().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if mult == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{mult}")?;
            }
        }
        f.write_str(")")
    }
}

/// Hook lengths `h(i,j) = arm + leg + 1` laid out on the Young diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<usize>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Hook length at `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(i)?.get(j).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn first_column(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn max(&self) -> Option<usize> {
        self.iter().max()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(greedy_fill(n, n)),
        largest: None,
    }
}

/// Partitions of `n` whose largest part is exactly `k`, lexicographically decreasing.
///
/// Used to split enumeration across workers.
pub fn partitions_with_largest_part(n: usize, k: usize) -> Partitions {
    let current = if n == 0 && k == 0 {
        Some(Vec::new())
    } else if (1..=n).contains(&k) {
        let mut first = vec![k];
        first.extend(greedy_fill(n - k, k));
        Some(first)
    } else {
        None
    };
    Partitions {
        current,
        largest: Some(k),
    }
}

/// Filtered enumeration; see [`partitions`].
pub fn enumerate_partitions<F>(n: usize, filter: F) -> impl Iterator<Item = Partition>
where
    F: FnMut(&Partition) -> bool,
{
    partitions(n).filter(filter)
}

fn greedy_fill(mut n: usize, max: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    while n > 0 {
        let x = n.min(max);
        parts.push(x);
        n -= x;
    }
    parts
}

/// Iterator returned by [`partitions`] and [`partitions_with_largest_part`].
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    largest: Option<usize>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: decrease the last part exceeding 1 and refill greedily.
        if let Some(k) = cur.iter().rposition(|&x| x > 1) {
            let v = cur[k] - 1;
            let rest: usize = cur[k + 1..].iter().sum::<usize>() + 1;
            let mut next = cur[..k].to_vec();
            next.push(v);
            next.extend(greedy_fill(rest, v));
            if self.largest.is_none_or(|l| next[0] == l) {
                self.current = Some(next);
            }
        }
        Some(Partition { parts: cur })
    }
}
