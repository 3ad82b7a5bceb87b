//! Elementary abelian subgroups, their action on a module, and shifted units.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::field::{Elem, GaloisField};
use super::matrix::GfMatrix;
use super::perm::Permutation;
use super::specht::SpechtRealization;
use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::subgroup::MaxElemAbelianClass;

const MAX_GROUP_ORDER: u64 = 1 << 16;

/// An elementary abelian `p`-subgroup of `S_n` with a chosen basis
/// `g_1, .., g_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryAbelianSubgroup {
    p: Prime,
    degree: usize,
    generators: Vec<Permutation>,
}

impl ElementaryAbelianSubgroup {
    /// Checks that the generators have order `p`, commute, and are independent.
    pub fn new(p: Prime, generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators.first().map_or(0, Permutation::degree);
        let pp = p.get();
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Subgroup("generators act on different degrees".into()));
            }
            if g.is_identity() || !g.pow(pp).is_identity() {
                return Err(Error::Subgroup(format!("{g} does not have order {p}")));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            for h in &generators[i + 1..] {
                if g.compose(h) != h.compose(g) {
                    return Err(Error::Subgroup(format!("{g} and {h} do not commute")));
                }
            }
        }
        let k = generators.len() as u32;
        let order = pp.checked_pow(k).filter(|&o| o <= MAX_GROUP_ORDER).ok_or_else(|| {
            Error::Subgroup(format!("order {p}^{k} is too large to verify"))
        })?;
        let mut elements = HashSet::new();
        elements.insert(Permutation::identity(degree));
        for g in &generators {
            let current: Vec<Permutation> = elements.iter().cloned().collect();
            let mut power = g.clone();
            for _ in 1..pp {
                for x in &current {
                    elements.insert(power.compose(x));
                }
                power = g.compose(&power);
            }
        }
        if elements.len() as u64 != order {
            return Err(Error::Subgroup("generators are not independent".into()));
        }
        Ok(ElementaryAbelianSubgroup {
            p,
            degree,
            generators,
        })
    }

    /// `<c_1, .., c_k>` for disjoint `p`-cycles on `n` points (0-based letters).
    pub fn disjoint_cycles(p: Prime, n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut used = HashSet::new();
        for c in cycles {
            if c.len() as u64 != p.get() {
                return Err(Error::Subgroup(format!("cycle of length {} is not a {p}-cycle", c.len())));
            }
            for &x in c {
                if !used.insert(x) {
                    return Err(Error::Subgroup(format!("cycle supports overlap at letter {}", x + 1)));
                }
            }
        }
        let generators = cycles
            .iter()
            .map(|c| Permutation::from_cycles(n, std::slice::from_ref(c)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, generators)
    }

    /// `V_1(p)^k` on the first `k p` of `n` points.
    pub fn v1_power(p: Prime, k: usize, n: usize) -> Result<Self> {
        let pp = p.get() as usize;
        let cycles: Vec<Vec<usize>> = (0..k).map(|i| (i * pp..(i + 1) * pp).collect()).collect();
        Self::disjoint_cycles(p, n, &cycles)
    }

    /// `V_m(p)` acting regularly on the points `offset .. offset + p^m`.
    pub fn regular(p: Prime, m: u32, offset: usize, n: usize) -> Result<Self> {
        Self::new(p, regular_generators(p, m, offset, n)?)
    }

    /// The standard representative of a class, factors laid out left to right
    /// in increasing `j`, fixed points last.
    pub fn from_class(class: &MaxElemAbelianClass, n: usize) -> Result<Self> {
        if class.degree() > n {
            return Err(Error::Subgroup(format!(
                "{} needs {} points but the degree is {n}",
                class.group_description(),
                class.degree()
            )));
        }
        let p = class.p();
        let mut generators = Vec::new();
        let mut offset = 0;
        for (j, count) in class.factors() {
            for _ in 0..count {
                generators.extend(regular_generators(p, j as u32, offset, n)?);
                offset += p.pow(j as u32) as usize;
            }
        }
        Self::new(p, generators)
    }

    /// Parses either a product of factors such as `V1^3xV2` (also `V1(3)^3 x V2(3)`),
    /// or `;`-separated generators in 1-based cycle notation such as
    /// `(1,2,3);(4,5,6)`.
    pub fn parse_spec(spec: &str, p: Prime, n: usize) -> Result<Self> {
        let spec = spec.trim();
        if spec.contains('(') && !spec.starts_with(['V', 'v']) {
            let generators = spec
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| Permutation::parse(s, n))
                .collect::<Result<Vec<_>>>()?;
            return Self::new(p, generators);
        }
        let mut generators = Vec::new();
        let mut offset = 0;
        for token in spec.split(['x', '*']) {
            let (m, count) = parse_factor(token.trim(), p)?;
            for _ in 0..count {
                generators.extend(regular_generators(p, m, offset, n)?);
                offset += p.pow(m) as usize;
            }
        }
        Self::new(p, generators)
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
}

impl fmt::Display for ElementaryAbelianSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

fn parse_factor(token: &str, p: Prime) -> Result<(u32, usize)> {
    let bad = || Error::Subgroup(format!("cannot parse factor {token:?}"));
    let body = token.strip_prefix(['V', 'v']).ok_or_else(bad)?;
    let (head, count) = match body.split_once('^') {
        Some((h, c)) => (h, c.trim().parse::<usize>().map_err(|_| bad())?),
        None => (body, 1),
    };
    let (m, prime) = match head.split_once('(') {
        Some((m, rest)) => (m, Some(rest.strip_suffix(')').ok_or_else(bad)?)),
        None => (head, None),
    };
    let m: u32 = m.trim().parse().map_err(|_| bad())?;
    if m == 0 {
        return Err(bad());
    }
    if let Some(q) = prime {
        if q.trim().parse::<u64>().ok() != Some(p.get()) {
            return Err(Error::Subgroup(format!("factor {token:?} does not match p = {p}")));
        }
    }
    Ok((m, count))
}

/// Points `offset + label(a)` with `label(a) = sum a_i p^(m-i)`; `g_i` adds one
/// to coordinate `i`.
fn regular_generators(p: Prime, m: u32, offset: usize, n: usize) -> Result<Vec<Permutation>> {
    let pp = p.get() as usize;
    let size = pp.pow(m);
    if offset + size > n {
        return Err(Error::Subgroup(format!(
            "V{m}({p}) at offset {offset} does not fit in degree {n}"
        )));
    }
    (0..m)
        .map(|i| {
            let stride = pp.pow(m - 1 - i);
            let mut images: Vec<usize> = (0..n).collect();
            for label in 0..size {
                let digit = (label / stride) % pp;
                let moved = label - digit * stride + ((digit + 1) % pp) * stride;
                images[offset + label] = offset + moved;
            }
            Permutation::from_images(images)
        })
        .collect()
}

/// A module for an elementary abelian group, stored as the nilpotent
/// operators `g_i - 1`.
#[derive(Clone, Debug)]
pub struct EModule {
    field: Arc<GaloisField>,
    dimension: usize,
    nilpotents: Vec<GfMatrix>,
}

impl EModule {
    pub fn from_generators(field: Arc<GaloisField>, dimension: usize, generators: Vec<GfMatrix>) -> Result<Self> {
        for g in &generators {
            if g.rows() != dimension || g.cols() != dimension {
                return Err(Error::SizeMismatch(g.rows(), dimension));
            }
        }
        Ok(EModule {
            field,
            dimension,
            nilpotents: generators.iter().map(GfMatrix::minus_identity).collect(),
        })
    }

    /// Restriction of a Specht module to `e`.
    pub fn restrict(realization: &SpechtRealization, e: &ElementaryAbelianSubgroup) -> Result<Self> {
        let n = realization.mu().size();
        if e.degree() > n && e.generators().iter().any(|g| g.support().iter().any(|&x| x >= n)) {
            return Err(Error::Subgroup(format!("subgroup moves points beyond degree {n}")));
        }
        let gens = e
            .generators()
            .iter()
            .map(|g| {
                let g = if g.degree() > n {
                    Permutation::from_images(g.images()[..n].to_vec())?
                } else {
                    g.clone()
                };
                Ok(realization.action_matrix(&g))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(Arc::clone(realization.field()), realization.dimension(), gens)
    }

    /// The permutation module of `e` acting on `0 .. degree`.
    pub fn permutation(field: Arc<GaloisField>, e: &ElementaryAbelianSubgroup) -> Result<Self> {
        let d = e.degree();
        let gens = e
            .generators()
            .iter()
            .map(|g| {
                let mut m = GfMatrix::zeros(Arc::clone(&field), d, d);
                for x in 0..d {
                    m.set(g.apply(x), x, 1);
                }
                m
            })
            .collect();
        Self::from_generators(field, d, gens)
    }

    pub fn direct_sum(&self, other: &EModule) -> Result<EModule> {
        if self.rank() != other.rank() {
            return Err(Error::SizeMismatch(self.rank(), other.rank()));
        }
        Ok(EModule {
            field: Arc::clone(&self.field),
            dimension: self.dimension + other.dimension,
            nilpotents: self
                .nilpotents
                .iter()
                .zip(&other.nilpotents)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        })
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn rank(&self) -> usize {
        self.nilpotents.len()
    }

    /// `u_alpha - 1 = sum alpha_i (g_i - 1)`.
    pub fn shifted_nilpotent(&self, alpha: &[Elem]) -> Result<GfMatrix> {
        if alpha.len() != self.rank() {
            return Err(Error::Point(format!(
                "point has {} coordinates, subgroup rank is {}",
                alpha.len(),
                self.rank()
            )));
        }
        if alpha.iter().any(|&a| a as usize >= self.field.order()) {
            return Err(Error::Point(format!("{alpha:?} has entries outside the field")));
        }
        if alpha.iter().all(|&a| a == 0) {
            return Err(Error::Point("the zero point has no shifted unit".into()));
        }
        let mut acc = GfMatrix::zeros(Arc::clone(&self.field), self.dimension, self.dimension);
        for (n, &a) in self.nilpotents.iter().zip(alpha) {
            if a != 0 {
                acc = acc.add_scaled(n, a);
            }
        }
        Ok(acc)
    }

    /// `u_alpha = 1 + sum alpha_i (g_i - 1)`.
    pub fn u_alpha(&self, alpha: &[Elem]) -> Result<GfMatrix> {
        let n = self.shifted_nilpotent(alpha)?;
        Ok(n.add_scaled(&GfMatrix::identity(Arc::clone(&self.field), self.dimension), 1))
    }
}

pub fn u_alpha_matrix(realization: &SpechtRealization, e: &ElementaryAbelianSubgroup, alpha: &[Elem]) -> Result<GfMatrix> {
    EModule::restrict(realization, e)?.u_alpha(alpha)
}
