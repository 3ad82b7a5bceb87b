//! Rank-variety sweeps over rational points and complexity lower bounds.

use std::io;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::field::{Elem, GaloisField};
use super::jordan::{profile_of_nilpotent, JordanProfile};
use super::perm::DEFAULT_TABLOID_BUDGET;
use super::specht::{specht_basis_over, SpechtRealization, DEFAULT_BASIS_BUDGET};
use super::unit::{EModule, ElementaryAbelianSubgroup};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;
use crate::subgroup::MaxElemAbelianClass;

/// Size limits for realizations and sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub tabloids: usize,
    pub basis_entries: usize,
    pub sweep_points: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            tabloids: DEFAULT_TABLOID_BUDGET,
            basis_entries: DEFAULT_BASIS_BUDGET,
            sweep_points: 100_000,
        }
    }
}

/// One swept point and the Jordan profile of `u_alpha` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    pub alpha: Vec<Elem>,
    pub profile: JordanProfile,
}

impl PointRecord {
    pub fn is_projective(&self) -> bool {
        self.profile.is_projective()
    }
}

/// Nonzero points of `GF(q)^k` in lexicographic order, first coordinate most
/// significant.
pub fn nonzero_points(q: usize, k: usize) -> impl Iterator<Item = Vec<Elem>> {
    let total = point_count(q, k);
    (1..total).map(move |t| point_at(q, k, t))
}

fn point_count(q: usize, k: usize) -> u128 {
    (q as u128).saturating_pow(k as u32)
}

fn point_at(q: usize, k: usize, mut t: u128) -> Vec<Elem> {
    let mut alpha = vec![0; k];
    for slot in alpha.iter_mut().rev() {
        *slot = (t % q as u128) as Elem;
        t /= q as u128;
    }
    alpha
}

fn check_sweep_budget(q: usize, k: usize, budget: usize) -> Result<u128> {
    let size = point_count(q, k) - 1;
    if size > budget as u128 {
        return Err(Error::Budget {
            what: "sweep points",
            size,
            limit: budget as u128,
        });
    }
    Ok(size)
}

/// Jordan profile at every nonzero point, in canonical order.
pub fn sweep(module: &EModule, budget: usize) -> Result<Vec<PointRecord>> {
    let q = module.field().order();
    let k = module.rank();
    let size = check_sweep_budget(q, k, budget)?;
    let p = module.field().characteristic();
    (1..=size as u64)
        .into_par_iter()
        .map(|t| {
            let alpha = point_at(q, k, t as u128);
            let n = module.shifted_nilpotent(&alpha)?;
            let profile = profile_of_nilpotent(&n, p)?;
            Ok(PointRecord { alpha, profile })
        })
        .collect()
}

/// Non-projective nonzero points of `module`. When `p` does not divide the
/// dimension no point can be projective and the sweep is skipped.
pub fn non_projective_points(module: &EModule, budget: usize) -> Result<Vec<Vec<Elem>>> {
    let q = module.field().order();
    let k = module.rank();
    check_sweep_budget(q, k, budget)?;
    let p = module.field().characteristic().get() as usize;
    if !module.dimension().is_multiple_of(p) {
        return Ok(nonzero_points(q, k).collect());
    }
    Ok(sweep(module, budget)?
        .into_iter()
        .filter(|r| !r.is_projective())
        .map(|r| r.alpha)
        .collect())
}

pub fn realize(mu: &Partition, p: Prime, e: u32, budgets: &Budgets) -> Result<SpechtRealization> {
    let field = Arc::new(GaloisField::new(p, e)?);
    specht_basis_over(mu, field, budgets.tabloids, budgets.basis_entries)
}

/// The non-projective `GF(p^e)`-points of `V_E(S^mu)` minus zero.
pub fn rank_variety_points(
    mu: &Partition,
    p: Prime,
    e_group: &ElementaryAbelianSubgroup,
    e: u32,
) -> Result<Vec<Vec<Elem>>> {
    rank_variety_points_with(mu, p, e_group, e, &Budgets::default())
}

pub fn rank_variety_points_with(
    mu: &Partition,
    p: Prime,
    e_group: &ElementaryAbelianSubgroup,
    e: u32,
    budgets: &Budgets,
) -> Result<Vec<Vec<Elem>>> {
    let q = (p.get() as usize).pow(e);
    check_sweep_budget(q, e_group.rank(), budgets.sweep_points)?;
    let r = realize(mu, p, e, budgets)?;
    let module = EModule::restrict(&r, e_group)?;
    non_projective_points(&module, budgets.sweep_points)
}

/// Largest `j` such that some coordinate `j`-subspace has all its nonzero
/// points in `points`; `k` when every point is listed.
pub fn certified_dimension(q: usize, k: usize, points: &[Vec<Elem>]) -> usize {
    let listed: std::collections::HashSet<&[Elem]> = points.iter().map(Vec::as_slice).collect();
    if listed.len() as u128 == point_count(q, k) - 1 {
        return k;
    }
    for j in (1..k).rev() {
        let full = subsets(k, j).into_iter().any(|coords| {
            nonzero_points(q, j).all(|sub| {
                let mut alpha = vec![0; k];
                for (&c, &v) in coords.iter().zip(&sub) {
                    alpha[c] = v;
                }
                listed.contains(alpha.as_slice())
            })
        });
        if full {
            return j;
        }
    }
    0
}

fn subsets(k: usize, j: usize) -> Vec<Vec<usize>> {
    (0u32..1 << k)
        .filter(|m| m.count_ones() as usize == j)
        .map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Certified lower bound for one subgroup class.
#[derive(Clone, Debug, Serialize)]
pub struct ClassBound {
    pub class: MaxElemAbelianClass,
    pub rank: usize,
    pub non_projective: usize,
    pub points: u128,
    pub bound: usize,
}

/// Per-class detail behind [`complexity_lower_bound`].
pub fn class_bounds(
    mu: &Partition,
    p: Prime,
    classes: &[MaxElemAbelianClass],
    e: u32,
    budgets: &Budgets,
) -> Result<Vec<ClassBound>> {
    let q = (p.get() as usize).pow(e);
    for c in classes {
        check_sweep_budget(q, c.p_rank(), budgets.sweep_points)?;
    }
    let r = realize(mu, p, e, budgets)?;
    classes
        .iter()
        .map(|class| {
            let k = class.p_rank();
            if k == 0 {
                return Ok(ClassBound {
                    class: class.clone(),
                    rank: 0,
                    non_projective: 0,
                    points: 0,
                    bound: 0,
                });
            }
            let group = ElementaryAbelianSubgroup::from_class(class, mu.size())?;
            let module = EModule::restrict(&r, &group)?;
            let points = non_projective_points(&module, budgets.sweep_points)?;
            Ok(ClassBound {
                class: class.clone(),
                rank: k,
                non_projective: points.len(),
                points: point_count(q, k) - 1,
                bound: certified_dimension(q, k, &points),
            })
        })
        .collect()
}

/// Max over the classes of the certified dimension of the swept rank variety.
pub fn complexity_lower_bound(
    mu: &Partition,
    p: Prime,
    classes: &[MaxElemAbelianClass],
    e: u32,
) -> Result<usize> {
    complexity_lower_bound_with(mu, p, classes, e, &Budgets::default())
}

pub fn complexity_lower_bound_with(
    mu: &Partition,
    p: Prime,
    classes: &[MaxElemAbelianClass],
    e: u32,
    budgets: &Budgets,
) -> Result<usize> {
    Ok(class_bounds(mu, p, classes, e, budgets)?
        .iter()
        .map(|b| b.bound)
        .max()
        .unwrap_or(0))
}

/// Writes sweep records as CSV: `alpha,b1,..,bp,projective`, with `alpha`
/// the `;`-joined coordinates.
pub fn write_sweep_csv<W: io::Write>(records: &[PointRecord], p: Prime, out: W) -> Result<()> {
    let to_err = |e: csv::Error| Error::Point(format!("csv output failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["alpha".to_string()];
    header.extend((1..=p.get()).map(|j| format!("b{j}")));
    header.push("projective".into());
    w.write_record(&header).map_err(to_err)?;
    for r in records {
        let alpha: Vec<String> = r.alpha.iter().map(ToString::to_string).collect();
        let mut row = vec![alpha.join(";")];
        row.extend(r.profile.blocks().iter().map(ToString::to_string));
        row.push(r.is_projective().to_string());
        w.write_record(&row).map_err(to_err)?;
    }
    w.flush().map_err(|e| Error::Point(format!("csv output failed: {e}")))?;
    Ok(())
}
