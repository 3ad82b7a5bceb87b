//! Specht modules realized as polytabloid spans inside `M^mu`.

use std::sync::Arc;

use super::field::GaloisField;
use super::matrix::GfMatrix;
use super::perm::{build_perm_module_with_budget, Permutation, PermutationModule, TabloidCode};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::Prime;
use crate::tableau::standard_tableaux;

/// Default cap on `dim S^mu * dim M^mu` for the dense basis matrix.
pub const DEFAULT_BASIS_BUDGET: usize = 64_000_000;

/// An echelonized basis of `S^mu` inside the tabloid space over `GF(p^e)`.
#[derive(Clone, Debug)]
pub struct SpechtRealization {
    field: Arc<GaloisField>,
    module: PermutationModule,
    basis: GfMatrix,
    pivots: Vec<usize>,
}

impl SpechtRealization {
    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn mu(&self) -> &Partition {
        self.module.mu()
    }

    pub fn module(&self) -> &PermutationModule {
        &self.module
    }

    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    /// Rows are the basis vectors in tabloid coordinates.
    pub fn basis(&self) -> &GfMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Matrix of `g` in the echelon basis; column `j` is the image of basis vector `j`.
    pub fn action_matrix(&self, g: &Permutation) -> GfMatrix {
        let d = self.dimension();
        let g = g.extend(self.module.degree().max(g.degree()));
        let ginv = g.inverse();
        let mut a = GfMatrix::zeros(Arc::clone(&self.field), d, d);
        for (k, &pk) in self.pivots.iter().enumerate() {
            let src = self.module.act(&ginv, pk);
            for j in 0..d {
                a.set(k, j, self.basis.get(j, src));
            }
        }
        a
    }
}

pub fn specht_basis(mu: &Partition, p: Prime, e: u32) -> Result<SpechtRealization> {
    let field = Arc::new(GaloisField::new(p, e)?);
    specht_basis_over(mu, field, super::perm::DEFAULT_TABLOID_BUDGET, DEFAULT_BASIS_BUDGET)
}

pub fn specht_basis_over(
    mu: &Partition,
    field: Arc<GaloisField>,
    tabloid_budget: usize,
    basis_budget: usize,
) -> Result<SpechtRealization> {
    let module = build_perm_module_with_budget(mu, tabloid_budget)?;
    let tableaux = standard_tableaux(mu);
    let entries = (tableaux.len() as u128) * (module.dimension() as u128);
    if entries > basis_budget as u128 {
        return Err(Error::Budget {
            what: "basis entries",
            size: entries,
            limit: basis_budget as u128,
        });
    }
    let minus_one = field.neg(1);
    let mut m = GfMatrix::zeros(Arc::clone(&field), tableaux.len(), module.dimension());
    for (r, t) in tableaux.iter().enumerate() {
        let columns: Vec<Vec<(TabloidCode, bool)>> = t.columns().iter().map(|c| column_terms(c)).collect();
        let mut stack = vec![(0usize, 0u64, false)];
        while let Some((depth, code, odd)) = stack.pop() {
            if depth == columns.len() {
                let idx = module.index_of(code).expect("tabloid is indexed");
                m.set(r, idx, if odd { minus_one } else { 1 });
                continue;
            }
            for &(c, s) in &columns[depth] {
                stack.push((depth + 1, code | c, odd ^ s));
            }
        }
    }
    let pivots = m.rref_in_place();
    m.truncate_rows(pivots.len());
    Ok(SpechtRealization {
        field,
        module,
        basis: m,
        pivots,
    })
}

/// Signed partial tabloid codes for every rearrangement of one column.
fn column_terms(column: &[usize]) -> Vec<(TabloidCode, bool)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..column.len()).collect();
    permutations(&mut perm, 0, false, &mut |pi, odd| {
        let code = pi
            .iter()
            .enumerate()
            .fold(0u64, |acc, (row, &k)| acc | ((row as u64) << (4 * column[k])));
        out.push((code, odd));
    });
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, odd: bool, visit: &mut dyn FnMut(&[usize], bool)) {
    if k == v.len() {
        visit(v, odd);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, odd ^ (i != k), visit);
        v.swap(k, i);
    }
}
