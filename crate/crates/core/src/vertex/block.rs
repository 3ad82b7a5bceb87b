use serde::Serialize;

use super::group::SymbolicGroup;
use crate::abacus::m_core_weight;
use crate::error::{Error, Result};
use crate::expansion::rho;
use crate::partition::Partition;
use crate::prime::Prime;

/// The block of `F S_n` containing `S^mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockInfo {
    pub core: Partition,
    pub weight: usize,
    pub defect_group: SymbolicGroup,
    pub abelian_defect: bool,
}

impl BlockInfo {
    /// Degree of the symmetric group whose Sylow subgroup is the defect group.
    pub fn defect_degree(&self, p: Prime) -> usize {
        self.weight * p.get() as usize
    }
}

/// Blocks are labelled by `p`-cores; the defect group is a Sylow `p`-subgroup of `S_{wp}`.
pub fn block_info(mu: &Partition, p: Prime) -> BlockInfo {
    let cw = m_core_weight(mu, p.get() as usize).expect("primes are at least 2");
    let defect_group = if cw.weight == 0 {
        SymbolicGroup::Trivial
    } else {
        SymbolicGroup::SylowOfSym {
            p,
            degree: cw.weight * p.get() as usize,
        }
    };
    BlockInfo {
        abelian_defect: (cw.weight as u64) < p.get(),
        core: cw.core,
        weight: cw.weight,
        defect_group,
    }
}

/// `S^mu` and `S^lambda` lie in the same block iff their `p`-cores agree.
pub fn same_block(mu: &Partition, lambda: &Partition, p: Prime) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    Ok(block_info(mu, p).core == block_info(lambda, p).core)
}

/// Vertex of the Young module `Y^mu`: a Sylow `p`-subgroup of the Young subgroup of `ρ(μ)`.
pub fn young_vertex(mu: &Partition, p: Prime) -> SymbolicGroup {
    let parts = rho(mu, p).parts;
    if parts.iter().all(|&k| k == 1) {
        SymbolicGroup::Trivial
    } else {
        SymbolicGroup::SylowOfYoung { p, parts }
    }
}
