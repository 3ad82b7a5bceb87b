//! Exact combinatorics and verification tools for Specht modules of symmetric groups.
//!
//! The crate covers four areas:
//!
//! - partition combinatorics: hook lengths, `m`-cores and weights, `p`-adic
//!   expansions, hook-formula dimensions ([`partition`], [`abacus`],
//!   [`expansion`], [`dimension`]);
//! - `p`-subgroups of symmetric groups ([`subgroup`]);
//! - a rule-based classifier for vertices and complexity of Specht modules
//!   ([`vertex`]);
//! - a small modular-representation engine that realizes Specht modules over
//!   `GF(p^e)` and sweeps rank varieties of elementary abelian subgroups
//!   ([`modrep`]).

pub mod abacus;
pub mod checks;
pub mod dimension;
pub mod error;
pub mod expansion;
pub mod factored;
pub mod modrep;
pub mod partition;
pub mod prime;
pub mod subgroup;
pub mod tableau;
pub mod vertex;

pub use abacus::{m_core_weight, CoreWeight};
pub use dimension::{hook_product, specht_dimension};
pub use error::{Error, Result};
pub use expansion::{p_adic_expansion, rho, PAdicExpansion, RhoComposition};
pub use factored::FactoredNat;
pub use partition::{enumerate_partitions, partitions, HookGrid, Partition};
pub use prime::{legendre_valuation, Prime};
pub use subgroup::{
    abelian_type_embeds, enumerate_abelian_types, max_elem_abelian_classes, AbelianPType,
    MaxElemAbelianClass,
};
