//! Explicit modular representations: Specht modules over `GF(p^e)`, their
//! restrictions to elementary abelian subgroups, and rank-variety sweeps.

pub mod field;
pub mod jordan;
pub mod matrix;
pub mod perm;
pub mod specht;
pub mod unit;
pub mod variety;

pub use field::{Elem, GaloisField};
pub use jordan::{is_projective_by_rank, jordan_profile, profile_of_nilpotent, JordanProfile};
pub use matrix::GfMatrix;
pub use perm::{build_perm_module, build_perm_module_with_budget, Permutation, PermutationModule};
pub use specht::{specht_basis, specht_basis_over, SpechtRealization};
pub use unit::{u_alpha_matrix, EModule, ElementaryAbelianSubgroup};
pub use variety::{
    certified_dimension, class_bounds, complexity_lower_bound, complexity_lower_bound_with,
    non_projective_points, nonzero_points, rank_variety_points, rank_variety_points_with, realize,
    sweep, write_sweep_csv, Budgets, ClassBound, PointRecord,
};
