//! Blocks, the abelian-vertex gate, and the vertex/complexity classifier.

mod block;
mod classify;
mod gate;
mod group;

pub use block::{block_info, same_block, young_vertex, BlockInfo};
pub use classify::{
    classify, complexity_bounds, Citation, ComplexityInterval, SourceNote, SpechtContext,
    VertexReport, VertexStatus,
};
pub use gate::{
    feasible_abelian_types, gate_types, slack_exponent, slack_exponent_via_dimension,
    FeasibilityResult, TypeWitness,
};
pub use group::SymbolicGroup;
