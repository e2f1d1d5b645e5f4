//! Forest triples and the matrix `F_G`.

pub mod breakmap;
pub mod closed;
pub mod matrix;
pub mod nbc;
pub mod profile;
pub mod subgraph;
pub mod triple;

pub use breakmap::{break_forest, unbreak_forest, Broken};
pub use closed::{closed_form_matrix_entry, ClosedKind};
pub use matrix::{
    column_via_kj, ft_matrix, ft_matrix_entry, matrix_mul, trace_q, trace_x,
    x_component, x_forest, x_from_matrix, ESymMatrix,
};
pub use nbc::{for_each_nbc_forest, forest_inversions, forest_trees, inv_g, nbc_check, Tree};
pub use profile::{Profile, ProfileKey};
pub use subgraph::{
    for_each_subgraph_triple, subgraph_triple_sum, subgraph_triple_sum_explicit, SubgraphPart,
    SubgraphTriple,
};
pub use triple::{
    all_forest_triples, enumerate_forest_triples, for_each_forest_triple, ft_stats, FtFilter,
    FtStats, ForestTriple, TreeTriple,
};
