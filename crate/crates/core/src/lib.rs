//! Conflict-free edge colorings.
//!
//! An edge coloring is conflict-free when every edge `uv` sees some color
//! exactly once among the edges touching `u` or `v`. This crate builds such
//! colorings constructively, checks them, and computes exact indices of small
//! graphs for cross-checking:
//!
//! * [`bipartite`]: at most 3 colors for bipartite graphs without isolated
//!   vertices, through a minimal dominating set and its private neighbors.
//! * [`general`]: at most `2*ceil(log2 k)+1` colors from a proper vertex
//!   `k`-coloring, plus the 2-coloring of cycles.
//! * [`tree`]: exact index of trees, deciding the 2-color case with a
//!   certificate-producing dynamic program.
//! * [`oracle`]: exhaustive search for both the total and the partial index.
//!
//! Every construction returns colorings that pass [`coloring::verify_cf`].

pub mod bipartite;
pub mod coloring;
pub mod format;
pub mod general;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod tree;

pub use bipartite::{
    bipartite_cf_coloring, bipartite_scf_coloring, check_certificate, extend_to_cf,
    minimal_y_dominating_set, BipartiteError, DominationCertificate,
};
pub use coloring::{
    closed_neighborhood, is_satisfied, verify_cf, Color, ColoringError, EdgeColoring,
    SatisfactionReport,
};
pub use general::{
    cycle_cf_coloring, general_cf_coloring, greedy_vertex_coloring, recursive_scf_coloring,
    GeneralError, VertexColoring,
};
pub use graph::{Bipartition, Graph, GraphError, Side, TwoColoring};
pub use oracle::{
    exact_cf_index, exact_scf_index, sandwich_check, OracleBudget, OracleError, OracleOutcome,
};
pub use tree::{
    check_f_certificate, coloring_from_f, decide_tree_two, f_from_coloring, tree_cf_index,
    FVerdict, TreeError, TreeFCertificate,
};
