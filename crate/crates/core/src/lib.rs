//! Edge domination and total edge domination.
//!
//! The crate is `no_std` (it needs `alloc`). It contains the graph model and
//! the two domination predicates, an exact branch-and-bound oracle for small
//! graphs, a linear-time dynamic program for γ'_t on trees, the SAT-3 to
//! total-edge-domination reduction, and the two labelled tree families for
//! which γ'_t = 2γ' and γ'_t = γ'.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod brute;
pub mod enumerate;
pub mod error;
pub mod ext;
pub mod families;
pub mod graph;
pub mod reduction;
pub mod tree;

pub use brute::{
    brute_min_ed, brute_min_ted, enumerate_min_sets, exists_min_set_avoiding_leaf_edges,
    OracleConfig,
};
pub use error::{Error, Result};
pub use ext::ExtNat;
pub use graph::{
    diameter, girth, is_bipartite, is_edge_dominating, is_total_edge_dominating, structural_report,
    EdgeId, EdgeSet, Graph, SolveResult, StructuralReport, VertexId,
};
pub use tree::{build_rooted, gamma_t_tree, gamma_tree, FourValues, Root, RootedTree};
