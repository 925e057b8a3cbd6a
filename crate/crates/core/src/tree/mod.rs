//! Linear-time γ'_t (and γ') on trees.

pub mod closed;
pub mod four;
pub mod rooted;
pub mod solve;

pub use four::{combine, leaf_base_values, ChildSummary, FourValues, State};
pub use rooted::{build_rooted, Root, RootedTree};
pub use solve::{four_values, gamma_t_tree, gamma_tree};
