//! Labelled tree families: trees grown from a labelled P4 by two operations
//! (γ'_t = 2γ'), and trees grown from diameter-4 trees by five operations
//! (γ'_t = γ').

pub mod check;
pub mod complete;
pub mod edge;
pub mod generate;
pub mod vertex;

pub use check::{check_min_set_structure, check_ratio, MinSetProperty, Ratio, RatioReport};
pub use complete::{completeness, reachable, CompletenessReport};
pub use edge::{
    apply_tt_o1, apply_tt_o2, apply_tt_o3, apply_tt_o3_with, apply_tt_o4, apply_tt_o5,
    diameter_four_shape, init_family_tt, s_edge_set, vertex_class, ELabel, EdgeLabelledTree,
    GuardReading, VertexClass,
};
pub use generate::{generate, replay, FamilyKind, Generation, LabelledTree, Op, Readings, Step};
pub use vertex::{
    apply_t_o1, apply_t_o1_with, apply_t_o2, cc_edge_set, init_family_t, LeafReading, VLabel,
    VertexLabelledTree,
};
