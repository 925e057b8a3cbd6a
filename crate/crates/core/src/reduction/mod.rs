//! Reduction from SAT-3 (every variable twice positive, once negated, at
//! most three literals per clause) to total edge domination on bipartite
//! graphs of maximum degree 3.

pub mod build;
pub mod gadget;
pub mod sat3;

pub use build::{
    build_reduction, decode_ted_set, encode_assignment, normalize_ted_set,
    reduction_equivalence_check, ClauseGadget, EquivalenceReport, Occurrences, ReductionOutput,
    Role, VarGadget,
};
pub use sat3::{
    brute_sat, enumerate_instances, validate_sat3, Assignment, Literal, Sat3Instance,
    ValidationReport, Violation,
};
