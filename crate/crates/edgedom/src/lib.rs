//! File formats, reports and the command-line front end for `edgedom-core`.

pub mod bench;
pub mod cli;
pub mod dimacs;
pub mod format;
pub mod report;

pub use edgedom_core as core;
