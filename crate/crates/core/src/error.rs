use alloc::string::String;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph is not a tree: {0}")]
    NotATree(String),
    #[error("vertex {0} is not a leaf and cannot be used as root")]
    InvalidRoot(VertexId),
    #[error("oracle limit exceeded: {edges} edges, cap is {cap}")]
    OracleTooLarge { edges: usize, cap: usize },
    #[error("assignment cannot be encoded: {0}")]
    EncodingInfeasible(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("operation {op} not applicable at vertex {site}: {reason}")]
    OperationInapplicable {
        op: &'static str,
        site: VertexId,
        reason: String,
    },
    #[error("invalid labelled tree: {0}")]
    InvalidLabelledTree(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
