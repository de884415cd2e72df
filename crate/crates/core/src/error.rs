use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid multipartite spec: {0}")]
    InvalidSpec(&'static str),

    #[error("invalid graph: {0}")]
    InvalidGraph(&'static str),

    #[error("bag of node {node} references vertex {vertex}, graph has {vertex_count} vertices")]
    MalformedDecomposition {
        node: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("invalid decomposition tree: {0}")]
    InvalidTree(&'static str),

    #[error("decomposition has no bags")]
    EmptyDecomposition,

    #[error("unsupported shape: {0}")]
    UnsupportedShape(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),

    #[error("instance has {size} vertices, budget is {budget}")]
    BudgetExceeded { size: usize, budget: usize },

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("argument out of domain: {0}")]
    Domain(&'static str),
}
