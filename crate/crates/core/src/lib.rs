//! Path decompositions, canonical line-brambles and exact width oracles for
//! line graphs of complete and complete multipartite graphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line tool live in the `linetw` companion crate.
//!
//! Module map:
//!
//! - [`graph`]: simple graphs, the complete multipartite generator and the
//!   line-graph operator.
//! - [`decomp`]: tree/path decompositions, the three-axiom validator, width.
//! - [`constructions`]: explicit path decompositions of `L(K_n)` and of
//!   `L(K_{n_1,...,n_k})` built from a three-part vertex partition.
//! - [`bramble`]: canonical line-brambles and their minimum hitting sets.
//! - [`oracle`]: exact treewidth/pathwidth by dynamic programming over subsets.
//! - [`formulas`]: closed-form width and hitting-set values in exact arithmetic.
#![no_std]

extern crate alloc;

pub mod bramble;
pub mod constructions;
pub mod decomp;
mod error;
pub mod formulas;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{complete_multipartite, line_graph, Edge, EdgeVertexMap, Graph, MultipartiteSpec};
