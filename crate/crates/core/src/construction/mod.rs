//! The two explicit finite-field objects: the 3-partite 3-uniform
//! hypergraph `H` over `F_p` and the graph `G_q` on `F_q^4`.

mod graph;
mod hypergraph;
mod sets;

use alloc::string::String;
use core::fmt;

pub use graph::{build_graph, Adjacency, AdjacencyList, GraphGq};
pub use hypergraph::{
    assemble, build_hypergraph, edge_from_params, edges_with_first, HEdge, HVertex, Hypergraph, HypergraphH, Rejection,
};
pub use sets::{build_sets, Half, SetSystem, MIN_PRIME, T5_QUINTIC};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    /// The field size is not an admissible prime.
    InvalidField {
        q: u64,
    },
    /// `p` is below the guaranteed range, or `S_1` came out empty.
    TooSmall {
        p: u64,
        s1: Option<usize>,
    },
    /// A denominator of the `T_5` quintic vanishes mod `p`.
    QuinticUndefined {
        p: u64,
    },
    InvariantViolated(String),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::InvalidField { q } => write!(f, "{q} is not an odd prime"),
            ConstructionError::TooSmall { p, s1: None } => {
                write!(f, "p = {p} is below {MIN_PRIME}; pass --force to build anyway")
            }
            ConstructionError::TooSmall { p, s1: Some(n) } => write!(f, "S1 has {n} elements for p = {p}"),
            ConstructionError::QuinticUndefined { p } => write!(f, "the T5 quintic has a denominator divisible by {p}"),
            ConstructionError::InvariantViolated(m) => write!(f, "construction invariant violated: {m}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

#[cfg(test)]
mod tests;
