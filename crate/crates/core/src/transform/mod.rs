//! Graph rewrites that keep Hamiltonicity: directed-to-undirected
//! triplication, removal of one vertex per puzzle-triple gadget, and the
//! degree-2 reduction rules. Each rewrite returns a [`CycleLifter`] journal
//! that maps cycles of the result back to the input.

mod compress;
mod lifter;
mod reduce;
mod undirect;

pub use compress::compress_triples;
pub use lifter::{lift_cycle, CycleLifter, TransformRecord};
pub use reduce::{reduce_graph, InfeasibleReason};
pub use undirect::{orient_and_project, undirect};

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("cycle does not decompose into vertex triples: {0}")]
    Triples(String),
    #[error("graph is not in the expected shape: {0}")]
    Shape(String),
    #[error("no Hamiltonian cycle: {0}")]
    Infeasible(InfeasibleReason),
    #[error("cycle is not consistent with the journal: {0}")]
    Lift(String),
    #[error("journal line {0}: cannot parse {1:?}")]
    Journal(usize, String),
}

impl TransformError {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, TransformError::Infeasible(_))
    }
}

/// `3i - 2`, the copy of directed vertex `i` that receives its in-arcs.
#[inline]
pub fn in_copy(i: VertexId) -> VertexId {
    3 * i - 2
}

/// `3i - 1`, the middle copy.
#[inline]
pub fn mid_copy(i: VertexId) -> VertexId {
    3 * i - 1
}

/// `3i`, the copy carrying out-arcs.
#[inline]
pub fn out_copy(i: VertexId) -> VertexId {
    3 * i
}
