//! The directed Hamiltonian cycle instance encoding a Sudoku: construction,
//! clue-driven arc pruning, witness cycles for known solutions and reading a
//! grid back out of a cycle.

mod build;
mod labels;
mod prune;
mod recover;
mod witness;

pub use build::{arc_count_formula, build_hcp, vertex_count_formula};
pub use labels::{all_roles, label_of, role_of, Labels, VertexRole};
pub use prune::{clue_arcs, prune_fixed};
pub use recover::recover_solution;
pub use witness::witness_cycle;

use thiserror::Error;

use crate::graph::VertexId;
use crate::sudoku::{SudokuError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HcpError {
    #[error("order {0} is not a perfect square >= 4")]
    NotSquare(usize),
    #[error("role {0:?} has an index outside 1..={1}")]
    RoleOutOfRange(VertexRole, usize),
    #[error("label {0} outside 1..={1}")]
    LabelOutOfRange(VertexId, usize),
    #[error("graph has {found} vertices, order {order} needs {expected}")]
    GraphShape {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("grid is not a solution of the instance: {0:?}")]
    InvalidSolution(Vec<Violation>),
    #[error("cycle has {found} vertices, expected {expected}")]
    CycleLength { expected: usize, found: usize },
    #[error("end-puzzle vertex of cell ({row}, {col}) has {count} puzzle neighbours in the cycle, expected exactly one")]
    NeighbourPattern {
        row: usize,
        col: usize,
        count: usize,
    },
    #[error("recovered grid breaks Sudoku constraints: {0:?}")]
    InvalidRecovery(Vec<Violation>),
    #[error(transparent)]
    Sudoku(#[from] SudokuError),
}
