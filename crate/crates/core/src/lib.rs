//! Sudoku as a Hamiltonian cycle problem.
//!
//! A Sudoku instance of order N is encoded as a directed graph whose
//! Hamiltonian cycles correspond one-to-one with the puzzle's solutions.
//! The crate builds that graph, prunes it with the clues, converts it to an
//! undirected graph, simplifies it, searches for a Hamiltonian cycle, and
//! lifts the cycle back to a solved grid.

pub mod batch;
pub mod formats;
pub mod graph;
pub mod hcp;
pub mod pipeline;
pub mod solve;
pub mod stats;
pub mod sudoku;
pub mod transform;

pub use graph::{AnyGraph, DirectedGraph, HamiltonianCycle, UndirectedGraph, VertexId};
pub use pipeline::{run_pipeline, PipelineConfig, PipelineOutcome, PipelineReport};
pub use solve::{solve_hcp, verify_cycle, Budget, SolveOutcome, SolveStats, Solver};
pub use sudoku::{Grid, SudokuInstance};
