//! Batch operations over many grids, puzzles or graphs.
//!
//! With the `parallel` feature (on by default) the work is spread over the
//! rayon thread pool; without it, or through the `*_sequential` variants,
//! items are processed in order on the calling thread. Both paths return
//! results in input order.

use crate::graph::UndirectedGraph;
use crate::hcp::{build_hcp, recover_solution, witness_cycle, HcpError};
use crate::pipeline::{run_pipeline, PipelineConfig, PipelineError, PipelineReport};
use crate::solve::{verify_cycle, Budget, SolveOutcome, Solver};
use crate::sudoku::{Grid, SudokuInstance};

pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

/// Builds the witness cycle of `solution` in the blank instance of its
/// order, checks it is Hamiltonian, and decodes it back. Returns whether the
/// decoded grid equals the input.
pub fn witness_round_trip(solution: &Grid) -> Result<bool, HcpError> {
    let blank = SudokuInstance::blank(solution.order())?;
    let graph = build_hcp(solution.order())?;
    let cycle = witness_cycle(&blank, solution)?;
    if !verify_cycle(&graph, &cycle) {
        return Ok(false);
    }
    Ok(recover_solution(&cycle, solution.order())? == *solution)
}

pub fn witness_round_trips(solutions: &[Grid]) -> Vec<Result<bool, HcpError>> {
    map(solutions, witness_round_trip)
}

pub fn witness_round_trips_sequential(solutions: &[Grid]) -> Vec<Result<bool, HcpError>> {
    map_sequential(solutions, witness_round_trip)
}

pub fn solve_puzzles(
    puzzles: &[SudokuInstance],
    config: &PipelineConfig,
) -> Vec<Result<PipelineReport, PipelineError>> {
    map(puzzles, |p| run_pipeline(p, config))
}

pub fn solve_puzzles_sequential(
    puzzles: &[SudokuInstance],
    config: &PipelineConfig,
) -> Vec<Result<PipelineReport, PipelineError>> {
    map_sequential(puzzles, |p| run_pipeline(p, config))
}

/// Runs the search on every graph; `None` stands for an exhausted budget.
pub fn decide_graphs(graphs: &[UndirectedGraph], budget: Budget) -> Vec<Option<bool>> {
    map(graphs, |g| decide(g, budget))
}

pub fn decide_graphs_sequential(graphs: &[UndirectedGraph], budget: Budget) -> Vec<Option<bool>> {
    map_sequential(graphs, |g| decide(g, budget))
}

fn decide(g: &UndirectedGraph, budget: Budget) -> Option<bool> {
    match Solver::new(budget, 0).solve(g) {
        SolveOutcome::Cycle(..) => Some(true),
        SolveOutcome::NoCycle(_) => Some(false),
        SolveOutcome::BudgetExceeded(_) => None,
    }
}
