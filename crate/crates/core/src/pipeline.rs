//! End-to-end orchestration: Sudoku -> directed instance -> pruning ->
//! triplication -> optional gadget compression -> optional reduction ->
//! search -> lifting -> grid.

use std::time::Duration;

use thiserror::Error;

use crate::graph::{DirectedGraph, HamiltonianCycle, UndirectedGraph};
use crate::hcp::{build_hcp, prune_fixed, recover_solution, HcpError};
use crate::solve::{verify_cycle, Budget, SolveOutcome, SolveStats, Solver};
use crate::sudoku::{validate_grid, Grid, SudokuInstance, Violation};
use crate::transform::{
    compress_triples, lift_cycle, reduce_graph, undirect, CycleLifter, TransformError,
};

/// Environment variable overriding the solver time budget, in milliseconds.
pub const BUDGET_ENV: &str = "SUDOKU2HCP_BUDGET_MS";

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub prune: bool,
    pub undirect: bool,
    pub compress: bool,
    pub reduce: bool,
    pub budget: Budget,
    pub seed: u64,
}

impl Default for PipelineConfig {
    /// convert -> prune -> undirect -> reduce -> solve; compression off.
    fn default() -> Self {
        PipelineConfig {
            prune: true,
            undirect: true,
            compress: false,
            reduce: true,
            budget: Budget::default(),
            seed: 0,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        if (self.compress || self.reduce) && !self.undirect {
            return Err(PipelineError::Config(
                "compress and reduce operate on the undirected graph".into(),
            ));
        }
        Ok(())
    }
}

/// `base` with its time limit replaced by `SUDOKU2HCP_BUDGET_MS` when set.
pub fn budget_from_env(base: Budget) -> Result<Budget, PipelineError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => {
            let ms: u64 = v.trim().parse().map_err(|_| {
                PipelineError::Config(format!("{BUDGET_ENV}={v:?} is not an integer"))
            })?;
            Ok(Budget {
                max_time: Duration::from_millis(ms),
                ..base
            })
        }
        Err(_) => Ok(base),
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Hcp(#[from] HcpError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error("lifted cycle is not Hamiltonian in the directed instance")]
    LiftMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageSize {
    pub stage: &'static str,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipelineOutcome {
    Solved(Grid),
    /// The reducer or the search proved there is no Hamiltonian cycle.
    NoSolution,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub outcome: PipelineOutcome,
    pub stages: Vec<StageSize>,
    /// Arcs removed by clue pruning.
    pub pruned_arcs: usize,
    pub solve: Option<SolveStats>,
    /// Clue or house violations of the recovered grid against the input
    /// (only possible with pruning switched off).
    pub violations: Vec<Violation>,
    /// Directed Hamiltonian cycle of the (pruned) instance, when solved.
    pub directed_cycle: Option<HamiltonianCycle>,
}

impl PipelineReport {
    pub fn grid(&self) -> Option<&Grid> {
        match &self.outcome {
            PipelineOutcome::Solved(g) => Some(g),
            _ => None,
        }
    }
}

/// Every intermediate artefact of the graph side of the pipeline.
#[derive(Debug, Clone)]
pub struct Conversion {
    pub directed: DirectedGraph,
    pub pruned_arcs: usize,
    /// Final undirected graph and the journal leading to it from `directed`.
    pub undirected: Option<(UndirectedGraph, CycleLifter)>,
    pub stages: Vec<StageSize>,
}

/// Builds and transforms the graph for `instance` without solving it.
/// A reduction that proves infeasibility comes back as
/// [`TransformError::Infeasible`] inside [`PipelineError::Transform`].
pub fn convert(
    instance: &SudokuInstance,
    config: &PipelineConfig,
) -> Result<Conversion, PipelineError> {
    config.validate()?;
    let mut stages = Vec::new();
    let mut directed = build_hcp(instance.order())?;
    stages.push(StageSize {
        stage: "directed",
        vertices: directed.vertex_count(),
        edges: directed.arc_count(),
    });
    let mut pruned_arcs = 0;
    if config.prune {
        let (g, removed) = prune_fixed(&directed, instance)?;
        directed = g;
        pruned_arcs = removed;
        stages.push(StageSize {
            stage: "pruned",
            vertices: directed.vertex_count(),
            edges: directed.arc_count(),
        });
    }
    let mut undirected = None;
    if config.undirect {
        let (mut g, mut lifter) = undirect(&directed);
        stages.push(StageSize {
            stage: "undirected",
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        });
        if config.compress {
            let (c, more) = compress_triples(&g, instance.order())?;
            g = c;
            lifter = lifter.then(more);
            stages.push(StageSize {
                stage: "compressed",
                vertices: g.vertex_count(),
                edges: g.edge_count(),
            });
        }
        if config.reduce {
            let (r, more) = reduce_graph(&g)?;
            g = r;
            lifter = lifter.then(more);
            stages.push(StageSize {
                stage: "reduced",
                vertices: g.vertex_count(),
                edges: g.edge_count(),
            });
        }
        undirected = Some((g, lifter));
    }
    Ok(Conversion {
        directed,
        pruned_arcs,
        undirected,
        stages,
    })
}

/// Runs the whole pipeline on one puzzle.
pub fn run_pipeline(
    instance: &SudokuInstance,
    config: &PipelineConfig,
) -> Result<PipelineReport, PipelineError> {
    let conv = match convert(instance, config) {
        Ok(c) => c,
        Err(PipelineError::Transform(e)) if e.is_infeasible() => {
            return Ok(PipelineReport {
                outcome: PipelineOutcome::NoSolution,
                stages: Vec::new(),
                pruned_arcs: 0,
                solve: None,
                violations: Vec::new(),
                directed_cycle: None,
            })
        }
        Err(e) => return Err(e),
    };
    let solver = Solver::new(config.budget, config.seed);
    let outcome = match &conv.undirected {
        Some((g, lifter)) => match solver.solve(g) {
            SolveOutcome::Cycle(c, s) => SolveOutcome::Cycle(lift_cycle(lifter, &c)?, s),
            other => other,
        },
        None => crate::solve::solve_directed(&conv.directed, config.budget, config.seed),
    };
    let mut report = PipelineReport {
        outcome: PipelineOutcome::NoSolution,
        stages: conv.stages,
        pruned_arcs: conv.pruned_arcs,
        solve: Some(*outcome.stats()),
        violations: Vec::new(),
        directed_cycle: None,
    };
    match outcome {
        SolveOutcome::Cycle(cycle, _) => {
            if !verify_cycle(&conv.directed, &cycle) {
                return Err(PipelineError::LiftMismatch);
            }
            let grid = recover_solution(&cycle, instance.order())?;
            report.violations = validate_grid(instance, &grid).map_err(HcpError::from)?;
            report.directed_cycle = Some(cycle);
            report.outcome = PipelineOutcome::Solved(grid);
        }
        SolveOutcome::NoCycle(_) => report.outcome = PipelineOutcome::NoSolution,
        SolveOutcome::BudgetExceeded(_) => report.outcome = PipelineOutcome::BudgetExceeded,
    }
    Ok(report)
}
