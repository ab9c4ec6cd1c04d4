//! Exact Hamiltonian cycle search for undirected graphs: forced-edge
//! propagation with chronological backtracking on the most constrained
//! vertex.

mod state;

pub use state::{propagate, Contradiction, EdgeState, SolveState};

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{AnyGraph, DirectedGraph, HamiltonianCycle, UndirectedGraph, VertexId};
use crate::transform::{orient_and_project, undirect};

/// Graphs a cycle can be checked against.
pub trait CycleHost {
    fn vertex_count(&self) -> usize;
    /// `u -> v` is an arc (directed) or `{u, v}` an edge (undirected).
    fn joins(&self, u: VertexId, v: VertexId) -> bool;
}

impl CycleHost for DirectedGraph {
    fn vertex_count(&self) -> usize {
        DirectedGraph::vertex_count(self)
    }
    fn joins(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v)
    }
}

impl CycleHost for UndirectedGraph {
    fn vertex_count(&self) -> usize {
        UndirectedGraph::vertex_count(self)
    }
    fn joins(&self, u: VertexId, v: VertexId) -> bool {
        self.has_edge(u, v)
    }
}

impl CycleHost for AnyGraph {
    fn vertex_count(&self) -> usize {
        AnyGraph::vertex_count(self)
    }
    fn joins(&self, u: VertexId, v: VertexId) -> bool {
        match self {
            AnyGraph::Directed(g) => g.has_arc(u, v),
            AnyGraph::Undirected(g) => g.has_edge(u, v),
        }
    }
}

/// True iff `cycle` visits every vertex of `g` once and each consecutive
/// pair, including last to first, is joined in `g`.
pub fn verify_cycle<G: CycleHost + ?Sized>(g: &G, cycle: &HamiltonianCycle) -> bool {
    let n = g.vertex_count();
    if cycle.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for &v in cycle.vertices() {
        if v == 0 || v as usize > n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    cycle.pairs().all(|(u, v)| g.joins(u, v))
}

/// Search limits; whichever runs out first stops the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 10_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

impl Budget {
    pub fn with_time_ms(mut self, ms: u64) -> Self {
        self.max_time = Duration::from_millis(ms);
        self
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Branching decisions taken.
    pub nodes: u64,
    /// Deepest decision stack reached.
    pub max_depth: usize,
    /// Propagation runs that reached a fixpoint without contradiction.
    pub fixpoints: u64,
    pub elapsed: Duration,
}

impl SolveStats {
    /// `STATS nodes=<n> depth=<d> time_ms=<t>`
    pub fn line(&self) -> String {
        format!(
            "STATS nodes={} depth={} time_ms={}",
            self.nodes,
            self.max_depth,
            self.elapsed.as_millis()
        )
    }

    /// Everything except wall-clock time, for reproducibility checks.
    pub fn counters(&self) -> (u64, usize, u64) {
        (self.nodes, self.max_depth, self.fixpoints)
    }
}

impl fmt::Display for SolveStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Cycle(HamiltonianCycle, SolveStats),
    NoCycle(SolveStats),
    BudgetExceeded(SolveStats),
}

impl SolveOutcome {
    pub fn stats(&self) -> &SolveStats {
        match self {
            SolveOutcome::Cycle(_, s)
            | SolveOutcome::NoCycle(s)
            | SolveOutcome::BudgetExceeded(s) => s,
        }
    }

    pub fn cycle(&self) -> Option<&HamiltonianCycle> {
        match self {
            SolveOutcome::Cycle(c, _) => Some(c),
            _ => None,
        }
    }
}

/// Configurable search. The default search is deterministic and ignores the
/// seed; `randomized` makes the seed pick among the undecided edges of the
/// branching vertex.
#[derive(Debug, Clone)]
pub struct Solver {
    pub budget: Budget,
    pub seed: u64,
    pub randomized: bool,
    /// Reject branches whose usable edges leave the graph disconnected.
    pub connectivity_check: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            budget: Budget::default(),
            seed: 0,
            randomized: false,
            connectivity_check: true,
        }
    }
}

struct Frame {
    mark: usize,
    edge: u32,
    excluded: bool,
}

impl Solver {
    pub fn new(budget: Budget, seed: u64) -> Self {
        Solver {
            budget,
            seed,
            ..Solver::default()
        }
    }

    pub fn solve(&self, g: &UndirectedGraph) -> SolveOutcome {
        let start = Instant::now();
        let mut stats = SolveStats::default();
        let finish = |mut stats: SolveStats, fixpoints: u64| {
            stats.elapsed = start.elapsed();
            stats.fixpoints = fixpoints;
            stats
        };
        if g.vertex_count() < 3 {
            return SolveOutcome::NoCycle(finish(stats, 0));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut state = SolveState::new(g);
        let sound =
            |s: &SolveState<'_>| !self.connectivity_check || s.is_complete() || s.connected();
        if state.propagate().is_err() || !sound(&state) {
            return SolveOutcome::NoCycle(finish(stats, state.fixpoints()));
        }
        let mut stack: Vec<Frame> = Vec::new();
        loop {
            if state.is_complete() {
                let cycle = state.cycle().expect("complete state yields a cycle");
                assert!(verify_cycle(g, &cycle), "solver produced an invalid cycle");
                return SolveOutcome::Cycle(cycle, finish(stats, state.fixpoints()));
            }
            if stats.nodes >= self.budget.max_nodes
                || (stats.nodes % 64 == 0 && start.elapsed() >= self.budget.max_time)
            {
                return SolveOutcome::BudgetExceeded(finish(stats, state.fixpoints()));
            }
            let edge = if self.randomized {
                state.branch_edge(|k| rng.gen_range(0..k))
            } else {
                state.branch_edge(|_| 0)
            }
            .expect("incomplete state at a fixpoint has an undecided edge");
            stats.nodes += 1;
            stack.push(Frame {
                mark: state.trail_len(),
                edge,
                excluded: false,
            });
            stats.max_depth = stats.max_depth.max(stack.len());
            let mut ok = state.force_id(edge).is_ok() && state.propagate().is_ok() && sound(&state);
            while !ok {
                let Some(top) = stack.last_mut() else {
                    return SolveOutcome::NoCycle(finish(stats, state.fixpoints()));
                };
                state.undo_to(top.mark);
                if top.excluded {
                    stack.pop();
                } else {
                    top.excluded = true;
                    state.exclude_id(top.edge);
                    ok = state.propagate().is_ok() && sound(&state);
                }
            }
        }
    }
}

/// Decides Hamiltonicity of `g` within `budget`.
pub fn solve_hcp(g: &UndirectedGraph, budget: Budget, seed: u64) -> SolveOutcome {
    Solver::new(budget, seed).solve(g)
}

/// Solves a directed instance through its undirected triplication and
/// reports the cycle in the original vertex ids.
pub fn solve_directed(g: &DirectedGraph, budget: Budget, seed: u64) -> SolveOutcome {
    let (ug, _) = undirect(g);
    match solve_hcp(&ug, budget, seed) {
        SolveOutcome::Cycle(c, stats) => {
            let directed = orient_and_project(&c, g.vertex_count())
                .expect("Hamiltonian cycles of a triplication decompose into triples");
            assert!(verify_cycle(g, &directed));
            SolveOutcome::Cycle(directed, stats)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> UndirectedGraph {
        let mut e = Vec::new();
        for i in 0..5u32 {
            e.push((i + 1, (i + 1) % 5 + 1));
            e.push((i + 1, i + 6));
            e.push((i + 6, (i + 2) % 5 + 6));
        }
        UndirectedGraph::from_edges(10, e).unwrap()
    }

    #[test]
    fn triangle_verification() {
        let g = UndirectedGraph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(verify_cycle(&g, &HamiltonianCycle::new(vec![1, 2, 3])));
        let g = UndirectedGraph::from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]).unwrap();
        assert!(!verify_cycle(&g, &HamiltonianCycle::new(vec![1, 2, 3])));
        assert!(!verify_cycle(&g, &HamiltonianCycle::new(vec![1, 2, 4, 3])));
        assert!(!verify_cycle(&g, &HamiltonianCycle::new(vec![1, 1, 2, 3])));
        assert!(verify_cycle(&g, &HamiltonianCycle::new(vec![1, 2, 3, 4])));
    }

    #[test]
    fn directed_verification_respects_orientation() {
        let g = DirectedGraph::from_arcs(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(verify_cycle(&g, &HamiltonianCycle::new(vec![1, 2, 3])));
        assert!(!verify_cycle(&g, &HamiltonianCycle::new(vec![3, 2, 1])));
    }

    #[test]
    fn petersen_has_no_cycle() {
        assert!(matches!(
            solve_hcp(&petersen(), Budget::default(), 0),
            SolveOutcome::NoCycle(_)
        ));
    }

    #[test]
    fn directed_small_cases() {
        let g = DirectedGraph::from_arcs(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let out = solve_directed(&g, Budget::default(), 0);
        assert_eq!(out.cycle().unwrap().canonical(true).0, vec![1, 2, 3]);
        let dead = DirectedGraph::from_arcs(3, [(1, 2), (2, 3), (2, 1)]).unwrap();
        assert!(matches!(
            solve_directed(&dead, Budget::default(), 0),
            SolveOutcome::NoCycle(_)
        ));
    }

    #[test]
    fn budget_is_respected() {
        let out = solve_hcp(&petersen(), Budget::default().with_nodes(1), 0);
        assert!(matches!(out, SolveOutcome::BudgetExceeded(s) if s.nodes == 1));
    }

    #[test]
    fn stats_line_format() {
        let s = SolveStats {
            nodes: 3,
            max_depth: 2,
            fixpoints: 5,
            elapsed: Duration::from_millis(7),
        };
        assert_eq!(s.line(), "STATS nodes=3 depth=2 time_ms=7");
    }

    #[test]
    fn randomized_mode_still_sound() {
        let g = petersen();
        for seed in 0..5 {
            let s = Solver {
                randomized: true,
                seed,
                ..Solver::default()
            };
            assert!(matches!(s.solve(&g), SolveOutcome::NoCycle(_)));
        }
    }
}
