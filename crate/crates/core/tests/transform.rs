mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use sudoku_hcp::hcp::{build_hcp, prune_fixed, witness_cycle, Labels};
use sudoku_hcp::solve::{solve_directed, verify_cycle, Budget, SolveOutcome, Solver};
use sudoku_hcp::sudoku::SudokuInstance;
use sudoku_hcp::transform::{
    compress_triples, lift_cycle, orient_and_project, reduce_graph, undirect, CycleLifter,
    InfeasibleReason, TransformError,
};
use sudoku_hcp::{HamiltonianCycle, UndirectedGraph};

fn solve(g: &UndirectedGraph) -> SolveOutcome {
    Solver::new(Budget::default(), 0).solve(g)
}

#[test]
fn triplication_sizes() {
    for n in [4usize, 9, 16] {
        let d = build_hcp(n).unwrap();
        let (u, lifter) = undirect(&d);
        let nn = n * n * n;
        assert_eq!(u.vertex_count(), 18 * nn + 15 * n * n + 6 * n + 6);
        assert_eq!(u.edge_count(), 31 * nn + 12 * n * n + 6 * n + 6);
        let (c, _) = compress_triples(&u, n).unwrap();
        assert_eq!(c.vertex_count(), 16 * nn + 15 * n * n + 6 * n + 6);
        assert_eq!(c.edge_count(), 29 * nn + 12 * n * n + 6 * n + 6);
        assert_eq!(CycleLifter::parse(&lifter.to_text()).unwrap(), lifter);
    }
}

#[test]
fn witness_survives_triplication_and_compression() {
    let blank = SudokuInstance::blank(4).unwrap();
    let d = build_hcp(4).unwrap();
    let (u, _) = undirect(&d);
    let (c, _) = compress_triples(&u, 4).unwrap();
    // middle copies of every part-2 triple vertex
    let labels = Labels::new(4).unwrap();
    let mut removed: Vec<u32> = Vec::new();
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                removed.push(3 * labels.puzzle(i, j, k, 2) - 1);
                removed.push(3 * labels.dup(i, j, k, 2) - 1);
            }
        }
    }
    removed.sort_unstable();
    assert_eq!(u.vertex_count() - c.vertex_count(), removed.len());
    for s in all_order4_solutions().iter().step_by(29) {
        let w = witness_cycle(&blank, s).unwrap();
        let tri: Vec<u32> = w
            .vertices()
            .iter()
            .flat_map(|&v| [3 * v - 2, 3 * v - 1, 3 * v])
            .collect();
        let tri = HamiltonianCycle::new(tri);
        assert!(verify_cycle(&u, &tri));
        assert_eq!(orient_and_project(&tri, d.vertex_count()).unwrap(), w);
        // the same cycle with the removed middles skipped and ids compacted
        let squeezed: Vec<u32> = tri
            .vertices()
            .iter()
            .filter(|v| removed.binary_search(v).is_err())
            .map(|&v| v - removed.partition_point(|&r| r < v) as u32)
            .collect();
        assert!(verify_cycle(&c, &HamiltonianCycle::new(squeezed)));
    }
}

#[test]
fn compressed_blank_solves_and_lifts() {
    let d = build_hcp(4).unwrap();
    let (u, l1) = undirect(&d);
    let (c, l2) = compress_triples(&u, 4).unwrap();
    let lifter = l1.then(l2);
    let SolveOutcome::Cycle(cycle, _) = solve(&c) else {
        panic!("compressed blank graph has a cycle")
    };
    let lifted = lift_cycle(&lifter, &cycle).unwrap();
    assert!(verify_cycle(&d, &lifted));
}

#[test]
fn compressing_a_non_sudoku_graph_fails() {
    let g = UndirectedGraph::from_edges(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
    assert!(matches!(
        compress_triples(&g, 4),
        Err(TransformError::Shape(_))
    ));
}

#[test]
fn triplication_preserves_hamiltonicity() {
    let mut r = rng(3);
    for _ in 0..120 {
        let n = r.gen_range(2..=7);
        let p = r.gen_range(0.2..0.7);
        let d = random_directed(&mut r, n, p);
        let expected = is_hamiltonian_directed(&d);
        match solve_directed(&d, Budget::default(), 0) {
            SolveOutcome::Cycle(c, _) => {
                assert!(expected);
                assert!(verify_cycle(&d, &c));
            }
            SolveOutcome::NoCycle(_) => assert!(!expected),
            SolveOutcome::BudgetExceeded(_) => panic!("tiny instance exhausted the budget"),
        }
    }
}

#[test]
fn reduction_detects_dead_ends() {
    let g = UndirectedGraph::from_edges(4, [(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
    assert!(matches!(
        reduce_graph(&g),
        Err(TransformError::Infeasible(InfeasibleReason::DegreeTooLow(
            4
        )))
    ));
    // vertex 1 has three degree-2 neighbours
    let g = UndirectedGraph::from_edges(
        7,
        [
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 7),
            (5, 6),
            (6, 7),
            (5, 7),
        ],
    )
    .unwrap();
    assert!(matches!(
        reduce_graph(&g),
        Err(TransformError::Infeasible(
            InfeasibleReason::TooManyForcedNeighbours(1)
        ))
    ));
}

#[test]
fn reduction_shrinks_clue_rich_nine_instances() {
    let mut r = rng(17);
    let sol = nine_solution();
    let d = build_hcp(9).unwrap();
    for count in [17, 24, 35, 50] {
        let inst = random_clues(&mut r, &sol, count);
        let (p, _) = prune_fixed(&d, &inst).unwrap();
        let (u, _) = undirect(&p);
        let (red, lifter) = reduce_graph(&u).unwrap();
        assert!(red.vertex_count() < u.vertex_count());
        assert_eq!(CycleLifter::parse(&lifter.to_text()).unwrap(), lifter);
    }
}

/// Graphs with many degree-2 vertices: a Hamiltonian path with a few chords
/// and subdivided edges, so both reduction rules fire.
fn sparse_graph(r: &mut impl Rng) -> UndirectedGraph {
    let n = r.gen_range(4..=10u32);
    let mut perm: Vec<u32> = (1..=n).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, r.gen_range(0..=i));
    }
    let mut edges = std::collections::BTreeSet::new();
    let closed = r.gen_bool(0.6);
    for w in perm.windows(2) {
        edges.insert((w[0].min(w[1]), w[0].max(w[1])));
    }
    if closed {
        let (a, b) = (perm[0], perm[perm.len() - 1]);
        edges.insert((a.min(b), a.max(b)));
    }
    for _ in 0..r.gen_range(0..=n) {
        let (a, b) = (r.gen_range(1..=n), r.gen_range(1..=n));
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    UndirectedGraph::from_edges(n as usize, edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_is_sound(seed in any::<u64>(), dense in any::<bool>()) {
        let mut r = rng(seed);
        let g = if dense {
            let n = r.gen_range(3..=9);
            random_undirected(&mut r, n, 0.45)
        } else {
            sparse_graph(&mut r)
        };
        let before = is_hamiltonian(&g);
        match reduce_graph(&g) {
            Err(TransformError::Infeasible(_)) => prop_assert!(!before),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
            Ok((red, lifter)) => {
                let cycles = all_hamiltonian_cycles(&red);
                prop_assert_eq!(before, !cycles.is_empty());
                for set in cycles.iter().take(8) {
                    let cycle = cycle_from_edges(red.vertex_count(), set);
                    let lifted = lift_cycle(&lifter, &cycle).unwrap();
                    prop_assert!(verify_cycle(&g, &lifted));
                }
            }
        }
    }
}

fn cycle_from_edges(n: usize, edges: &std::collections::BTreeSet<(u32, u32)>) -> HamiltonianCycle {
    let mut adj = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut seq = vec![1u32];
    let mut prev = 0;
    while seq.len() < n {
        let cur = *seq.last().unwrap();
        let next = adj[cur as usize]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .unwrap();
        prev = cur;
        seq.push(next);
    }
    HamiltonianCycle::new(seq)
}
