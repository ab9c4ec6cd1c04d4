mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::*;
use sudoku_hcp::hcp::{
    arc_count_formula, build_hcp, clue_arcs, prune_fixed, recover_solution, vertex_count_formula,
    witness_cycle, Labels,
};
use sudoku_hcp::sudoku::{is_solution, SudokuInstance};
use sudoku_hcp::{verify_cycle, HamiltonianCycle};

#[test]
fn sizes_follow_formulas() {
    for n in [4, 9, 16] {
        let g = build_hcp(n).unwrap();
        let nn = n * n * n;
        assert_eq!(g.vertex_count(), 6 * nn + 5 * n * n + 2 * n + 2);
        assert_eq!(g.arc_count(), 19 * nn + 2 * n * n + 2 * n + 2);
        assert_eq!(g.vertex_count(), vertex_count_formula(n));
        assert_eq!(g.arc_count(), arc_count_formula(n));
    }
    assert_eq!(build_hcp(9).unwrap().arc_count(), 14033);
}

#[test]
fn every_vertex_has_in_and_out_arcs() {
    let g = build_hcp(4).unwrap();
    let indeg = g.in_degrees();
    for v in 1..=g.vertex_count() as u32 {
        assert!(g.out_degree(v) >= 1, "vertex {v} has no successor");
        assert!(indeg[v as usize - 1] >= 1, "vertex {v} has no predecessor");
    }
}

#[test]
fn witness_cycles_round_trip_at_order_four() {
    let blank = SudokuInstance::blank(4).unwrap();
    let g = build_hcp(4).unwrap();
    let sols = all_order4_solutions();
    assert_eq!(sols.len(), 288);
    let mut seen = BTreeSet::new();
    for s in &sols {
        let c = witness_cycle(&blank, s).unwrap();
        assert!(verify_cycle(&g, &c));
        assert_eq!(&recover_solution(&c, 4).unwrap(), s);
        assert!(seen.insert(c.canonical(true).0));
    }
}

#[test]
fn witness_cycle_at_order_nine() {
    let s = nine_solution();
    let g = build_hcp(9).unwrap();
    let c = witness_cycle(&SudokuInstance::blank(9).unwrap(), &s).unwrap();
    assert!(verify_cycle(&g, &c));
    assert_eq!(recover_solution(&c, 9).unwrap(), s);
}

#[test]
fn recovery_rejects_non_cycles() {
    let s = &all_order4_solutions()[0];
    let c = witness_cycle(&SudokuInstance::blank(4).unwrap(), s).unwrap();
    let mut v = c.vertices().to_vec();
    v.pop();
    assert!(recover_solution(&HamiltonianCycle::new(v), 4).is_err());
    // move v_{11} next to vertices that are not placement triples
    let v11 = Labels::new(4).unwrap().end_puzzle(1, 1);
    let mut v = c.vertices().to_vec();
    let a = v.iter().position(|&x| x == 1).unwrap();
    let b = v.iter().position(|&x| x == v11).unwrap();
    v.swap(a, b);
    assert!(recover_solution(&HamiltonianCycle::new(v), 4).is_err());
}

#[test]
fn pruning_keeps_exactly_the_consistent_witnesses() {
    // A clue must remove arcs used only by solutions that disagree with it.
    let mut r = rng(11);
    let g = build_hcp(4).unwrap();
    let blank = SudokuInstance::blank(4).unwrap();
    let sols = all_order4_solutions();
    for round in 0..10 {
        let base = &sols[round * 17 % sols.len()];
        let inst = random_clues(&mut r, base, 1 + round % 4);
        let (pruned, _) = prune_fixed(&g, &inst).unwrap();
        for s in &sols {
            let c = witness_cycle(&blank, s).unwrap();
            assert_eq!(verify_cycle(&pruned, &c), is_solution(&inst, s));
        }
    }
}

#[test]
fn single_clue_removes_twelve_n_minus_twelve() {
    let g = build_hcp(9).unwrap();
    let labels = Labels::new(9).unwrap();
    for i in 1..=9 {
        for j in 1..=9 {
            let k = (i * 7 + j * 3) % 9 + 1;
            let arcs: BTreeSet<_> = clue_arcs(&labels, (i, j), k).into_iter().collect();
            assert_eq!(arcs.len(), 96);
            assert!(arcs.iter().all(|&(u, v)| g.has_arc(u, v)));
            let inst = SudokuInstance::new(9, [((i, j), k)]).unwrap();
            assert_eq!(prune_fixed(&g, &inst).unwrap().1, 96);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multi_clue_removal_is_union(seed in any::<u64>(), count in 2usize..=5) {
        let mut r = rng(seed);
        let inst = random_clues(&mut r, &nine_solution(), count);
        let g = build_hcp(9).unwrap();
        let labels = Labels::new(9).unwrap();
        let union: BTreeSet<_> = inst.clues().flat_map(|(c, k)| clue_arcs(&labels, c, k)).collect();
        let (pruned, removed) = prune_fixed(&g, &inst).unwrap();
        prop_assert_eq!(removed, union.len());
        prop_assert_eq!(pruned.arc_count(), g.arc_count() - union.len());
        for (u, v) in g.arcs() {
            prop_assert_eq!(pruned.has_arc(u, v), !union.contains(&(u, v)));
        }
    }
}
