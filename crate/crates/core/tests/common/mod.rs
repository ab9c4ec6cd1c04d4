//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sudoku_hcp::hcp::VertexRole;
use sudoku_hcp::sudoku::{count_solutions, enumerate_solutions, Grid, SudokuInstance};
use sudoku_hcp::{DirectedGraph, UndirectedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_undirected(rng: &mut impl Rng, n: usize, p: f64) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::from_edges(n, edges).unwrap()
}

pub fn random_directed(rng: &mut impl Rng, n: usize, p: f64) -> DirectedGraph {
    let mut arcs = Vec::new();
    for u in 1..=n as u32 {
        for v in 1..=n as u32 {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    DirectedGraph::from_arcs(n, arcs).unwrap()
}

/// Every Hamiltonian cycle of `g` by exhaustive search from vertex 1, each
/// reported once (second vertex smaller than the last). Cycles are returned
/// as edge sets with `u < v`.
pub fn all_hamiltonian_cycles(g: &UndirectedGraph) -> Vec<BTreeSet<(u32, u32)>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let mut path = vec![1u32];
    let mut used = vec![false; n + 1];
    used[1] = true;
    fn rec(
        g: &UndirectedGraph,
        n: usize,
        path: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<BTreeSet<(u32, u32)>>,
    ) {
        let last = *path.last().unwrap();
        if path.len() == n {
            if g.has_edge(last, 1) && path[1] < last {
                let mut set = BTreeSet::new();
                for w in path.windows(2) {
                    set.insert((w[0].min(w[1]), w[0].max(w[1])));
                }
                set.insert((1, last));
                out.push(set);
            }
            return;
        }
        for &w in g.neighbors(last) {
            if !used[w as usize] {
                used[w as usize] = true;
                path.push(w);
                rec(g, n, path, used, out);
                path.pop();
                used[w as usize] = false;
            }
        }
    }
    rec(g, n, &mut path, &mut used, &mut out);
    out
}

pub fn is_hamiltonian(g: &UndirectedGraph) -> bool {
    !all_hamiltonian_cycles(g).is_empty()
}

/// Permutation search over directed Hamiltonian cycles.
pub fn is_hamiltonian_directed(g: &DirectedGraph) -> bool {
    let n = g.vertex_count();
    if n < 2 {
        return false;
    }
    fn rec(g: &DirectedGraph, n: usize, last: u32, depth: usize, used: &mut Vec<bool>) -> bool {
        if depth == n {
            return g.has_arc(last, 1);
        }
        for &w in g.successors(last) {
            if !used[w as usize] {
                used[w as usize] = true;
                if rec(g, n, w, depth + 1, used) {
                    return true;
                }
                used[w as usize] = false;
            }
        }
        false
    }
    let mut used = vec![false; n + 1];
    used[1] = true;
    rec(g, n, 1, 1, &mut used)
}

pub fn petersen() -> UndirectedGraph {
    let mut e = Vec::new();
    for i in 0..5u32 {
        e.push((i + 1, (i + 1) % 5 + 1));
        e.push((i + 1, i + 6));
        e.push((i + 6, (i + 2) % 5 + 6));
    }
    UndirectedGraph::from_edges(10, e).unwrap()
}

/// Dodecahedron: outer 5-cycle, middle 10-cycle, inner 5-cycle.
pub fn dodecahedron() -> UndirectedGraph {
    let mut e = Vec::new();
    for i in 0..5u32 {
        e.push((i + 1, (i + 1) % 5 + 1));
        e.push((i + 1, 6 + 2 * i));
        e.push((16 + i, 16 + (i + 1) % 5));
        e.push((7 + 2 * i, 16 + i));
    }
    for i in 0..10u32 {
        e.push((6 + i, 6 + (i + 1) % 10));
    }
    UndirectedGraph::from_edges(20, e).unwrap()
}

pub fn all_order4_solutions() -> Vec<Grid> {
    enumerate_solutions(&SudokuInstance::blank(4).unwrap(), usize::MAX)
}

/// Random clue subset of a solution with exactly `count` clues.
pub fn random_clues(rng: &mut impl Rng, solution: &Grid, count: usize) -> SudokuInstance {
    let n = solution.order();
    let mut cells: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    cells.shuffle(rng);
    cells.truncate(count);
    SudokuInstance::new(
        n,
        cells.into_iter().map(|(i, j)| ((i, j), solution.get(i, j))),
    )
    .unwrap()
}

/// Minimal well-formed puzzle: start from a full solution and drop clues in
/// random order while the solution stays unique.
pub fn random_well_formed(rng: &mut impl Rng, solution: &Grid) -> SudokuInstance {
    let n = solution.order();
    let mut inst = solution.to_instance();
    let mut cells: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    cells.shuffle(rng);
    for cell in cells {
        let rest = inst.clues().filter(|&(c, _)| c != cell).collect::<Vec<_>>();
        let candidate = SudokuInstance::new(n, rest).unwrap();
        if count_solutions(&candidate, 2) == 1 {
            inst = candidate;
        }
    }
    inst
}

/// A 9x9 solution grid (the completion of a classic 32-clue puzzle).
pub const NINE_SOLUTION: &str = concat!(
    "483921657",
    "967345821",
    "251876493",
    "548132976",
    "729564138",
    "136798245",
    "372689514",
    "814253769",
    "695417382"
);

pub fn nine_solution() -> Grid {
    let rows = NINE_SOLUTION
        .as_bytes()
        .chunks(9)
        .map(|r| r.iter().map(|b| (b - b'0') as usize).collect())
        .collect();
    Grid::from_rows(rows).unwrap()
}

/// Roles written out family by family, independent of the library's own
/// enumeration.
pub fn listed_roles(n: usize) -> Vec<VertexRole> {
    use VertexRole::*;
    let mut v = vec![Start, Finish];
    for a in 1..=n {
        for k in 1..=n {
            v.push(Block { block: a, value: k });
        }
    }
    for i in 1..=n {
        for k in 1..=n {
            v.push(Row { row: i, value: k });
        }
    }
    for i in 1..=n {
        v.push(EndRow { row: i });
    }
    for j in 1..=n {
        for k in 1..=n {
            v.push(Col { col: j, value: k });
        }
    }
    for j in 1..=n {
        v.push(EndCol { col: j });
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=3 {
                    v.push(Puzzle {
                        row: i,
                        col: j,
                        value: k,
                        part: l,
                    });
                }
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            v.push(EndPuzzle { row: i, col: j });
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=3 {
                    v.push(DupPuzzle {
                        row: i,
                        col: j,
                        value: k,
                        part: l,
                    });
                }
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            v.push(EndDupPuzzle { row: i, col: j });
        }
    }
    v
}
