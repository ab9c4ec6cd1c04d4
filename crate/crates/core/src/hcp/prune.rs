use std::collections::BTreeSet;

use super::{HcpError, Labels};
use crate::graph::{DirectedGraph, VertexId};
use crate::sudoku::{block_cells, block_index, Cell, SudokuInstance};

/// The `12N - 12` arcs made unusable by a clue `k` at `cell`.
///
/// Each family rules out one kind of wrong choice: placing `k` in another
/// cell of the block, placing another value in `cell`, and the row and
/// column sweeps reaching `k` through any other cell of the row or column.
pub fn clue_arcs(labels: &Labels, cell: Cell, k: usize) -> Vec<(VertexId, VertexId)> {
    let n = labels.order();
    let (i, j) = cell;
    let box_size = crate::sudoku::exact_sqrt(n).unwrap();
    let a = block_index(i, j, box_size);
    let mut out = Vec::with_capacity(12 * (n - 1));

    let others: Vec<Cell> = block_cells(a, n)
        .into_iter()
        .filter(|&c| c != cell)
        .collect();
    let other_values: Vec<usize> = (1..=n).filter(|&m| m != k).collect();

    // k placed elsewhere in the block: entry, ring hop, return.
    for &c in &others {
        out.push(labels.placement_entry(a, c, k));
        out.push(labels.placement_exit(c, k));
        out.push(labels.placement_return(a, c, k));
    }
    // another value placed in this cell
    for &m in &other_values {
        out.push(labels.placement_entry(a, cell, m));
        out.push(labels.placement_exit(cell, m));
        out.push(labels.placement_return(a, cell, m));
    }
    // row i finds k in another column / finds another value at (i, j)
    for m in (1..=n).filter(|&m| m != j) {
        out.push((labels.row(i, k), labels.puzzle(i, m, k, 3)));
        out.push((labels.puzzle(i, m, k, 1), labels.end_puzzle(i, m)));
    }
    for &m in &other_values {
        out.push((labels.row(i, m), labels.puzzle(i, j, m, 3)));
    }
    // the same for column j
    for m in (1..=n).filter(|&m| m != i) {
        out.push((labels.col(j, k), labels.dup(m, j, k, 3)));
        out.push((labels.dup(m, j, k, 1), labels.end_dup(m, j)));
    }
    for &m in &other_values {
        out.push((labels.col(j, m), labels.dup(i, j, m, 3)));
    }
    out
}

/// Removes every arc that some clue of `instance` makes unusable.
/// Returns the pruned graph and the number of distinct arcs removed.
pub fn prune_fixed(
    graph: &DirectedGraph,
    instance: &SudokuInstance,
) -> Result<(DirectedGraph, usize), HcpError> {
    let labels = Labels::new(instance.order())?;
    if graph.vertex_count() != labels.vertex_count() {
        return Err(HcpError::GraphShape {
            order: instance.order(),
            expected: labels.vertex_count(),
            found: graph.vertex_count(),
        });
    }
    let removed: BTreeSet<(VertexId, VertexId)> = instance
        .clues()
        .flat_map(|(cell, k)| clue_arcs(&labels, cell, k))
        .filter(|&(u, v)| graph.has_arc(u, v))
        .collect();
    let pruned = graph.without_arcs(&removed);
    Ok((pruned, removed.len()))
}
