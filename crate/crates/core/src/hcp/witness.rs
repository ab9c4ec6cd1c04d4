use super::{HcpError, Labels};
use crate::graph::HamiltonianCycle;
use crate::sudoku::{block_cells, validate_grid, Grid, SudokuInstance};

/// The canonical Hamiltonian cycle encoding `solution`.
///
/// Block phase: for every block and value, the block vertex, then the x
/// triples of the chosen cell for every other value in wrapped ascending
/// order, then the same y triples. Row phase: each row vertex followed by
/// the skipped x triple in reverse and the cell's end vertex, closing the
/// row with its end-row vertex. Column phase mirrors the row phase on the
/// y side. Then `f`, and back to `s`.
pub fn witness_cycle(
    instance: &SudokuInstance,
    solution: &Grid,
) -> Result<HamiltonianCycle, HcpError> {
    let violations = validate_grid(instance, solution)?;
    if !violations.is_empty() {
        return Err(HcpError::InvalidSolution(violations));
    }
    let n = instance.order();
    let l = Labels::new(n)?;
    let mut seq = Vec::with_capacity(l.vertex_count());
    seq.push(l.start());

    for a in 1..=n {
        let cells = block_cells(a, n);
        for k in 1..=n {
            let (i, j) = *cells
                .iter()
                .find(|&&(i, j)| solution.get(i, j) == k)
                .expect("valid grid holds every value in every block");
            seq.push(l.block(a, k));
            for t in 1..n {
                let m = l.wrap((k + t) as isize);
                seq.extend((1..=3).map(|p| l.puzzle(i, j, m, p)));
            }
            for t in 1..n {
                let m = l.wrap((k + t) as isize);
                seq.extend((1..=3).map(|p| l.dup(i, j, m, p)));
            }
        }
    }

    for i in 1..=n {
        for k in 1..=n {
            let j = (1..=n).find(|&j| solution.get(i, j) == k).unwrap();
            seq.push(l.row(i, k));
            seq.extend((1..=3).rev().map(|p| l.puzzle(i, j, k, p)));
            seq.push(l.end_puzzle(i, j));
        }
        seq.push(l.end_row(i));
    }

    for j in 1..=n {
        for k in 1..=n {
            let i = (1..=n).find(|&i| solution.get(i, j) == k).unwrap();
            seq.push(l.col(j, k));
            seq.extend((1..=3).rev().map(|p| l.dup(i, j, k, p)));
            seq.push(l.end_dup(i, j));
        }
        seq.push(l.end_col(j));
    }

    seq.push(l.finish());
    debug_assert_eq!(seq.len(), l.vertex_count());
    Ok(HamiltonianCycle::new(seq))
}
