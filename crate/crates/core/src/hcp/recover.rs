use super::{HcpError, Labels, VertexRole};
use crate::graph::HamiltonianCycle;
use crate::sudoku::{validate_grid, Grid, SudokuInstance};

/// Reads the grid off a Hamiltonian cycle of the directed instance: the end
/// vertex `v_{ij}` of every cell has exactly one cycle neighbour of the form
/// `x_{ijk1}`, and `k` is the cell's value.
pub fn recover_solution(cycle: &HamiltonianCycle, n: usize) -> Result<Grid, HcpError> {
    let l = Labels::new(n)?;
    if cycle.len() != l.vertex_count() {
        return Err(HcpError::CycleLength {
            expected: l.vertex_count(),
            found: cycle.len(),
        });
    }
    let mut pos = vec![usize::MAX; l.vertex_count() + 1];
    for (p, &v) in cycle.vertices().iter().enumerate() {
        if v == 0 || v as usize > l.vertex_count() {
            return Err(HcpError::LabelOutOfRange(v, l.vertex_count()));
        }
        pos[v as usize] = p;
    }

    let mut cells = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let p = pos[l.end_puzzle(i, j) as usize];
            if p == usize::MAX {
                return Err(HcpError::NeighbourPattern {
                    row: i,
                    col: j,
                    count: 0,
                });
            }
            let (prev, next) = cycle.around(p);
            let values: Vec<usize> = [prev, next]
                .into_iter()
                .filter_map(|v| match l.role_of(v) {
                    Ok(VertexRole::Puzzle {
                        row,
                        col,
                        value,
                        part: 1,
                    }) if (row, col) == (i, j) => Some(value),
                    _ => None,
                })
                .collect();
            match values[..] {
                [k] => cells.push(k),
                _ => {
                    return Err(HcpError::NeighbourPattern {
                        row: i,
                        col: j,
                        count: values.len(),
                    })
                }
            }
        }
    }
    let grid = Grid::from_cells(n, cells);
    let violations = validate_grid(&SudokuInstance::blank(n)?, &grid)?;
    if !violations.is_empty() {
        return Err(HcpError::InvalidRecovery(violations));
    }
    Ok(grid)
}
