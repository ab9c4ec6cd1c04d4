//! Vertex roles of the Sudoku graph and their integer labels.
//!
//! Labels follow the listing order of the vertex families: `s`, `f`, then
//! the block, row, end-row, column, end-column, puzzle, end-puzzle,
//! duplicate-puzzle and end-duplicate-puzzle families, each enumerated
//! lexicographically in its indices.

use super::HcpError;
use crate::graph::VertexId;
use crate::sudoku::exact_sqrt;

/// Which vertex of the construction a label stands for. All indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    Start,
    Finish,
    /// `b_{ak}`: value `k` in block `a`.
    Block {
        block: usize,
        value: usize,
    },
    /// `r_{ik}`: value `k` in row `i`.
    Row {
        row: usize,
        value: usize,
    },
    /// `t_i`
    EndRow {
        row: usize,
    },
    /// `c_{jk}`: value `k` in column `j`.
    Col {
        col: usize,
        value: usize,
    },
    /// `d_j`
    EndCol {
        col: usize,
    },
    /// `x_{ijkl}` with `l` in 1..=3.
    Puzzle {
        row: usize,
        col: usize,
        value: usize,
        part: usize,
    },
    /// `v_{ij}`
    EndPuzzle {
        row: usize,
        col: usize,
    },
    /// `y_{ijkl}` with `l` in 1..=3.
    DupPuzzle {
        row: usize,
        col: usize,
        value: usize,
        part: usize,
    },
    /// `w_{ij}`
    EndDupPuzzle {
        row: usize,
        col: usize,
    },
}

/// Offsets of every vertex family for one order `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Labels {
    n: usize,
    block0: usize,
    row0: usize,
    end_row0: usize,
    col0: usize,
    end_col0: usize,
    puzzle0: usize,
    end_puzzle0: usize,
    dup0: usize,
    end_dup0: usize,
    total: usize,
}

impl Labels {
    pub fn new(n: usize) -> Result<Self, HcpError> {
        match exact_sqrt(n) {
            Some(_) if n >= 4 => {}
            _ => return Err(HcpError::NotSquare(n)),
        }
        let n2 = n * n;
        let n3 = n2 * n;
        let block0 = 3;
        let row0 = block0 + n2;
        let end_row0 = row0 + n2;
        let col0 = end_row0 + n;
        let end_col0 = col0 + n2;
        let puzzle0 = end_col0 + n;
        let end_puzzle0 = puzzle0 + 3 * n3;
        let dup0 = end_puzzle0 + n2;
        let end_dup0 = dup0 + 3 * n3;
        let total = end_dup0 + n2 - 1;
        Ok(Labels {
            n,
            block0,
            row0,
            end_row0,
            col0,
            end_col0,
            puzzle0,
            end_puzzle0,
            dup0,
            end_dup0,
            total,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of vertices, `6N³ + 5N² + 2N + 2`.
    pub fn vertex_count(&self) -> usize {
        self.total
    }

    /// Maps any integer onto 1..=N modulo N.
    #[inline]
    pub fn wrap(&self, k: isize) -> usize {
        ((k - 1).rem_euclid(self.n as isize) + 1) as usize
    }

    #[inline]
    fn id(x: usize) -> VertexId {
        x as VertexId
    }

    pub fn start(&self) -> VertexId {
        1
    }
    pub fn finish(&self) -> VertexId {
        2
    }
    pub fn block(&self, a: usize, k: usize) -> VertexId {
        Self::id(self.block0 + (a - 1) * self.n + (k - 1))
    }
    pub fn row(&self, i: usize, k: usize) -> VertexId {
        Self::id(self.row0 + (i - 1) * self.n + (k - 1))
    }
    pub fn end_row(&self, i: usize) -> VertexId {
        Self::id(self.end_row0 + i - 1)
    }
    pub fn col(&self, j: usize, k: usize) -> VertexId {
        Self::id(self.col0 + (j - 1) * self.n + (k - 1))
    }
    pub fn end_col(&self, j: usize) -> VertexId {
        Self::id(self.end_col0 + j - 1)
    }
    fn triple_offset(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        3 * (((i - 1) * self.n + (j - 1)) * self.n + (k - 1)) + (l - 1)
    }
    pub fn puzzle(&self, i: usize, j: usize, k: usize, l: usize) -> VertexId {
        Self::id(self.puzzle0 + self.triple_offset(i, j, k, l))
    }
    pub fn end_puzzle(&self, i: usize, j: usize) -> VertexId {
        Self::id(self.end_puzzle0 + (i - 1) * self.n + (j - 1))
    }
    pub fn dup(&self, i: usize, j: usize, k: usize, l: usize) -> VertexId {
        Self::id(self.dup0 + self.triple_offset(i, j, k, l))
    }
    pub fn end_dup(&self, i: usize, j: usize) -> VertexId {
        Self::id(self.end_dup0 + (i - 1) * self.n + (j - 1))
    }

    /// First label of the x family and of the y family; each triple occupies
    /// three consecutive labels starting at the `l = 1` vertex.
    pub(crate) fn triple_bases(&self) -> [usize; 2] {
        [self.puzzle0, self.dup0]
    }

    fn in_range(&self, idx: &[usize]) -> bool {
        idx.iter().all(|&v| (1..=self.n).contains(&v))
    }

    pub fn label_of(&self, role: VertexRole) -> Result<VertexId, HcpError> {
        use VertexRole::*;
        let ok = match role {
            Start | Finish => true,
            Block { block, value } => self.in_range(&[block, value]),
            Row { row, value } => self.in_range(&[row, value]),
            EndRow { row } => self.in_range(&[row]),
            Col { col, value } => self.in_range(&[col, value]),
            EndCol { col } => self.in_range(&[col]),
            Puzzle {
                row,
                col,
                value,
                part,
            }
            | DupPuzzle {
                row,
                col,
                value,
                part,
            } => self.in_range(&[row, col, value]) && (1..=3).contains(&part),
            EndPuzzle { row, col } | EndDupPuzzle { row, col } => self.in_range(&[row, col]),
        };
        if !ok {
            return Err(HcpError::RoleOutOfRange(role, self.n));
        }
        Ok(match role {
            Start => self.start(),
            Finish => self.finish(),
            Block { block, value } => self.block(block, value),
            Row { row, value } => self.row(row, value),
            EndRow { row } => self.end_row(row),
            Col { col, value } => self.col(col, value),
            EndCol { col } => self.end_col(col),
            Puzzle {
                row,
                col,
                value,
                part,
            } => self.puzzle(row, col, value, part),
            EndPuzzle { row, col } => self.end_puzzle(row, col),
            DupPuzzle {
                row,
                col,
                value,
                part,
            } => self.dup(row, col, value, part),
            EndDupPuzzle { row, col } => self.end_dup(row, col),
        })
    }

    pub fn role_of(&self, label: VertexId) -> Result<VertexRole, HcpError> {
        let x = label as usize;
        if x == 0 || x > self.total {
            return Err(HcpError::LabelOutOfRange(label, self.total));
        }
        let n = self.n;
        let pair = |off: usize| (off / n + 1, off % n + 1);
        let triple = |off: usize| {
            let part = off % 3 + 1;
            let cell = off / 3;
            (cell / (n * n) + 1, (cell / n) % n + 1, cell % n + 1, part)
        };
        use VertexRole::*;
        Ok(if x == 1 {
            Start
        } else if x == 2 {
            Finish
        } else if x < self.row0 {
            let (block, value) = pair(x - self.block0);
            Block { block, value }
        } else if x < self.end_row0 {
            let (row, value) = pair(x - self.row0);
            Row { row, value }
        } else if x < self.col0 {
            EndRow {
                row: x - self.end_row0 + 1,
            }
        } else if x < self.end_col0 {
            let (col, value) = pair(x - self.col0);
            Col { col, value }
        } else if x < self.puzzle0 {
            EndCol {
                col: x - self.end_col0 + 1,
            }
        } else if x < self.end_puzzle0 {
            let (row, col, value, part) = triple(x - self.puzzle0);
            Puzzle {
                row,
                col,
                value,
                part,
            }
        } else if x < self.dup0 {
            let (row, col) = pair(x - self.end_puzzle0);
            EndPuzzle { row, col }
        } else if x < self.end_dup0 {
            let (row, col, value, part) = triple(x - self.dup0);
            DupPuzzle {
                row,
                col,
                value,
                part,
            }
        } else {
            let (row, col) = pair(x - self.end_dup0);
            EndDupPuzzle { row, col }
        })
    }
}

/// Label of `role` in the graph of order `n`.
pub fn label_of(role: VertexRole, n: usize) -> Result<VertexId, HcpError> {
    Labels::new(n)?.label_of(role)
}

/// Inverse of [`label_of`].
pub fn role_of(label: VertexId, n: usize) -> Result<VertexRole, HcpError> {
    Labels::new(n)?.role_of(label)
}

/// Every role of order `n`, in label order.
pub fn all_roles(n: usize) -> Result<Vec<VertexRole>, HcpError> {
    use VertexRole::*;
    Labels::new(n)?;
    let r = 1..=n;
    let mut out = vec![Start, Finish];
    for block in r.clone() {
        for value in r.clone() {
            out.push(Block { block, value });
        }
    }
    for row in r.clone() {
        for value in r.clone() {
            out.push(Row { row, value });
        }
    }
    out.extend(r.clone().map(|row| EndRow { row }));
    for col in r.clone() {
        for value in r.clone() {
            out.push(Col { col, value });
        }
    }
    out.extend(r.clone().map(|col| EndCol { col }));
    let cells: Vec<(usize, usize)> = r
        .clone()
        .flat_map(|i| r.clone().map(move |j| (i, j)))
        .collect();
    for &(row, col) in &cells {
        for value in r.clone() {
            for part in 1..=3 {
                out.push(Puzzle {
                    row,
                    col,
                    value,
                    part,
                });
            }
        }
    }
    out.extend(cells.iter().map(|&(row, col)| EndPuzzle { row, col }));
    for &(row, col) in &cells {
        for value in r.clone() {
            for part in 1..=3 {
                out.push(DupPuzzle {
                    row,
                    col,
                    value,
                    part,
                });
            }
        }
    }
    out.extend(cells.iter().map(|&(row, col)| EndDupPuzzle { row, col }));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_labels_at_nine() {
        assert_eq!(label_of(VertexRole::Start, 9).unwrap(), 1);
        assert_eq!(role_of(2, 9).unwrap(), VertexRole::Finish);
        assert_eq!(
            role_of(3, 9).unwrap(),
            VertexRole::Block { block: 1, value: 1 }
        );
        assert_eq!(
            role_of(4799, 9).unwrap(),
            VertexRole::EndDupPuzzle { row: 9, col: 9 }
        );
        assert_eq!(
            label_of(VertexRole::EndPuzzle { row: 1, col: 1 }, 9).unwrap(),
            2451
        );
        assert_eq!(
            label_of(
                VertexRole::Puzzle {
                    row: 1,
                    col: 1,
                    value: 1,
                    part: 1
                },
                9
            )
            .unwrap(),
            264
        );
    }

    #[test]
    fn enumeration_matches_labels() {
        for n in [4, 9] {
            let roles = all_roles(n).unwrap();
            let labels = Labels::new(n).unwrap();
            assert_eq!(roles.len(), 6 * n * n * n + 5 * n * n + 2 * n + 2);
            assert_eq!(roles.len(), labels.vertex_count());
            for (idx, role) in roles.iter().enumerate() {
                let label = idx as VertexId + 1;
                assert_eq!(labels.label_of(*role).unwrap(), label);
                assert_eq!(labels.role_of(label).unwrap(), *role);
            }
        }
    }

    #[test]
    fn closed_forms() {
        for n in [4usize, 9] {
            let roles = all_roles(n).unwrap();
            let pos = |r: VertexRole| roles.iter().position(|&q| q == r).unwrap() + 1;
            for i in 1..=n {
                for j in 1..=n {
                    let v = 3 * n.pow(3) + 3 * n * n + (i + 1) * n + (j + 2);
                    assert_eq!(pos(VertexRole::EndPuzzle { row: i, col: j }), v);
                    for k in 1..=n {
                        let x = 3 * i * n * n + (3 * j - 1) * n + 3 * k;
                        let role = VertexRole::Puzzle {
                            row: i,
                            col: j,
                            value: k,
                            part: 1,
                        };
                        assert_eq!(pos(role), x);
                    }
                }
            }
        }
    }

    #[test]
    fn range_errors() {
        assert!(matches!(
            role_of(0, 4),
            Err(HcpError::LabelOutOfRange(0, 474))
        ));
        assert!(role_of(475, 4).is_err());
        assert!(label_of(VertexRole::Row { row: 5, value: 1 }, 4).is_err());
        assert!(label_of(
            VertexRole::Puzzle {
                row: 1,
                col: 1,
                value: 1,
                part: 4
            },
            4
        )
        .is_err());
        assert!(matches!(Labels::new(8), Err(HcpError::NotSquare(8))));
    }

    #[test]
    fn wrapping() {
        let l = Labels::new(4).unwrap();
        assert_eq!(l.wrap(5), 1);
        assert_eq!(l.wrap(6), 2);
        assert_eq!(l.wrap(0), 4);
        assert_eq!(l.wrap(3), 3);
    }
}
