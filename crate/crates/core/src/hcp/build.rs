use super::{HcpError, Labels};
use crate::graph::{DirectedGraph, VertexId};
use crate::sudoku::block_cells;

/// `6N³ + 5N² + 2N + 2`
pub fn vertex_count_formula(n: usize) -> usize {
    6 * n.pow(3) + 5 * n * n + 2 * n + 2
}

/// `19N³ + 2N² + 2N + 2`
pub fn arc_count_formula(n: usize) -> usize {
    19 * n.pow(3) + 2 * n * n + 2 * n + 2
}

impl Labels {
    /// Where the cycle goes after the duplicate triples of a cell holding `k`
    /// in block `a`: the next value of the block, the first value of the next
    /// block, or the first row vertex once every block is done.
    pub(crate) fn after_placement(&self, a: usize, k: usize) -> VertexId {
        let n = self.order();
        if k < n {
            self.block(a, k + 1)
        } else if a < n {
            self.block(a + 1, 1)
        } else {
            self.row(1, 1)
        }
    }

    /// `b_{ak} -> x_{i,j,k+1,1}`: enter cell `(i, j)` of block `a` with value `k`.
    pub(crate) fn placement_entry(
        &self,
        a: usize,
        (i, j): (usize, usize),
        k: usize,
    ) -> (VertexId, VertexId) {
        let next = self.wrap(k as isize + 1);
        (self.block(a, k), self.puzzle(i, j, next, 1))
    }

    /// `x_{i,j,k-1,3} -> y_{i,j,k+1,1}`: hop from the x ring to the y ring.
    pub(crate) fn placement_exit(&self, (i, j): (usize, usize), k: usize) -> (VertexId, VertexId) {
        let prev = self.wrap(k as isize - 1);
        let next = self.wrap(k as isize + 1);
        (self.puzzle(i, j, prev, 3), self.dup(i, j, next, 1))
    }

    /// `y_{i,j,k-1,3} -> after_placement(a, k)`: leave the y ring.
    pub(crate) fn placement_return(
        &self,
        a: usize,
        (i, j): (usize, usize),
        k: usize,
    ) -> (VertexId, VertexId) {
        let prev = self.wrap(k as isize - 1);
        (self.dup(i, j, prev, 3), self.after_placement(a, k))
    }
}

/// Builds the blank directed instance of order `n`.
///
/// The hand-off into the row phase is emitted from every cell of the last
/// block (`y_{i,j,N-1,3} -> r_{11}`), and the block-advance arcs only for
/// blocks before it, so that value `N` of the last block may sit in any of
/// its cells.
pub fn build_hcp(n: usize) -> Result<DirectedGraph, HcpError> {
    let l = Labels::new(n)?;
    let mut arcs: Vec<(VertexId, VertexId)> = Vec::with_capacity(arc_count_formula(n));
    let r = 1..=n;

    arcs.push((l.start(), l.block(1, 1)));
    arcs.push((l.end_col(n), l.finish()));
    arcs.push((l.finish(), l.start()));

    for a in r.clone() {
        for cell in block_cells(a, n) {
            for k in r.clone() {
                arcs.push(l.placement_entry(a, cell, k));
                arcs.push(l.placement_return(a, cell, k));
            }
        }
    }

    for i in r.clone() {
        for j in r.clone() {
            for k in r.clone() {
                let next = l.wrap(k as isize + 1);
                let skip = l.wrap(k as isize + 2);
                let (x1, x2, x3) = (
                    l.puzzle(i, j, k, 1),
                    l.puzzle(i, j, k, 2),
                    l.puzzle(i, j, k, 3),
                );
                let (y1, y2, y3) = (l.dup(i, j, k, 1), l.dup(i, j, k, 2), l.dup(i, j, k, 3));
                arcs.extend([(x1, x2), (x2, x1), (x2, x3), (x3, x2)]);
                arcs.push((x3, l.puzzle(i, j, next, 1)));
                arcs.extend([(y1, y2), (y2, y1), (y2, y3), (y3, y2)]);
                arcs.push((y3, l.dup(i, j, next, 1)));
                arcs.push((x3, l.dup(i, j, skip, 1)));

                arcs.push((l.row(i, k), x3));
                arcs.push((x1, l.end_puzzle(i, j)));
                arcs.push((l.end_puzzle(i, j), l.row(i, k)));
                arcs.push((l.col(j, k), l.dup(i, j, k, 3)));
                arcs.push((y1, l.end_dup(i, j)));
                arcs.push((l.end_dup(i, j), l.col(j, k)));
            }
            arcs.push((l.end_puzzle(i, j), l.end_row(i)));
            arcs.push((l.end_dup(i, j), l.end_col(j)));
        }
    }

    for i in 1..n {
        arcs.push((l.end_row(i), l.row(i + 1, 1)));
        arcs.push((l.end_col(i), l.col(i + 1, 1)));
    }
    arcs.push((l.end_row(n), l.col(1, 1)));

    let g = DirectedGraph::from_arcs(l.vertex_count(), arcs)
        .expect("construction emits a simple digraph");
    debug_assert_eq!(g.arc_count(), arc_count_formula(n));
    Ok(g)
}
