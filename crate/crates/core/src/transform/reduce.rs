use std::fmt;

use super::{CycleLifter, TransformError, TransformRecord};
use crate::graph::{UndirectedGraph, VertexId};

/// Why [`reduce_graph`] concluded that no Hamiltonian cycle exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibleReason {
    /// The vertex has three or more degree-2 neighbours.
    TooManyForcedNeighbours(VertexId),
    /// The vertex has fewer than two edges.
    DegreeTooLow(VertexId),
    /// Contracting at this vertex would close a cycle shorter than the graph.
    ShortCycle(VertexId),
}

impl fmt::Display for InfeasibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfeasibleReason::TooManyForcedNeighbours(v) => {
                write!(f, "vertex {v} has three or more degree-2 neighbours")
            }
            InfeasibleReason::DegreeTooLow(v) => write!(f, "vertex {v} has degree below 2"),
            InfeasibleReason::ShortCycle(v) => write!(f, "forced sub-cycle through vertex {v}"),
        }
    }
}

struct Work {
    adj: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    alive_count: usize,
    journal: CycleLifter,
}

impl Work {
    fn deg(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a as usize];
            let pos = list.binary_search(&b).expect("edge present");
            list.remove(pos);
        }
    }

    fn add_edge(&mut self, u: VertexId, v: VertexId) {
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a as usize];
            let pos = list.binary_search(&b).expect_err("edge absent");
            list.insert(pos, b);
        }
    }

    fn infeasible(reason: InfeasibleReason) -> TransformError {
        TransformError::Infeasible(reason)
    }

    /// Rule 2 at `u`: with two degree-2 neighbours every other edge of `u` is unusable.
    fn trim(&mut self, u: VertexId) -> Result<bool, TransformError> {
        let forced: Vec<VertexId> = self.adj[u as usize]
            .iter()
            .copied()
            .filter(|&w| self.deg(w) == 2)
            .collect();
        if forced.len() >= 3 {
            return Err(Self::infeasible(InfeasibleReason::TooManyForcedNeighbours(
                u,
            )));
        }
        if forced.len() < 2 || self.deg(u) == 2 {
            return Ok(false);
        }
        let extra: Vec<VertexId> = self.adj[u as usize]
            .iter()
            .copied()
            .filter(|w| !forced.contains(w))
            .collect();
        for w in extra {
            self.remove_edge(u, w);
            self.journal.push(TransformRecord::EdgeDeletion {
                u: u.min(w),
                v: u.max(w),
            });
            if self.deg(w) < 2 {
                return Err(Self::infeasible(InfeasibleReason::DegreeTooLow(w)));
            }
        }
        Ok(true)
    }

    /// Rule 1 at `u`: merge with its smallest degree-2 neighbour.
    fn contract(&mut self, u: VertexId) -> Result<bool, TransformError> {
        if self.alive_count <= 3 || self.deg(u) != 2 {
            return Ok(false);
        }
        let Some(w) = self.adj[u as usize]
            .iter()
            .copied()
            .find(|&w| self.deg(w) == 2)
        else {
            return Ok(false);
        };
        let p = *self.adj[u as usize].iter().find(|&&x| x != w).unwrap();
        let q = *self.adj[w as usize].iter().find(|&&x| x != u).unwrap();
        if p == q {
            return Err(Self::infeasible(InfeasibleReason::ShortCycle(u)));
        }
        let (survivor, gone) = (u.min(w), u.max(w));
        // survivor inherits the far attachment of the absorbed vertex
        let far = if gone == w { q } else { p };
        self.remove_edge(u, w);
        self.remove_edge(gone, far);
        self.add_edge(survivor, far);
        self.alive[gone as usize] = false;
        self.alive_count -= 1;
        self.journal.push(TransformRecord::Contraction {
            survivor,
            path: [p, u, w, q],
        });
        Ok(true)
    }
}

/// Applies the two degree-2 rules until neither fires:
///
/// 1. two adjacent degree-2 vertices are contracted into one;
/// 2. a vertex with two degree-2 neighbours loses all its other edges.
///
/// Vertices are scanned in ascending id, rule 2 before rule 1 in every pass.
/// The survivor of a contraction keeps the smaller id; the final graph is
/// renumbered preserving order. Returns [`TransformError::Infeasible`] when
/// the rules expose a certificate of non-Hamiltonicity.
pub fn reduce_graph(g: &UndirectedGraph) -> Result<(UndirectedGraph, CycleLifter), TransformError> {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new()];
    adj.extend(g.adjacency().iter().cloned());
    let mut w = Work {
        adj,
        alive: vec![true; n + 1],
        alive_count: n,
        journal: CycleLifter::new(),
    };
    w.alive[0] = false;
    if let Some(v) = (1..=n as VertexId).find(|&v| w.deg(v) < 2) {
        return Err(Work::infeasible(InfeasibleReason::DegreeTooLow(v)));
    }

    loop {
        let mut changed = false;
        for v in 1..=n as VertexId {
            if w.alive[v as usize] {
                changed |= w.trim(v)?;
            }
        }
        for v in 1..=n as VertexId {
            while w.alive[v as usize] && w.contract(v)? {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut new_id = vec![0 as VertexId; n + 1];
    let mut next = 0;
    for (id, _) in new_id
        .iter_mut()
        .zip(&w.alive)
        .skip(1)
        .filter(|(_, &alive)| alive)
    {
        next += 1;
        *id = next;
    }
    let compact: Vec<Vec<VertexId>> = (1..=n)
        .filter(|&v| w.alive[v])
        .map(|v| w.adj[v].iter().map(|&x| new_id[x as usize]).collect())
        .collect();
    w.journal.push(TransformRecord::Compaction {
        before: n,
        after: next as usize,
    });
    Ok((UndirectedGraph::from_sorted_adjacency(compact), w.journal))
}
