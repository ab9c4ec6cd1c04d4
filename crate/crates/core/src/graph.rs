//! Simple directed and undirected graphs over vertex ids `1..=n`, stored as
//! sorted adjacency lists so every iteration is in ascending label order.

use thiserror::Error;

/// 1-based vertex label.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} outside 1..={1}")]
    VertexOutOfRange(VertexId, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(VertexId, VertexId),
}

fn check_pair(u: VertexId, v: VertexId, n: usize) -> Result<(), GraphError> {
    for w in [u, v] {
        if w == 0 || w as usize > n {
            return Err(GraphError::VertexOutOfRange(w, n));
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    out: Vec<Vec<VertexId>>,
    arcs: usize,
}

impl DirectedGraph {
    /// Builds a simple digraph; rejects loops, duplicates and out-of-range ids.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            check_pair(u, v, n)?;
            out[u as usize - 1].push(v);
        }
        let mut total = 0;
        for (idx, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::Duplicate(idx as VertexId + 1, w[0]));
            }
            total += list.len();
        }
        Ok(DirectedGraph { out, arcs: total })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn successors(&self, u: VertexId) -> &[VertexId] {
        &self.out[u as usize - 1]
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        (1..=self.out.len()).contains(&(u as usize)) && self.successors(u).binary_search(&v).is_ok()
    }

    /// Arcs in ascending lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u as VertexId + 1, v)))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.out.len()];
        for (_, v) in self.arcs() {
            deg[v as usize - 1] += 1;
        }
        deg
    }

    pub fn out_degree(&self, u: VertexId) -> usize {
        self.successors(u).len()
    }

    /// The same graph with the given arcs dropped (missing arcs are ignored).
    pub fn without_arcs(&self, removed: &std::collections::BTreeSet<(VertexId, VertexId)>) -> Self {
        let mut out = self.out.clone();
        let mut arcs = self.arcs;
        for &(u, v) in removed {
            let list = &mut out[u as usize - 1];
            if let Ok(pos) = list.binary_search(&v) {
                list.remove(pos);
                arcs -= 1;
            }
        }
        DirectedGraph { out, arcs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    adj: Vec<Vec<VertexId>>,
    edges: usize,
}

impl UndirectedGraph {
    /// Builds a simple graph; `(u, v)` and `(v, u)` are the same edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(u, v, n)?;
            adj[u as usize - 1].push(v);
            adj[v as usize - 1].push(u);
        }
        let mut twice = 0;
        for (idx, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (idx as VertexId + 1, w[0]);
                return Err(GraphError::Duplicate(a.min(b), a.max(b)));
            }
            twice += list.len();
        }
        Ok(UndirectedGraph {
            adj,
            edges: twice / 2,
        })
    }

    /// Wraps adjacency lists that are already sorted, symmetric and simple.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<VertexId>>) -> Self {
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        UndirectedGraph { adj, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[u as usize - 1]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.neighbors(u).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        (1..=self.adj.len()).contains(&(u as usize)) && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId + 1;
            list.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    pub(crate) fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.adj
    }
}

/// A graph of either kind, as read from or written to disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Directed(DirectedGraph),
    Undirected(UndirectedGraph),
}

impl AnyGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Directed(g) => g.vertex_count(),
            AnyGraph::Undirected(g) => g.vertex_count(),
        }
    }
}

/// A cyclic vertex sequence. Validity against a host graph is checked by
/// [`crate::solve::verify_cycle`], not on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamiltonianCycle(pub Vec<VertexId>);

impl HamiltonianCycle {
    pub fn new(order: Vec<VertexId>) -> Self {
        HamiltonianCycle(order)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive pairs including the closing `last -> first`.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    /// Neighbours of the vertex at `pos` as `(previous, next)`.
    pub fn around(&self, pos: usize) -> (VertexId, VertexId) {
        let n = self.0.len();
        (self.0[(pos + n - 1) % n], self.0[(pos + 1) % n])
    }

    /// Canonical rotation starting at the smallest id. For undirected cycles
    /// the direction is also fixed so the second entry is the smaller
    /// neighbour of the first; directed cycles keep their orientation.
    pub fn canonical(&self, directed: bool) -> HamiltonianCycle {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let start = (0..n).min_by_key(|&i| self.0[i]).unwrap();
        let mut seq: Vec<VertexId> = (0..n).map(|t| self.0[(start + t) % n]).collect();
        if !directed && n > 2 && seq[n - 1] < seq[1] {
            seq[1..].reverse();
        }
        HamiltonianCycle(seq)
    }

    pub fn reversed(&self) -> HamiltonianCycle {
        let mut v = self.0.clone();
        v.reverse();
        HamiltonianCycle(v)
    }
}
