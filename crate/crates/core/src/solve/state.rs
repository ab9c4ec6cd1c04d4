use thiserror::Error;

use crate::graph::{HamiltonianCycle, UndirectedGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeState {
    Undecided,
    Forced,
    Excluded,
}

/// The current branch cannot be completed to a Hamiltonian cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("contradiction at vertex {vertex}")]
pub struct Contradiction {
    pub vertex: VertexId,
}

#[derive(Debug, Clone, Copy)]
enum Trail {
    Edge(u32),
    Segment { v: u32, end: u32, len: u32 },
    Complete,
}

/// Edge decisions for one search branch over an undirected host graph.
///
/// Forced edges always form vertex-disjoint paths; each path endpoint knows
/// the opposite endpoint and the number of vertices on the path, which is
/// what the sub-cycle check needs. Every change is written to a trail so a
/// branch can be rolled back in time proportional to its own work.
#[derive(Debug, Clone)]
pub struct SolveState<'g> {
    graph: &'g UndirectedGraph,
    ends: Vec<(u32, u32)>,
    // per vertex: (neighbour, edge id) sorted by neighbour
    incident: Vec<Vec<(u32, u32)>>,
    edge: Vec<EdgeState>,
    forced: Vec<u32>,
    undecided: Vec<u32>,
    seg_end: Vec<u32>,
    seg_len: Vec<u32>,
    complete: bool,
    trail: Vec<Trail>,
    queue: Vec<u32>,
    fixpoints: u64,
}

impl<'g> SolveState<'g> {
    /// Fresh state with every edge undecided.
    pub fn new(graph: &'g UndirectedGraph) -> Self {
        let n = graph.vertex_count();
        let mut ends = Vec::with_capacity(graph.edge_count());
        let mut incident = vec![Vec::new(); n];
        for (u, v) in graph.edges() {
            let (a, b) = (u - 1, v - 1);
            let id = ends.len() as u32;
            ends.push((a, b));
            incident[a as usize].push((b, id));
            incident[b as usize].push((a, id));
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        let undecided = incident.iter().map(|l| l.len() as u32).collect();
        SolveState {
            graph,
            edge: vec![EdgeState::Undecided; ends.len()],
            ends,
            incident,
            forced: vec![0; n],
            undecided,
            seg_end: (0..n as u32).collect(),
            seg_len: vec![1; n],
            complete: false,
            trail: Vec::new(),
            queue: (0..n as u32).collect(),
            fixpoints: 0,
        }
    }

    pub fn graph(&self) -> &'g UndirectedGraph {
        self.graph
    }

    fn n(&self) -> usize {
        self.forced.len()
    }

    fn edge_id(&self, u: VertexId, v: VertexId) -> Option<u32> {
        let list = self.incident.get(u.checked_sub(1)? as usize)?;
        list.binary_search_by_key(&(v.wrapping_sub(1)), |&(w, _)| w)
            .ok()
            .map(|p| list[p].1)
    }

    pub fn edge_state(&self, u: VertexId, v: VertexId) -> Option<EdgeState> {
        self.edge_id(u, v).map(|e| self.edge[e as usize])
    }

    /// Number of forced edges at `v`.
    pub fn forced_degree(&self, v: VertexId) -> usize {
        self.forced[v as usize - 1] as usize
    }

    /// Forced plus undecided edges at `v`.
    pub fn available_degree(&self, v: VertexId) -> usize {
        let i = v as usize - 1;
        (self.forced[i] + self.undecided[i]) as usize
    }

    pub fn forced_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.ends
            .iter()
            .zip(&self.edge)
            .filter(|(_, &s)| s == EdgeState::Forced)
            .map(|(&(a, b), _)| (a + 1, b + 1))
    }

    pub fn forced_count(&self) -> usize {
        self.edge
            .iter()
            .filter(|&&s| s == EdgeState::Forced)
            .count()
    }

    /// The forced edges close a single cycle through every vertex.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Number of times [`SolveState::propagate`] reached a fixpoint.
    pub fn fixpoints(&self) -> u64 {
        self.fixpoints
    }

    pub(crate) fn trail_len(&self) -> usize {
        self.trail.len()
    }

    /// The Hamiltonian cycle formed by the forced edges, once complete.
    pub fn cycle(&self) -> Option<HamiltonianCycle> {
        if !self.complete {
            return None;
        }
        let n = self.n();
        let mut seq = Vec::with_capacity(n);
        let (mut prev, mut cur) = (u32::MAX, 0u32);
        for _ in 0..n {
            seq.push(cur + 1);
            let next = self.incident[cur as usize]
                .iter()
                .find(|&&(w, e)| self.edge[e as usize] == EdgeState::Forced && w != prev)
                .map(|&(w, _)| w)?;
            prev = cur;
            cur = next;
        }
        Some(HamiltonianCycle::new(seq))
    }

    fn contradiction(v: u32) -> Contradiction {
        Contradiction { vertex: v + 1 }
    }

    /// Marks edge `(u, v)` as part of the cycle. Propagation is deferred to
    /// [`SolveState::propagate`].
    pub fn force(&mut self, u: VertexId, v: VertexId) -> Result<(), Contradiction> {
        let e = self.edge_id(u, v).ok_or(Contradiction { vertex: u })?;
        self.force_id(e)
    }

    /// Marks edge `(u, v)` as unusable.
    pub fn exclude(&mut self, u: VertexId, v: VertexId) -> Result<(), Contradiction> {
        let e = self.edge_id(u, v).ok_or(Contradiction { vertex: u })?;
        self.exclude_id(e);
        Ok(())
    }

    pub(crate) fn force_id(&mut self, e: u32) -> Result<(), Contradiction> {
        match self.edge[e as usize] {
            EdgeState::Forced => return Ok(()),
            EdgeState::Excluded => return Err(Self::contradiction(self.ends[e as usize].0)),
            EdgeState::Undecided => {}
        }
        let (u, v) = self.ends[e as usize];
        for w in [u, v] {
            if self.forced[w as usize] >= 2 {
                return Err(Self::contradiction(w));
            }
        }
        let (a, b) = (self.seg_end[u as usize], self.seg_end[v as usize]);
        let n = self.n() as u32;
        self.edge[e as usize] = EdgeState::Forced;
        self.trail.push(Trail::Edge(e));
        for w in [u, v] {
            self.forced[w as usize] += 1;
            self.undecided[w as usize] -= 1;
            self.queue.push(w);
        }
        if a == v {
            // closes the path u .. v
            if self.seg_len[u as usize] == n {
                self.complete = true;
                self.trail.push(Trail::Complete);
                return Ok(());
            }
            return Err(Self::contradiction(u));
        }
        let len = self.seg_len[u as usize] + self.seg_len[v as usize];
        for x in [a, b] {
            self.trail.push(Trail::Segment {
                v: x,
                end: self.seg_end[x as usize],
                len: self.seg_len[x as usize],
            });
        }
        self.seg_end[a as usize] = b;
        self.seg_end[b as usize] = a;
        self.seg_len[a as usize] = len;
        self.seg_len[b as usize] = len;
        if len < n {
            if let Some(closing) = self.edge_id(a + 1, b + 1) {
                if self.edge[closing as usize] == EdgeState::Undecided {
                    self.exclude_id(closing);
                }
            }
        }
        Ok(())
    }

    pub(crate) fn exclude_id(&mut self, e: u32) {
        if self.edge[e as usize] != EdgeState::Undecided {
            return;
        }
        let (u, v) = self.ends[e as usize];
        self.edge[e as usize] = EdgeState::Excluded;
        self.trail.push(Trail::Edge(e));
        for w in [u, v] {
            self.undecided[w as usize] -= 1;
            self.queue.push(w);
        }
    }

    /// Runs the degree rules to a fixpoint:
    /// a vertex with exactly two usable edges forces both; a vertex with two
    /// forced edges excludes the rest; a forced path never closes early.
    pub fn propagate(&mut self) -> Result<(), Contradiction> {
        while let Some(v) = self.queue.pop() {
            if self.complete {
                self.queue.clear();
                break;
            }
            let i = v as usize;
            let (f, u) = (self.forced[i], self.undecided[i]);
            if f > 2 || f + u < 2 {
                self.queue.clear();
                return Err(Self::contradiction(v));
            }
            if u == 0 {
                continue;
            }
            let want_force = f + u == 2;
            if f == 2 || want_force {
                let pending: Vec<u32> = self.incident[i]
                    .iter()
                    .filter(|&&(_, e)| self.edge[e as usize] == EdgeState::Undecided)
                    .map(|&(_, e)| e)
                    .collect();
                for e in pending {
                    let r = if f == 2 {
                        self.exclude_id(e);
                        Ok(())
                    } else {
                        self.force_id(e)
                    };
                    if let Err(c) = r {
                        self.queue.clear();
                        return Err(c);
                    }
                }
            }
        }
        self.fixpoints += 1;
        Ok(())
    }

    /// Rolls back every change made after the trail had length `mark`.
    pub(crate) fn undo_to(&mut self, mark: usize) {
        self.queue.clear();
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Trail::Segment { v, end, len } => {
                    self.seg_end[v as usize] = end;
                    self.seg_len[v as usize] = len;
                }
                Trail::Complete => self.complete = false,
                Trail::Edge(e) => {
                    let (u, v) = self.ends[e as usize];
                    let was_forced = self.edge[e as usize] == EdgeState::Forced;
                    self.edge[e as usize] = EdgeState::Undecided;
                    for w in [u, v] {
                        self.undecided[w as usize] += 1;
                        if was_forced {
                            self.forced[w as usize] -= 1;
                        }
                    }
                }
            }
        }
    }

    /// Undecided edge at the vertex with the fewest usable edges, ties to the
    /// smallest id; `pick` chooses among that vertex's undecided edges.
    pub(crate) fn branch_edge(&self, pick: impl FnOnce(usize) -> usize) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        for (i, (&f, &u)) in self.forced.iter().zip(&self.undecided).enumerate() {
            if u == 0 {
                continue;
            }
            let avail = f + u;
            if best.is_none_or(|(b, _)| avail < b) {
                best = Some((avail, i as u32));
                if avail <= 3 {
                    // propagation leaves no undecided edge at lower degree
                    break;
                }
            }
        }
        let (_, v) = best?;
        let open: Vec<u32> = self.incident[v as usize]
            .iter()
            .filter(|&&(_, e)| self.edge[e as usize] == EdgeState::Undecided)
            .map(|&(_, e)| e)
            .collect();
        let idx = pick(open.len()).min(open.len() - 1);
        Some(open[idx])
    }

    /// Non-excluded edges connect every vertex.
    pub(crate) fn connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, e) in &self.incident[v as usize] {
                if self.edge[e as usize] != EdgeState::Excluded && !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

/// Consumes a state and returns it at its propagation fixpoint.
pub fn propagate(mut state: SolveState<'_>) -> Result<SolveState<'_>, Contradiction> {
    state.propagate()?;
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: u32) -> UndirectedGraph {
        UndirectedGraph::from_edges(n as usize, (1..=n).map(|v| (v, v % n + 1))).unwrap()
    }

    #[test]
    fn five_cycle_forced_completely() {
        let g = cycle_graph(5);
        let s = propagate(SolveState::new(&g)).unwrap();
        assert!(s.is_complete());
        assert_eq!(s.forced_count(), 5);
        assert_eq!(s.cycle().unwrap().len(), 5);
    }

    #[test]
    fn saturated_vertex_excludes_rest() {
        let mut e = Vec::new();
        for u in 1..=5u32 {
            for v in u + 1..=5 {
                e.push((u, v));
            }
        }
        let g = UndirectedGraph::from_edges(5, e).unwrap();
        let mut s = SolveState::new(&g);
        s.force(1, 2).unwrap();
        s.force(1, 3).unwrap();
        s.propagate().unwrap();
        assert_eq!(s.edge_state(1, 4), Some(EdgeState::Excluded));
        assert_eq!(s.edge_state(1, 5), Some(EdgeState::Excluded));
        // closing 2-3 would leave a 3-cycle
        assert_eq!(s.edge_state(2, 3), Some(EdgeState::Excluded));
        assert_eq!(s.edge_state(4, 5), Some(EdgeState::Undecided));
        assert!(!s.is_complete());
    }

    #[test]
    fn forcing_completes_cycle() {
        let g = UndirectedGraph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .unwrap();
        let mut s = SolveState::new(&g);
        s.force(1, 2).unwrap();
        s.force(1, 3).unwrap();
        s.propagate().unwrap();
        assert!(s.is_complete());
        assert_eq!(s.cycle().unwrap().canonical(false).0, vec![1, 2, 4, 3]);
    }

    #[test]
    fn short_cycle_is_excluded() {
        // two triangles sharing vertex 3 plus extra chords; forcing 1-2 and 2-3 bans 1-3
        let g = UndirectedGraph::from_edges(
            5,
            [
                (1, 2),
                (2, 3),
                (1, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let mut s = SolveState::new(&g);
        s.force(1, 2).unwrap();
        s.force(2, 3).unwrap();
        assert_eq!(s.edge_state(1, 3), Some(EdgeState::Excluded));
    }

    #[test]
    fn low_degree_contradiction() {
        let g = UndirectedGraph::from_edges(4, [(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        assert!(propagate(SolveState::new(&g)).is_err());
    }

    #[test]
    fn undo_restores_state() {
        let g = UndirectedGraph::from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
            .unwrap();
        let mut s = SolveState::new(&g);
        s.propagate().unwrap();
        let mark = s.trail_len();
        s.force(1, 2).unwrap();
        s.force(1, 3).unwrap();
        s.propagate().unwrap();
        s.undo_to(mark);
        for (u, v) in g.edges() {
            assert_eq!(s.edge_state(u, v), Some(EdgeState::Undecided));
        }
        assert!(!s.is_complete());
        assert!((1..=4).all(|v| s.forced_degree(v) == 0 && s.available_degree(v) == 3));
    }
}
