use super::{in_copy, mid_copy, out_copy, CycleLifter, TransformError, TransformRecord};
use crate::graph::{DirectedGraph, HamiltonianCycle, UndirectedGraph, VertexId};

/// The standard triplication: vertex `i` becomes the path
/// `3i-2 - 3i-1 - 3i`, and arc `(u, v)` becomes edge `(3u, 3v-2)`.
pub fn undirect(g: &DirectedGraph) -> (UndirectedGraph, CycleLifter) {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * n + g.arc_count());
    for i in 1..=n as VertexId {
        edges.push((in_copy(i), mid_copy(i)));
        edges.push((mid_copy(i), out_copy(i)));
    }
    edges.extend(g.arcs().map(|(u, v)| (out_copy(u), in_copy(v))));
    let ug = UndirectedGraph::from_edges(3 * n, edges)
        .expect("triplication of a simple digraph is simple");
    let mut lifter = CycleLifter::new();
    lifter.push(TransformRecord::Triplication { original_n: n });
    (ug, lifter)
}

/// Collapses a Hamiltonian cycle of the triplication of an `n`-vertex
/// digraph back to a directed cycle. Every middle copy forces its triple to
/// appear consecutively; the traversal direction is the one in which each
/// triple reads in-copy, middle, out-copy.
pub fn orient_and_project(
    cycle: &HamiltonianCycle,
    n: usize,
) -> Result<HamiltonianCycle, TransformError> {
    let seq = cycle.vertices();
    if seq.len() != 3 * n || n == 0 {
        return Err(TransformError::Triples(format!(
            "length {} is not 3 x {n}",
            seq.len()
        )));
    }
    let len = seq.len();
    let start = seq
        .iter()
        .position(|&v| v == 1)
        .ok_or_else(|| TransformError::Triples("vertex 1 missing".into()))?;
    let forward = if seq[(start + 1) % len] == 2 {
        true
    } else if seq[(start + len - 1) % len] == 2 {
        false
    } else {
        return Err(TransformError::Triples(
            "in-copy of vertex 1 not beside its middle".into(),
        ));
    };
    let at = |t: usize| {
        if forward {
            seq[(start + t) % len]
        } else {
            seq[(start + len - t) % len]
        }
    };
    let mut seen = vec![false; n + 1];
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let a = at(3 * t);
        if a % 3 != 1 || a as usize > 3 * n {
            return Err(TransformError::Triples(format!("{a} is not an in-copy")));
        }
        let i = a.div_ceil(3);
        if at(3 * t + 1) != mid_copy(i) || at(3 * t + 2) != out_copy(i) || seen[i as usize] {
            return Err(TransformError::Triples(format!(
                "triple of vertex {i} is broken"
            )));
        }
        seen[i as usize] = true;
        out.push(i);
    }
    Ok(HamiltonianCycle::new(out))
}
