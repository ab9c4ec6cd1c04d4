use super::{in_copy, mid_copy, out_copy, CycleLifter, TransformError, TransformRecord};
use crate::graph::{UndirectedGraph, VertexId};
use crate::hcp::{vertex_count_formula, HcpError, Labels};

/// Shrinks every x and y triple gadget of a triplicated Sudoku graph by one
/// vertex: the middle copy of the `l = 2` vertex is deleted and its two
/// neighbours are joined directly. Removes `2N³` vertices and `2N³` edges.
pub fn compress_triples(
    g: &UndirectedGraph,
    n: usize,
) -> Result<(UndirectedGraph, CycleLifter), TransformError> {
    let labels = Labels::new(n).map_err(|e: HcpError| TransformError::Shape(e.to_string()))?;
    let expected = 3 * vertex_count_formula(n);
    if g.vertex_count() != expected {
        return Err(TransformError::Shape(format!(
            "{} vertices, order {n} triplication has {expected}",
            g.vertex_count()
        )));
    }

    let n3 = n * n * n;
    let mut adj: Vec<Vec<VertexId>> = g.adjacency().to_vec();
    let mut removed = vec![false; expected + 1];
    let mut lifter = CycleLifter::new();
    for base in labels.triple_bases() {
        for t in 0..n3 {
            let middle = (base + 3 * t + 1) as VertexId;
            let (a, m, b) = (in_copy(middle), mid_copy(middle), out_copy(middle));
            if adj[m as usize - 1] != [a, b] || adj[a as usize - 1].binary_search(&b).is_ok() {
                return Err(TransformError::Shape(format!(
                    "gadget around vertex {m} is not a triple"
                )));
            }
            adj[m as usize - 1].clear();
            for (x, old, new) in [(a, m, b), (b, m, a)] {
                let list = &mut adj[x as usize - 1];
                list.retain(|&y| y != old);
                let pos = list.binary_search(&new).unwrap_err();
                list.insert(pos, new);
            }
            removed[m as usize] = true;
            lifter.push(TransformRecord::GadgetRemoval {
                removed: m,
                bridge: (a, b),
            });
        }
    }

    // order-preserving renumbering
    let mut new_id = vec![0 as VertexId; expected + 1];
    let mut next = 0;
    for v in 1..=expected {
        if !removed[v] {
            next += 1;
            new_id[v] = next;
        }
    }
    let compact: Vec<Vec<VertexId>> = (1..=expected)
        .filter(|&v| !removed[v])
        .map(|v| adj[v - 1].iter().map(|&w| new_id[w as usize]).collect())
        .collect();
    lifter.push(TransformRecord::Compaction {
        before: expected,
        after: next as usize,
    });
    Ok((UndirectedGraph::from_sorted_adjacency(compact), lifter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcp::build_hcp;
    use crate::transform::undirect;

    #[test]
    fn sizes_at_four() {
        let (u, _) = undirect(&build_hcp(4).unwrap());
        let (c, lifter) = compress_triples(&u, 4).unwrap();
        assert_eq!(c.vertex_count(), 1294);
        assert_eq!(u.vertex_count() - c.vertex_count(), 2 * 64);
        assert_eq!(u.edge_count() - c.edge_count(), 2 * 64);
        assert_eq!(lifter.records().len(), 2 * 64 + 1);
    }

    #[test]
    fn wrong_shape() {
        let (u, _) = undirect(&build_hcp(4).unwrap());
        assert!(matches!(
            compress_triples(&u, 9),
            Err(TransformError::Shape(_))
        ));
        let (c, _) = compress_triples(&u, 4).unwrap();
        assert!(compress_triples(&c, 4).is_err());
    }
}
