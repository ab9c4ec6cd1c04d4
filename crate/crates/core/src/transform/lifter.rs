use std::fmt::Write as _;

use super::{orient_and_project, TransformError};
use crate::graph::{HamiltonianCycle, VertexId};

/// One graph rewrite, stated in the vertex ids in force when it happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransformRecord {
    /// Directed graph on `original_n` vertices replaced by its in/middle/out triplication.
    Triplication { original_n: usize },
    /// Vertex `removed` deleted and its two neighbours joined by a new edge.
    GadgetRemoval {
        removed: VertexId,
        bridge: (VertexId, VertexId),
    },
    /// Adjacent degree-2 vertices `path[1]` and `path[2]` merged into
    /// `survivor` (the smaller of the two). `path[0]` and `path[3]` are the
    /// attachments on either side.
    Contraction {
        survivor: VertexId,
        path: [VertexId; 4],
    },
    /// Edge `(u, v)` deleted.
    EdgeDeletion { u: VertexId, v: VertexId },
    /// Order-preserving renumbering from `before` to `after` ids, squeezing
    /// out every vertex removed since the previous compaction.
    Compaction { before: usize, after: usize },
}

impl TransformRecord {
    fn removed_vertex(&self) -> Option<VertexId> {
        match *self {
            TransformRecord::GadgetRemoval { removed, .. } => Some(removed),
            TransformRecord::Contraction { survivor, path } => Some(if path[1] == survivor {
                path[2]
            } else {
                path[1]
            }),
            _ => None,
        }
    }
}

/// Ordered journal of rewrites from some initial graph to a final graph.
/// Replaying it backwards maps a Hamiltonian cycle of the final graph to one
/// of the initial graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleLifter {
    records: Vec<TransformRecord>,
}

impl CycleLifter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn records(&self) -> &[TransformRecord] {
        &self.records
    }

    pub fn push(&mut self, record: TransformRecord) {
        self.records.push(record);
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Journal of `self` followed by `later`.
    pub fn then(mut self, later: CycleLifter) -> CycleLifter {
        self.records.extend(later.records);
        self
    }

    /// Line-oriented text: `T n`, `G removed u v`, `C survivor p a b q`,
    /// `D u v`, `R before after`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            match r {
                TransformRecord::Triplication { original_n } => writeln!(out, "T {original_n}"),
                TransformRecord::GadgetRemoval { removed, bridge } => {
                    writeln!(out, "G {removed} {} {}", bridge.0, bridge.1)
                }
                TransformRecord::Contraction { survivor, path } => writeln!(
                    out,
                    "C {survivor} {} {} {} {}",
                    path[0], path[1], path[2], path[3]
                ),
                TransformRecord::EdgeDeletion { u, v } => writeln!(out, "D {u} {v}"),
                TransformRecord::Compaction { before, after } => {
                    writeln!(out, "R {before} {after}")
                }
            }
            .expect("writing to a String");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, TransformError> {
        let mut records = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || TransformError::Journal(lineno + 1, line.to_string());
            let mut parts = line.split_whitespace();
            let tag = parts.next().ok_or_else(bad)?;
            let nums: Vec<u64> = parts
                .map(|p| p.parse::<u64>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            let id = |x: u64| VertexId::try_from(x).map_err(|_| bad());
            let rec = match (tag, nums.as_slice()) {
                ("T", &[n]) => TransformRecord::Triplication {
                    original_n: n as usize,
                },
                ("G", &[r, u, v]) => TransformRecord::GadgetRemoval {
                    removed: id(r)?,
                    bridge: (id(u)?, id(v)?),
                },
                ("C", &[s, p, a, b, q]) => {
                    let (s, a, b) = (id(s)?, id(a)?, id(b)?);
                    if s != a.min(b) {
                        return Err(bad());
                    }
                    TransformRecord::Contraction {
                        survivor: s,
                        path: [id(p)?, a, b, id(q)?],
                    }
                }
                ("D", &[u, v]) => TransformRecord::EdgeDeletion {
                    u: id(u)?,
                    v: id(v)?,
                },
                ("R", &[b, a]) if a <= b => TransformRecord::Compaction {
                    before: b as usize,
                    after: a as usize,
                },
                _ => return Err(bad()),
            };
            records.push(rec);
        }
        Ok(CycleLifter { records })
    }
}

/// Doubly linked cyclic order used while replaying, so insertions are O(1).
struct Ring {
    succ: Vec<VertexId>,
    pred: Vec<VertexId>,
    head: VertexId,
    len: usize,
}

impl Ring {
    fn from_cycle(cycle: &HamiltonianCycle, size: usize) -> Result<Ring, TransformError> {
        let mut succ = vec![0; size + 1];
        let mut pred = vec![0; size + 1];
        let seq = cycle.vertices();
        if seq.is_empty() {
            return Err(TransformError::Lift("empty cycle".into()));
        }
        for (a, b) in cycle.pairs() {
            if a as usize > size || b as usize > size || a == 0 || succ[a as usize] != 0 {
                return Err(TransformError::Lift(format!(
                    "vertex {a} repeated or out of range"
                )));
            }
            succ[a as usize] = b;
            pred[b as usize] = a;
        }
        Ok(Ring {
            succ,
            pred,
            head: seq[0],
            len: seq.len(),
        })
    }

    fn contains(&self, v: VertexId) -> bool {
        (v as usize) < self.succ.len() && self.succ[v as usize] != 0
    }

    /// Puts `x` between the adjacent vertices `a` and `b`, whichever way round they sit.
    fn insert_between(
        &mut self,
        a: VertexId,
        b: VertexId,
        x: VertexId,
    ) -> Result<(), TransformError> {
        if self.contains(x) {
            return Err(TransformError::Lift(format!(
                "vertex {x} already on the cycle"
            )));
        }
        let (first, second) = if self.contains(a) && self.succ[a as usize] == b {
            (a, b)
        } else if self.contains(b) && self.succ[b as usize] == a {
            (b, a)
        } else {
            return Err(TransformError::Lift(format!(
                "{a} and {b} are not adjacent on the cycle"
            )));
        };
        self.succ[first as usize] = x;
        self.pred[x as usize] = first;
        self.succ[x as usize] = second;
        self.pred[second as usize] = x;
        self.len += 1;
        Ok(())
    }

    fn to_sequence(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.len);
        let mut v = self.head;
        for _ in 0..self.len {
            out.push(v);
            v = self.succ[v as usize];
        }
        out
    }

    fn remap(&mut self, kept: &[VertexId]) -> Result<(), TransformError> {
        let seq = self.to_sequence();
        let mapped: Vec<VertexId> = seq
            .iter()
            .map(|&v| {
                kept.get(v as usize - 1).copied().ok_or_else(|| {
                    TransformError::Lift(format!("vertex {v} beyond compaction range"))
                })
            })
            .collect::<Result<_, _>>()?;
        let size = self.succ.len() - 1;
        *self = Ring::from_cycle(&HamiltonianCycle::new(mapped), size)?;
        Ok(())
    }
}

/// Replays `lifter` backwards, turning a Hamiltonian cycle of the journal's
/// final graph into one of its initial graph.
pub fn lift_cycle(
    lifter: &CycleLifter,
    cycle: &HamiltonianCycle,
) -> Result<HamiltonianCycle, TransformError> {
    let records = lifter.records();
    // kept-id tables for each compaction, from a forward scan
    let mut kept_tables: Vec<Option<Vec<VertexId>>> = vec![None; records.len()];
    let mut pending: Vec<VertexId> = Vec::new();
    for (idx, r) in records.iter().enumerate() {
        if let Some(v) = r.removed_vertex() {
            pending.push(v);
        }
        match *r {
            TransformRecord::Compaction { before, after } => {
                pending.sort_unstable();
                pending.dedup();
                if before - pending.len() != after {
                    return Err(TransformError::Lift(format!(
                        "compaction {before} -> {after} does not match {} removed vertices",
                        pending.len()
                    )));
                }
                let kept: Vec<VertexId> = (1..=before as VertexId)
                    .filter(|v| pending.binary_search(v).is_err())
                    .collect();
                kept_tables[idx] = Some(kept);
                pending.clear();
            }
            TransformRecord::Triplication { .. } => pending.clear(),
            _ => {}
        }
    }

    let mut size = cycle.vertices().iter().copied().max().unwrap_or(0) as usize;
    for r in records {
        size = size.max(match *r {
            TransformRecord::Compaction { before, .. } => before,
            TransformRecord::GadgetRemoval { removed, bridge } => {
                removed.max(bridge.0).max(bridge.1) as usize
            }
            TransformRecord::Contraction { path, .. } => {
                path.iter().copied().max().unwrap() as usize
            }
            TransformRecord::Triplication { original_n } => 3 * original_n,
            TransformRecord::EdgeDeletion { .. } => 0,
        });
    }

    let mut ring = Ring::from_cycle(cycle, size)?;
    let mut done_directed: Option<HamiltonianCycle> = None;
    for (idx, r) in records.iter().enumerate().rev() {
        if done_directed.is_some() {
            return Err(TransformError::Lift(
                "journal continues before a triplication".into(),
            ));
        }
        match *r {
            TransformRecord::Compaction { .. } => {
                ring.remap(kept_tables[idx].as_ref().unwrap())?;
            }
            TransformRecord::EdgeDeletion { .. } => {}
            TransformRecord::GadgetRemoval { removed, bridge } => {
                ring.insert_between(bridge.0, bridge.1, removed)?;
            }
            TransformRecord::Contraction { survivor, path } => {
                let [p, a, b, q] = path;
                if !ring.contains(survivor) {
                    return Err(TransformError::Lift(format!(
                        "survivor {survivor} not on the cycle"
                    )));
                }
                let around = (ring.pred[survivor as usize], ring.succ[survivor as usize]);
                if around != (p, q) && around != (q, p) {
                    return Err(TransformError::Lift(format!(
                        "survivor {survivor} sits between {} and {}, journal says {p} and {q}",
                        around.0, around.1
                    )));
                }
                if survivor == a {
                    ring.insert_between(a, q, b)?;
                } else {
                    ring.insert_between(p, b, a)?;
                }
            }
            TransformRecord::Triplication { original_n } => {
                let seq = HamiltonianCycle::new(ring.to_sequence());
                done_directed = Some(orient_and_project(&seq, original_n)?);
            }
        }
    }
    Ok(done_directed.unwrap_or_else(|| HamiltonianCycle::new(ring.to_sequence())))
}
