//! Text formats: the native `DHCP`/`UHCP` edge lists, TSPLIB `HCP`
//! instances and tours, and cycle files.
//!
//! All writers emit LF line endings and ascending label order, so equal
//! graphs always serialize to identical bytes.

use std::fmt::Write as _;
use std::io;

use thiserror::Error;

use crate::graph::{
    AnyGraph, DirectedGraph, GraphError, HamiltonianCycle, UndirectedGraph, VertexId,
};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {0}: expected header, found {1:?}")]
    Header(usize, String),
    #[error("line {0}: malformed entry {1:?}")]
    Malformed(usize, String),
    #[error("header announces {expected} entries, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// `DHCP <n> <m>` followed by one `u v` line per arc.
pub fn export_directed(g: &DirectedGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.arc_count());
    writeln!(out, "DHCP {} {}", g.vertex_count(), g.arc_count()).unwrap();
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `UHCP <n> <m>` followed by one `u v` line per edge, `u < v`.
pub fn export_undirected(g: &UndirectedGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    writeln!(out, "UHCP {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn export_graph(g: &AnyGraph) -> String {
    match g {
        AnyGraph::Directed(d) => export_directed(d),
        AnyGraph::Undirected(u) => export_undirected(u),
    }
}

pub fn write_graph<W: io::Write>(g: &AnyGraph, sink: &mut W) -> Result<(), FormatError> {
    sink.write_all(export_graph(g).as_bytes())?;
    Ok(())
}

fn parse_pair(lineno: usize, line: &str) -> Result<(VertexId, VertexId), FormatError> {
    let bad = || FormatError::Malformed(lineno, line.to_string());
    let mut parts = line.split_whitespace();
    let u = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let v = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((u, v))
}

/// Inverse of [`export_graph`].
pub fn import_graph(text: &str) -> Result<AnyGraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hno, header) = lines
        .next()
        .ok_or_else(|| FormatError::Header(1, String::new()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let bad_header = || FormatError::Header(hno + 1, header.to_string());
    let (directed, n, m) = match fields.as_slice() {
        [kind @ ("DHCP" | "UHCP"), n, m] => (
            *kind == "DHCP",
            n.parse::<usize>().map_err(|_| bad_header())?,
            m.parse::<usize>().map_err(|_| bad_header())?,
        ),
        _ => return Err(bad_header()),
    };
    let pairs: Vec<(VertexId, VertexId)> = lines
        .map(|(no, l)| parse_pair(no + 1, l))
        .collect::<Result<_, _>>()?;
    if pairs.len() != m {
        return Err(FormatError::CountMismatch {
            expected: m,
            found: pairs.len(),
        });
    }
    Ok(if directed {
        AnyGraph::Directed(DirectedGraph::from_arcs(n, pairs)?)
    } else {
        AnyGraph::Undirected(UndirectedGraph::from_edges(n, pairs)?)
    })
}

/// TSPLIB `HCP` instance with an `EDGE_LIST` section, ending in `-1` and `EOF`.
pub fn export_tsplib_hcp(g: &UndirectedGraph, name: &str) -> String {
    let mut out = String::with_capacity(96 + 12 * g.edge_count());
    writeln!(out, "NAME: {name}").unwrap();
    out.push_str("TYPE: HCP\n");
    writeln!(out, "DIMENSION: {}", g.vertex_count()).unwrap();
    out.push_str("EDGE_DATA_FORMAT: EDGE_LIST\n");
    out.push_str("EDGE_DATA_SECTION\n");
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out.push_str("-1\nEOF\n");
    out
}

fn tsplib_sections(text: &str, section: &str) -> Result<(Option<usize>, Vec<i64>), FormatError> {
    let mut dimension = None;
    let mut values = Vec::new();
    let mut inside = false;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if inside {
            if line == "EOF" {
                break;
            }
            for tok in line.split_whitespace() {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| FormatError::Malformed(no + 1, line.to_string()))?;
                if v == -1 {
                    inside = false;
                    break;
                }
                values.push(v);
            }
            continue;
        }
        if line.starts_with(section) {
            inside = true;
        } else if let Some((key, value)) = line.split_once(':') {
            if key.trim() == "DIMENSION" {
                dimension = Some(
                    value
                        .trim()
                        .parse()
                        .map_err(|_| FormatError::Malformed(no + 1, line.to_string()))?,
                );
            }
        }
    }
    Ok((dimension, values))
}

/// Reads a TSPLIB `HCP` instance in `EDGE_LIST` form.
pub fn import_tsplib_hcp(text: &str) -> Result<UndirectedGraph, FormatError> {
    let (dimension, values) = tsplib_sections(text, "EDGE_DATA_SECTION")?;
    let n = dimension.ok_or_else(|| FormatError::Header(1, "missing DIMENSION".into()))?;
    if values.len() % 2 != 0 || values.iter().any(|&v| v < 1) {
        return Err(FormatError::Malformed(0, "EDGE_DATA_SECTION".into()));
    }
    let edges = values
        .chunks(2)
        .map(|p| (p[0] as VertexId, p[1] as VertexId));
    Ok(UndirectedGraph::from_edges(n, edges)?)
}

/// Reads the `TOUR_SECTION` of a TSPLIB tour file, as written by external
/// TSP/HCP solvers.
pub fn import_tsplib_tour(text: &str) -> Result<HamiltonianCycle, FormatError> {
    let (dimension, values) = tsplib_sections(text, "TOUR_SECTION")?;
    if values.iter().any(|&v| v < 1) {
        return Err(FormatError::Malformed(0, "TOUR_SECTION".into()));
    }
    if let Some(n) = dimension {
        if n != values.len() {
            return Err(FormatError::CountMismatch {
                expected: n,
                found: values.len(),
            });
        }
    }
    Ok(HamiltonianCycle::new(
        values.into_iter().map(|v| v as VertexId).collect(),
    ))
}

/// `CYCLE <n>` then one id per line, in canonical rotation (see
/// [`HamiltonianCycle::canonical`]).
pub fn export_cycle(cycle: &HamiltonianCycle, directed: bool) -> String {
    let c = cycle.canonical(directed);
    let mut out = String::with_capacity(12 + 8 * c.len());
    writeln!(out, "CYCLE {}", c.len()).unwrap();
    for v in c.vertices() {
        writeln!(out, "{v}").unwrap();
    }
    out
}

/// Reads a cycle file, or a TSPLIB tour when the text has a `TOUR_SECTION`.
pub fn import_cycle(text: &str) -> Result<HamiltonianCycle, FormatError> {
    if text.contains("TOUR_SECTION") {
        return import_tsplib_tour(text);
    }
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hno, header) = lines
        .next()
        .ok_or_else(|| FormatError::Header(1, String::new()))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["CYCLE", n] => n
            .parse()
            .map_err(|_| FormatError::Header(hno + 1, header.to_string()))?,
        _ => return Err(FormatError::Header(hno + 1, header.to_string())),
    };
    let ids: Vec<VertexId> = lines
        .map(|(no, l)| {
            l.trim()
                .parse()
                .map_err(|_| FormatError::Malformed(no + 1, l.to_string()))
        })
        .collect::<Result<_, _>>()?;
    if ids.len() != n {
        return Err(FormatError::CountMismatch {
            expected: n,
            found: ids.len(),
        });
    }
    Ok(HamiltonianCycle::new(ids))
}
