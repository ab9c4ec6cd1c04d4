//! Size and degree statistics.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::graph::{AnyGraph, DirectedGraph, UndirectedGraph, VertexId};

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    pub average: f64,
    /// degree -> number of vertices
    pub histogram: BTreeMap<usize, usize>,
}

impl DegreeSummary {
    fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut histogram = BTreeMap::new();
        let (mut total, mut count) = (0usize, 0usize);
        for d in degrees {
            *histogram.entry(d).or_insert(0) += 1;
            total += d;
            count += 1;
        }
        DegreeSummary {
            min: histogram.keys().next().copied().unwrap_or(0),
            max: histogram.keys().next_back().copied().unwrap_or(0),
            average: if count == 0 {
                0.0
            } else {
                total as f64 / count as f64
            },
            histogram,
        }
    }

    fn render(&self, label: &str, out: &mut String) {
        writeln!(
            out,
            "{label}: min={} max={} avg={:.4}",
            self.min, self.max, self.average
        )
        .unwrap();
        let parts: Vec<String> = self
            .histogram
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        writeln!(out, "{label}_histogram: {}", parts.join(" ")).unwrap();
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub directed: bool,
    pub vertices: usize,
    /// Arcs for directed graphs, edges otherwise.
    pub edges: usize,
    /// Total degree (in + out for directed graphs).
    pub degree: DegreeSummary,
    pub in_degree: Option<DegreeSummary>,
    pub out_degree: Option<DegreeSummary>,
}

pub fn directed_stats(g: &DirectedGraph) -> GraphStats {
    let indeg = g.in_degrees();
    let n = g.vertex_count();
    let outdeg: Vec<usize> = (1..=n as VertexId).map(|v| g.out_degree(v)).collect();
    GraphStats {
        directed: true,
        vertices: n,
        edges: g.arc_count(),
        degree: DegreeSummary::from_degrees(indeg.iter().zip(&outdeg).map(|(a, b)| a + b)),
        in_degree: Some(DegreeSummary::from_degrees(indeg.iter().copied())),
        out_degree: Some(DegreeSummary::from_degrees(outdeg)),
    }
}

pub fn undirected_stats(g: &UndirectedGraph) -> GraphStats {
    GraphStats {
        directed: false,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        degree: DegreeSummary::from_degrees(
            (1..=g.vertex_count() as VertexId).map(|v| g.degree(v)),
        ),
        in_degree: None,
        out_degree: None,
    }
}

pub fn stats(g: &AnyGraph) -> GraphStats {
    match g {
        AnyGraph::Directed(d) => directed_stats(d),
        AnyGraph::Undirected(u) => undirected_stats(u),
    }
}

impl GraphStats {
    /// Average degree rounded to four decimals, as printed in the report.
    pub fn average_degree_4dp(&self) -> String {
        format!("{:.4}", self.degree.average)
    }

    pub fn report(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "kind: {}",
            if self.directed {
                "directed"
            } else {
                "undirected"
            }
        )
        .unwrap();
        writeln!(out, "vertices: {}", self.vertices).unwrap();
        writeln!(
            out,
            "{}: {}",
            if self.directed { "arcs" } else { "edges" },
            self.edges
        )
        .unwrap();
        self.degree.render("degree", &mut out);
        if let Some(d) = &self.in_degree {
            d.render("in_degree", &mut out);
        }
        if let Some(d) = &self.out_degree {
            d.render("out_degree", &mut out);
        }
        out
    }
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.report())
    }
}
