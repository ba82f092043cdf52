//! File formats: graph JSON ({"n": .., "edges": [[i,j], ..]}), plain-text
//! edge lists, and framework JSON ({"graph": .., "d": .., "points": ..}).
//! Vertex labels are 1-based in every format.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};
use crate::rigidity::{Framework, Realization};

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FrameworkDoc {
    graph: GraphDoc,
    d: usize,
    points: Vec<Vec<f64>>,
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
    build_graph(doc.n, &doc.edges)
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphDoc {
        n: g.order(),
        edges: g.edges().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("graph document serializes")
}

/// Plain-text edge list: first line the vertex count, then one "i j" pair
/// per line. Blank lines and `#` comments are skipped.
pub fn graph_from_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("expected \"i j\", got {line:?}")));
        };
        let i = a
            .parse()
            .map_err(|_| Error::Parse(format!("invalid vertex {a:?}")))?;
        let j = b
            .parse()
            .map_err(|_| Error::Parse(format!("invalid vertex {b:?}")))?;
        edges.push((i, j));
    }
    build_graph(n, &edges)
}

/// Parse a graph from either format, sniffing JSON by the leading brace.
pub fn graph_from_str(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        graph_from_text(text)
    }
}

pub fn framework_from_json(text: &str) -> Result<Framework> {
    let doc: FrameworkDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("framework JSON: {e}")))?;
    let graph = build_graph(doc.graph.n, &doc.graph.edges)?;
    if doc.points.iter().any(|p| p.len() != doc.d) {
        return Err(Error::DimensionMismatch(format!(
            "every point must have d={} coordinates",
            doc.d
        )));
    }
    let realization = Realization::from_points(&doc.points)?;
    Framework::new(graph, realization)
}

pub fn framework_to_json(f: &Framework) -> String {
    let doc = FrameworkDoc {
        graph: GraphDoc {
            n: f.graph().order(),
            edges: f.graph().edges().to_vec(),
        },
        d: f.dim(),
        points: f.realization().points(),
    };
    serde_json::to_string_pretty(&doc).expect("framework document serializes")
}
