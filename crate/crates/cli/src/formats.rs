//! File formats: graph JSON, DOT, sparse triplets and chain text.

use std::fmt::Write as _;

use kunneth_core::linalg::SparseIntegerMatrix;
use kunneth_core::{named, Chain, Graph};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk graph: `{"labels": [...], "edges": [[i, j], ...]}` with `i < j`.
/// Extra fields written by other commands are ignored on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc { labels: g.labels().to_vec(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn into_graph(self) -> Result<Graph, CliError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.labels, &edges).map_err(|e| CliError::Input(e.to_string()))
    }
}

pub fn graph_from_json(text: &str) -> Result<Graph, CliError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed graph JSON: {e}")))?;
    doc.into_graph()
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphDoc::from_graph(g)).expect("graph documents serialize")
}

/// `named:cycle:4`, `named:sun:1,0,0,0` or `named:house`.
pub fn parse_named(source: &str) -> Result<Graph, CliError> {
    let body = source.strip_prefix("named:").ok_or_else(|| CliError::Input(format!("not a named graph: `{source}`")))?;
    let (name, params) = match body.split_once(':') {
        Some((n, p)) => (n, p),
        None => (body, ""),
    };
    let params: Vec<u64> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| CliError::Input(format!("bad parameter `{p}` in `{source}`"))))
            .collect::<Result<_, _>>()?
    };
    named::named(name, &params).map_err(|e| CliError::Input(e.to_string()))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for (i, l) in g.labels().iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(l));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Header `rows cols nnz`, then one `row col value` line per nonzero entry,
/// rows in order. Lines starting with `#` are comments.
pub fn write_triplets(m: &SparseIntegerMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.rows(), m.cols(), m.nnz());
    for (r, c, v) in m.triplets() {
        let _ = writeln!(out, "{r} {c} {v}");
    }
    out
}

pub fn read_triplets(text: &str) -> Result<SparseIntegerMatrix, CliError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let bad = |what: &str| CliError::Input(format!("triplet format: {what}"));
    let header = lines.next().ok_or_else(|| bad("missing header"))?;
    let h: Vec<usize> = header.split_whitespace().map(str::parse).collect::<Result<_, _>>().map_err(|_| bad("bad header"))?;
    let [rows, cols, nnz] = h[..] else {
        return Err(bad("header needs rows cols nnz"));
    };
    let mut entries = Vec::with_capacity(nnz);
    for line in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        let [r, c, v] = f[..] else {
            return Err(bad(&format!("expected `row col value`, got `{line}`")));
        };
        let r: usize = r.parse().map_err(|_| bad(&format!("bad row `{r}`")))?;
        let c: usize = c.parse().map_err(|_| bad(&format!("bad column `{c}`")))?;
        let v: i64 = v.parse().map_err(|_| bad(&format!("bad value `{v}`")))?;
        entries.push((r, c, v));
    }
    if entries.len() != nnz {
        return Err(bad(&format!("header says {nnz} entries, found {}", entries.len())));
    }
    SparseIntegerMatrix::from_triplets(rows, cols, entries).map_err(|e| bad(&e.to_string()))
}

pub fn parse_chain(text: &str) -> Result<Chain, CliError> {
    text.parse().map_err(|e: kunneth_core::Error| CliError::Input(e.to_string()))
}
