//! File formats.
//!
//! Graphs: edge-list text (`n m` header then one `u v` line per edge), JSON
//! (`{"n": .., "edges": [[u,v],..], "labels": [..]?}`), and DOT (write-only).
//! Colorings: `{"colors": {"<vertex>": token}}` where a token is an integer
//! or a sorted integer array. Candidate homomorphism files:
//! `{"source": <graph or path>, "target": <graph or path>, "images":
//! {"<vertex label>": "<word text>"}}`.
//!
//! All writers emit canonical bytes: fixed field order, sorted edges, numeric
//! key order, pretty-printed with a trailing newline. Identical values always
//! serialize identically, which is what makes certificates reproducible.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::color::{ColorToken, Coloring};
use crate::curve::CurveModelMeta;
use crate::embed::CliqueSupportMap;
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::raag::RaagWord;

/// Pretty JSON with a trailing newline; the canonical on-disk form.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

// ---------------------------------------------------------------------------
// Graph JSON
// ---------------------------------------------------------------------------

/// A graph file: the graph fields plus an optional curve-model metadata block.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(flatten)]
    pub graph: SimplicialGraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<CurveModelMeta>,
}

pub fn graph_to_json(g: &SimplicialGraph, metadata: Option<&CurveModelMeta>) -> Result<String> {
    to_canonical_json(&GraphFile {
        graph: g.clone(),
        metadata: metadata.cloned(),
    })
}

pub fn graph_from_json(text: &str) -> Result<GraphFile> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Malformed {
        what: "graph JSON",
        detail: e.to_string(),
    })?;
    Ok(file)
}

// ---------------------------------------------------------------------------
// Edge-list text
// ---------------------------------------------------------------------------

pub fn graph_to_edge_list(g: &SimplicialGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_edge_list(text: &str) -> Result<SimplicialGraph> {
    let mut nums = Vec::new();
    for tok in text.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| Error::Malformed {
            what: "edge list",
            detail: format!("not a nonnegative integer: {tok:?}"),
        })?;
        nums.push(v);
    }
    if nums.len() < 2 {
        return Err(Error::Malformed {
            what: "edge list",
            detail: "missing `n m` header".into(),
        });
    }
    let (n, m) = (nums[0], nums[1]);
    if nums.len() != 2 + 2 * m {
        return Err(Error::Malformed {
            what: "edge list",
            detail: format!("expected {m} edges ({} integers), found {}", 2 * m, nums.len() - 2),
        });
    }
    let edges: Vec<(usize, usize)> = nums[2..].chunks(2).map(|c| (c[0], c[1])).collect();
    SimplicialGraph::from_edges(n, &edges)
}

// ---------------------------------------------------------------------------
// DOT export (write-only)
// ---------------------------------------------------------------------------

pub fn graph_to_dot(g: &SimplicialGraph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {} [label=\"{}\"];\n", v, escape_dot(&g.label(v))));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

// ---------------------------------------------------------------------------
// Coloring JSON
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    colors: serde_json::Map<String, serde_json::Value>,
}

pub fn coloring_to_json(f: &Coloring) -> Result<String> {
    let mut colors = serde_json::Map::new();
    for (v, tok) in f.tokens().iter().enumerate() {
        colors.insert(v.to_string(), serde_json::to_value(tok)?);
    }
    to_canonical_json(&ColoringFile { colors })
}

/// Parses a coloring file and checks it is total on a graph with `n` vertices.
pub fn coloring_from_json(text: &str, n: usize) -> Result<Coloring> {
    let file: ColoringFile = serde_json::from_str(text).map_err(|e| Error::Malformed {
        what: "coloring JSON",
        detail: e.to_string(),
    })?;
    let mut tokens: Vec<Option<ColorToken>> = vec![None; n];
    for (key, val) in &file.colors {
        let v: usize = key.parse().map_err(|_| Error::Malformed {
            what: "coloring JSON",
            detail: format!("vertex key is not an integer: {key:?}"),
        })?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let tok: ColorToken = serde_json::from_value(val.clone()).map_err(|e| Error::Malformed {
            what: "coloring JSON",
            detail: format!("bad token for vertex {v}: {e}"),
        })?;
        tokens[v] = Some(tok);
    }
    let mut out = Vec::with_capacity(n);
    for (v, t) in tokens.into_iter().enumerate() {
        out.push(t.ok_or(Error::MissingColor(v))?);
    }
    Ok(Coloring::new(out))
}

// ---------------------------------------------------------------------------
// Candidate homomorphism files
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct SupportMapFile {
    source: GraphRef,
    target: GraphRef,
    images: serde_json::Map<String, serde_json::Value>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GraphRef {
    Inline(SimplicialGraph),
    Path(String),
}

impl GraphRef {
    fn resolve(self, base_dir: Option<&Path>) -> Result<SimplicialGraph> {
        match self {
            GraphRef::Inline(g) => Ok(g),
            GraphRef::Path(p) => {
                let path = match base_dir {
                    Some(dir) => dir.join(&p),
                    None => PathBuf::from(&p),
                };
                let text = std::fs::read_to_string(&path)?;
                Ok(graph_from_json(&text)?.graph)
            }
        }
    }
}

/// Parses a candidate homomorphism. `base_dir` resolves relative graph paths;
/// pass the directory of the file being read.
pub fn support_map_from_json(text: &str, base_dir: Option<&Path>) -> Result<CliqueSupportMap> {
    let file: SupportMapFile = serde_json::from_str(text).map_err(|e| Error::Malformed {
        what: "support map JSON",
        detail: e.to_string(),
    })?;
    let source = file.source.resolve(base_dir)?;
    let target = Arc::new(file.target.resolve(base_dir)?);
    let mut images: Vec<Option<RaagWord>> = vec![None; source.n()];
    for (label, val) in &file.images {
        let v = source
            .vertex_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        let word_text = val.as_str().ok_or_else(|| Error::Malformed {
            what: "support map JSON",
            detail: format!("image of {label:?} is not a string"),
        })?;
        images[v] = Some(RaagWord::parse(&target, word_text)?);
    }
    let mut out = Vec::with_capacity(source.n());
    for (v, w) in images.into_iter().enumerate() {
        out.push(w.ok_or_else(|| Error::Malformed {
            what: "support map JSON",
            detail: format!("no image for vertex {:?}", source.label(v)),
        })?);
    }
    CliqueSupportMap::new(source, target, out)
}

pub fn read_support_map(path: &Path) -> Result<CliqueSupportMap> {
    let text = std::fs::read_to_string(path)?;
    support_map_from_json(&text, path.parent())
}

// ---------------------------------------------------------------------------
// Path-based conveniences
// ---------------------------------------------------------------------------

/// Reads a graph by extension: `.json` as graph JSON, anything else as
/// edge-list text.
pub fn read_graph(path: &Path) -> Result<(SimplicialGraph, Option<CurveModelMeta>)> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        let f = graph_from_json(&text)?;
        Ok((f.graph, f.metadata))
    } else {
        Ok((graph_from_edge_list(&text)?, None))
    }
}
