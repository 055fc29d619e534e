//! Finite simplicial graphs: the universal substrate.
//!
//! A [`SimplicialGraph`] is a finite simple graph: vertices are dense ids
//! `0..n`, adjacency is symmetric and irreflexive, and optional string labels
//! are unique. Values are immutable after construction and cheap to share;
//! every consumer in this crate builds on them.

use std::collections::BTreeSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite simple graph with optional unique vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    /// Sorted neighbor lists, one per vertex.
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl SimplicialGraph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// are rejected naming the offending pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            labels: None,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self { adj, labels: None }
    }

    /// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are well-formed")
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Self::from_edges(10, &edges).expect("petersen edges are well-formed")
    }

    /// Attaches labels; they must be unique and match the vertex count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LabelCountMismatch {
                got: labels.len(),
                n: self.n(),
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|ns| ns.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as ordered pairs u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its decimal id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(ls) => ls.iter().position(|l| l == label),
            None => label.parse::<usize>().ok().filter(|&v| v < self.n()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Induced subgraph on `keep`. Returns the graph together with the map
    /// new id -> old id (sorted ascending), so callers can translate back.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(SimplicialGraph, Vec<usize>)> {
        let mut old_ids: Vec<usize> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        for &v in &old_ids {
            self.check_vertex(v)?;
        }
        let mut new_of_old = vec![usize::MAX; self.n()];
        for (new, &old) in old_ids.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut edges = Vec::new();
        for &old_u in &old_ids {
            for &old_v in self.neighbors(old_u) {
                if old_u < old_v && new_of_old[old_v] != usize::MAX {
                    edges.push((new_of_old[old_u], new_of_old[old_v]));
                }
            }
        }
        let mut g = SimplicialGraph::from_edges(old_ids.len(), &edges)?;
        if let Some(ls) = &self.labels {
            g = g.with_labels(old_ids.iter().map(|&v| ls[v].clone()).collect())?;
        }
        Ok((g, old_ids))
    }

    /// Removes one vertex, shifting higher ids down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<SimplicialGraph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// True when every pair in `members` is adjacent (singletons qualify).
    pub fn is_clique(&self, members: &[usize]) -> bool {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Adjacency bitsets (dense), used by the clique and coloring searches.
    pub(crate) fn adjacency_bitsets(&self) -> Vec<Vec<u64>> {
        let words = self.n().div_ceil(64);
        let mut rows = vec![vec![0u64; words]; self.n()];
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns {
                rows[u][v / 64] |= 1u64 << (v % 64);
            }
        }
        rows
    }
}

/// Wire form of a graph: `{"n": .., "edges": [[u,v],..], "labels": [..]?}`.
/// Deserialization re-validates every invariant, so malformed files (self
/// loops, range errors, duplicate labels) are rejected at parse time.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for SimplicialGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edges(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        let mut g = SimplicialGraph::from_edges(repr.n, &repr.edges)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        if let Some(labels) = repr.labels {
            g = g
                .with_labels(labels)
                .map_err(|e| D::Error::custom(e.to_string()))?;
        }
        Ok(g)
    }
}

/// A nonempty set of pairwise-adjacent vertices, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique {
    members: Vec<usize>,
}

impl Clique {
    /// Validates membership against `g`: nonempty, in range, pairwise adjacent.
    pub fn new(g: &SimplicialGraph, members: Vec<usize>) -> Result<Self> {
        let mut m = members;
        m.sort_unstable();
        m.dedup();
        if m.is_empty() {
            return Err(Error::InvalidParams("a clique must be nonempty".into()));
        }
        for &v in &m {
            g.check_vertex(v)?;
        }
        for (i, &u) in m.iter().enumerate() {
            for &v in &m[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::NotAClique { members: m, u, v });
                }
            }
        }
        Ok(Self { members: m })
    }

    /// Caller asserts the members form a clique; used by the enumerator.
    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!members.is_empty());
        Self { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sorted union of two cliques' member lists (not necessarily a clique).
    pub fn union_members(&self, other: &Clique) -> Vec<usize> {
        let mut u: Vec<usize> = self
            .members
            .iter()
            .chain(other.members.iter())
            .copied()
            .collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    /// Display form like `{0,2,5}` using the host graph's labels.
    pub fn display(&self, g: &SimplicialGraph) -> String {
        let parts: Vec<String> = self.members.iter().map(|&v| g.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }
}
