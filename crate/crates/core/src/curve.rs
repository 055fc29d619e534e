//! Finite curve-graph models and surface bookkeeping.
//!
//! Two conventions matter and must never be conflated. Under the disjointness
//! definition (edges join curves with disjoint representatives), the
//! once-punctured torus and the four-punctured sphere have *edgeless* curve
//! graphs: distinct essential curves on those surfaces always intersect, so
//! one color suffices. The Farey graph (slopes `p/q`, edges where
//! `|pq' - p'q| = 1`) is the standard *modified* model for the same surfaces.
//! Every graph carries a metadata block naming the surface and the convention
//! so downstream verdicts say which one they used.
//!
//! Exact chromatic numbers of finite induced fragments are honest lower
//! bounds for the ambient graph's chromatic number; that is all this module
//! claims.

use serde::{Deserialize, Serialize};

use crate::budget::SearchBudget;
use crate::color::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::io;

/// An orientable surface of genus `g` with `b` punctures, constrained to
/// negative Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceType {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceType {
    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        let chi = 2 - 2 * genus as i64 - punctures as i64;
        if chi >= 0 {
            return Err(Error::InvalidSurface { chi });
        }
        Ok(Self { genus, punctures })
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.punctures as i64
    }

    fn is_small_exceptional(&self) -> bool {
        (self.genus, self.punctures) == (1, 1) || (self.genus, self.punctures) == (0, 4)
    }
}

impl std::fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S_{{{},{}}}", self.genus, self.punctures)
    }
}

/// Maximum number of components of a multicurve: `3g - 3 + b`, floored at
/// zero (the thrice-punctured sphere carries no essential curves). This is
/// the maximal abelian rank available in the mapping class group, hence the
/// rank obstruction bound.
pub fn surface_rank(s: SurfaceType) -> usize {
    let r = 3 * s.genus as i64 - 3 + s.punctures as i64;
    r.max(0) as usize
}

/// A slope `p/q` in lowest terms, `1/0` for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FareyVertex {
    pub p: i64,
    pub q: u64,
}

impl FareyVertex {
    pub fn infinity() -> Self {
        Self { p: 1, q: 0 }
    }

    pub fn new(p: i64, q: u64) -> Result<Self> {
        if q == 0 {
            if p != 1 {
                return Err(Error::InvalidParams(format!(
                    "infinite slope must be 1/0, got {p}/0"
                )));
            }
            return Ok(Self::infinity());
        }
        if gcd(p.unsigned_abs(), q) != 1 {
            return Err(Error::InvalidParams(format!("{p}/{q} is not in lowest terms")));
        }
        Ok(Self { p, q })
    }

    /// Farey adjacency: `|p q' - p' q| = 1`.
    pub fn adjacent(&self, other: &FareyVertex) -> bool {
        let det = self.p as i128 * other.q as i128 - other.p as i128 * self.q as i128;
        det.abs() == 1
    }
}

impl PartialOrd for FareyVertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FareyVertex {
    /// Finite slopes ascending by value, infinity last.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self.q, other.q) {
            (0, 0) => std::cmp::Ordering::Equal,
            (0, _) => std::cmp::Ordering::Greater,
            (_, 0) => std::cmp::Ordering::Less,
            _ => {
                let lhs = self.p as i128 * other.q as i128;
                let rhs = other.p as i128 * self.q as i128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl std::fmt::Display for FareyVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Metadata naming the surface and curve-graph convention behind a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveModelMeta {
    pub surface: SurfaceType,
    pub model: CurveModel,
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub encoding: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveModel {
    Disjointness,
    Farey,
    External,
}

/// The Farey graph truncated to slopes with `max(|p|, q) <= bound`, vertices
/// in slope order (infinity last), labeled `p/q`.
pub fn farey_truncation(bound: u64) -> Result<SimplicialGraph> {
    if bound < 1 {
        return Err(Error::InvalidParams("Farey bound must be at least 1".into()));
    }
    let mut vertices: Vec<FareyVertex> = Vec::new();
    for q in 1..=bound {
        let limit = bound as i64;
        for p in -limit..=limit {
            if gcd(p.unsigned_abs(), q) == 1 {
                vertices.push(FareyVertex { p, q });
            }
        }
    }
    vertices.push(FareyVertex::infinity());
    vertices.sort();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            if vertices[i].adjacent(&vertices[j]) {
                edges.push((i, j));
            }
        }
    }
    SimplicialGraph::from_edges(vertices.len(), &edges)?
        .with_labels(vertices.iter().map(|v| v.to_string()).collect())
}

/// The honest disjointness-convention curve graph for the once-punctured
/// torus or four-punctured sphere: edgeless, because distinct essential
/// curves on those surfaces always intersect. Other surfaces are not modeled
/// here; ingest an external fragment instead.
pub fn disjointness_graph_small(s: SurfaceType, vertex_count: usize) -> Result<SimplicialGraph> {
    if !s.is_small_exceptional() {
        return Err(Error::UnsupportedSurface {
            genus: s.genus,
            punctures: s.punctures,
        });
    }
    Ok(SimplicialGraph::edgeless(vertex_count))
}

/// Loads an externally computed curve-graph fragment. The file must carry a
/// metadata block naming the surface; no topological validation happens
/// here, so the result is always flagged unverified.
pub fn ingest_curve_graph(text: &str) -> Result<(SimplicialGraph, CurveModelMeta)> {
    let file = io::graph_from_json(text)?;
    let mut meta = file.metadata.ok_or(Error::Malformed {
        what: "curve graph file",
        detail: "missing metadata block naming the surface and encoding".into(),
    })?;
    meta.verified = false;
    Ok((file.graph, meta))
}

/// Exact chromatic number of a finite model: a valid lower bound for the
/// chromatic number of any graph containing it as an induced subgraph.
pub fn chromatic_lower_bound_from_model(
    g: &SimplicialGraph,
    budget: SearchBudget,
) -> Result<usize> {
    Ok(chromatic_number(g, budget)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{clique_graph, DEFAULT_CLIQUE_CAP};

    #[test]
    fn surface_rank_values() {
        assert_eq!(surface_rank(SurfaceType::new(1, 1).unwrap()), 1);
        assert_eq!(surface_rank(SurfaceType::new(2, 0).unwrap()), 3);
        assert_eq!(surface_rank(SurfaceType::new(0, 5).unwrap()), 2);
        assert_eq!(surface_rank(SurfaceType::new(0, 4).unwrap()), 1);
        assert_eq!(surface_rank(SurfaceType::new(0, 3).unwrap()), 0);
    }

    #[test]
    fn invalid_surfaces_are_rejected() {
        assert!(matches!(
            SurfaceType::new(1, 0),
            Err(Error::InvalidSurface { chi: 0 })
        ));
        assert!(matches!(
            SurfaceType::new(0, 2),
            Err(Error::InvalidSurface { chi: 0 })
        ));
        assert!(SurfaceType::new(0, 3).is_ok());
    }

    #[test]
    fn farey_bound_one_is_two_triangles_sharing_an_edge() {
        let f1 = farey_truncation(1).unwrap();
        assert_eq!(f1.n(), 4);
        assert_eq!(f1.edge_count(), 5);
        let slope = |s: &str| f1.vertex_by_label(s).unwrap();
        let (zero, one, minus_one, inf) = (slope("0/1"), slope("1/1"), slope("-1/1"), slope("1/0"));
        assert!(!f1.has_edge(one, minus_one));
        assert!(f1.has_edge(zero, inf));
        assert!(f1.has_edge(zero, one) && f1.has_edge(one, inf));
        assert!(f1.has_edge(zero, minus_one) && f1.has_edge(minus_one, inf));
        // exhaustive determinant oracle over all pairs
        let verts: Vec<FareyVertex> = vec![
            FareyVertex::new(-1, 1).unwrap(),
            FareyVertex::new(0, 1).unwrap(),
            FareyVertex::new(1, 1).unwrap(),
            FareyVertex::infinity(),
        ];
        for (i, a) in verts.iter().enumerate() {
            for (j, b) in verts.iter().enumerate() {
                if i < j {
                    let u = f1.vertex_by_label(&a.to_string()).unwrap();
                    let v = f1.vertex_by_label(&b.to_string()).unwrap();
                    assert_eq!(f1.has_edge(u, v), a.adjacent(b));
                }
            }
        }
    }

    #[test]
    fn farey_bound_one_needs_three_colors() {
        let f1 = farey_truncation(1).unwrap();
        assert_eq!(
            chromatic_lower_bound_from_model(&f1, SearchBudget::default()).unwrap(),
            3
        );
    }

    #[test]
    fn every_truncation_contains_the_basic_triangle() {
        for d in 1..=6 {
            let f = farey_truncation(d).unwrap();
            let z = f.vertex_by_label("0/1").unwrap();
            let o = f.vertex_by_label("1/1").unwrap();
            let i = f.vertex_by_label("1/0").unwrap();
            assert!(f.has_edge(z, o) && f.has_edge(o, i) && f.has_edge(z, i));
        }
    }

    #[test]
    fn truncations_nest_as_induced_subgraphs() {
        for d in 1..6 {
            let small = farey_truncation(d).unwrap();
            let big = farey_truncation(d + 1).unwrap();
            let image: Vec<usize> = (0..small.n())
                .map(|v| big.vertex_by_label(&small.label(v)).unwrap())
                .collect();
            for u in 0..small.n() {
                for v in (u + 1)..small.n() {
                    assert_eq!(small.has_edge(u, v), big.has_edge(image[u], image[v]));
                }
            }
        }
    }

    #[test]
    fn disjointness_model_is_edgeless_and_fixed_by_clique_graph() {
        let s = SurfaceType::new(1, 1).unwrap();
        let g = disjointness_graph_small(s, 10).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 0);
        let ck = clique_graph(&g, DEFAULT_CLIQUE_CAP).unwrap();
        assert_eq!(ck.graph().n(), 10);
        assert_eq!(ck.graph().edge_count(), 0);
        assert_eq!(
            chromatic_lower_bound_from_model(&g, SearchBudget::default()).unwrap(),
            1
        );
    }

    #[test]
    fn disjointness_model_rejects_other_surfaces() {
        let s = SurfaceType::new(2, 0).unwrap();
        assert!(matches!(
            disjointness_graph_small(s, 5),
            Err(Error::UnsupportedSurface {
                genus: 2,
                punctures: 0
            })
        ));
    }

    #[test]
    fn ingest_round_trips_and_flags_unverified() {
        let f1 = farey_truncation(1).unwrap();
        let meta = CurveModelMeta {
            surface: SurfaceType::new(1, 1).unwrap(),
            model: CurveModel::Farey,
            verified: true,
            encoding: Some("slopes".into()),
        };
        let text = io::graph_to_json(&f1, Some(&meta)).unwrap();
        let (g, loaded) = ingest_curve_graph(&text).unwrap();
        assert_eq!(g, f1);
        assert!(!loaded.verified, "ingestion cannot verify topology");
        assert_eq!(loaded.model, CurveModel::Farey);
    }

    #[test]
    fn ingest_rejects_missing_metadata_and_self_loops() {
        let f1 = farey_truncation(1).unwrap();
        let text = io::graph_to_json(&f1, None).unwrap();
        assert!(ingest_curve_graph(&text).is_err());
        let bad = r#"{"n": 2, "edges": [[0, 0]], "metadata": {"surface": {"genus": 1, "punctures": 1}, "model": "external", "verified": false}}"#;
        assert!(ingest_curve_graph(bad).is_err());
    }

    #[test]
    fn farey_vertex_ordering_and_validation() {
        let mut vs = vec![
            FareyVertex::infinity(),
            FareyVertex::new(1, 2).unwrap(),
            FareyVertex::new(-1, 1).unwrap(),
            FareyVertex::new(0, 1).unwrap(),
        ];
        vs.sort();
        let shown: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, vec!["-1/1", "0/1", "1/2", "1/0"]);
        assert!(FareyVertex::new(2, 4).is_err());
        assert!(FareyVertex::new(3, 0).is_err());
    }
}
