//! Support minimization for candidate homomorphisms between right-angled
//! Artin groups, and extraction of the induced clique-graph embedding.
//!
//! A [`CliqueSupportMap`] sends each vertex of a source graph to a word over
//! a target graph whose support is a nonempty clique, with commuting images
//! across source edges. When two vertices have equal supports
//! `{x_1 < ... < x_k}` with exponent vectors `p` and `q`, the image of the
//! first can be replaced by `image(v)^{q_1} * image(v')^{-p_1}`, whose
//! exponent on `x_i` is `p_i*q_1 - q_i*p_1`; the `x_1` exponent vanishes, so
//! the support strictly shrinks. Repeating until all supports are pairwise
//! distinct, the map `v -> support(image(v))` embeds the source as an induced
//! subgraph of the target's clique graph — or fails with a concrete witness
//! that the candidate was not injective.
//!
//! The replacement is only a valid homomorphism rewrite when every source
//! neighbor of `v` is (or is adjacent to) `v'`; that link condition is
//! checked, never assumed, and reported when it fails. Injectivity itself is
//! not decidable here: this code verifies the checkable consequences and
//! names counterexamples.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::cliques::{clique_graph, CliqueGraph};
use crate::error::{Error, Result};
use crate::graph::{Clique, SimplicialGraph};
use crate::raag::RaagWord;

/// A candidate homomorphism with clique supports.
#[derive(Debug, Clone)]
pub struct CliqueSupportMap {
    source: SimplicialGraph,
    target: Arc<SimplicialGraph>,
    images: Vec<RaagWord>,
}

/// Why a map fails the clique-support homomorphism check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomViolation {
    EmptySupport { vertex: usize },
    SupportNotClique { vertex: usize, support: Vec<usize> },
    NonCommutingEdge { u: usize, v: usize },
}

impl std::fmt::Display for HomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomViolation::EmptySupport { vertex } => {
                write!(f, "image of vertex {vertex} is the identity")
            }
            HomViolation::SupportNotClique { vertex, support } => {
                write!(f, "support {support:?} of vertex {vertex} is not a clique")
            }
            HomViolation::NonCommutingEdge { u, v } => {
                write!(f, "images of edge ({u}, {v}) do not commute")
            }
        }
    }
}

/// Result of [`CliqueSupportMap::check`]: ok, or the first violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomCheck {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<HomViolation>,
}

/// One support reduction, for transcripts.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionStep {
    pub vertex: usize,
    pub against: usize,
    pub old_support: Vec<usize>,
    pub new_support: Vec<usize>,
}

/// One pair in the induced-subgraph transcript.
#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub u: usize,
    pub v: usize,
    pub source_adjacent: bool,
    pub target_adjacent: bool,
}

/// A verified induced embedding of the source into the target clique graph.
#[derive(Debug, Clone)]
pub struct InducedEmbedding {
    /// Image clique of each source vertex.
    pub delta: Vec<Clique>,
    /// Clique-graph vertex index of each image.
    pub delta_vertices: Vec<usize>,
    pub target_clique_graph: CliqueGraph,
    pub transcript: Vec<PairCheck>,
}

impl CliqueSupportMap {
    /// Builds a map; images must be indexed by source vertex and live over
    /// `target`.
    pub fn new(
        source: SimplicialGraph,
        target: Arc<SimplicialGraph>,
        images: Vec<RaagWord>,
    ) -> Result<Self> {
        if images.len() != source.n() {
            return Err(Error::InvalidSupportMap(format!(
                "{} images for {} source vertices",
                images.len(),
                source.n()
            )));
        }
        for w in &images {
            if **w.ambient() != *target {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(Self {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &SimplicialGraph {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialGraph> {
        &self.target
    }

    pub fn images(&self) -> &[RaagWord] {
        &self.images
    }

    pub fn image(&self, v: usize) -> &RaagWord {
        &self.images[v]
    }

    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.images.iter().map(|w| w.support()).collect()
    }

    /// Total support mass: the quantity each reduction strictly decreases.
    pub fn support_mass(&self) -> usize {
        self.images.iter().map(|w| w.support().len()).sum()
    }

    /// Verifies both invariants: every support is a nonempty clique of the
    /// target, and images across source edges commute. Reports the first
    /// violation in vertex order, then edge order.
    pub fn check(&self) -> Result<HomCheck> {
        for v in 0..self.source.n() {
            let supp = self.images[v].support();
            if supp.is_empty() {
                return Ok(HomCheck {
                    ok: false,
                    violation: Some(HomViolation::EmptySupport { vertex: v }),
                });
            }
            if !self.target.is_clique(&supp) {
                return Ok(HomCheck {
                    ok: false,
                    violation: Some(HomViolation::SupportNotClique {
                        vertex: v,
                        support: supp,
                    }),
                });
            }
        }
        for (u, v) in self.source.edges() {
            if !self.images[u].commutes(&self.images[v])? {
                return Ok(HomCheck {
                    ok: false,
                    violation: Some(HomViolation::NonCommutingEdge { u, v }),
                });
            }
        }
        Ok(HomCheck {
            ok: true,
            violation: None,
        })
    }

    fn require_valid(&self) -> Result<()> {
        let check = self.check()?;
        match check.violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidSupportMap(v.to_string())),
        }
    }

    /// Exponent vector of an image over its clique support: the normal form
    /// of a clique-supported word is one sorted syllable per support vertex.
    fn exponent_vector(&self, v: usize) -> (Vec<usize>, Vec<BigInt>) {
        let nf = self.images[v].normal_form();
        let mut pairs: Vec<(usize, BigInt)> = nf
            .syllables()
            .iter()
            .map(|s| (s.vertex, s.exponent.clone()))
            .collect();
        pairs.sort_by_key(|(x, _)| *x);
        let (supp, exps) = pairs.into_iter().unzip();
        (supp, exps)
    }

    /// Replaces the image of `v` by `image(v)^{q_1} * image(v')^{-p_1}` where
    /// `p`, `q` are the exponent vectors of `v`, `v'` over their common
    /// support. Requires equal supports and the link condition (every source
    /// neighbor of `v` is `v'` or adjacent to `v'`); re-verifies the result.
    pub fn reduce_equal_supports(&self, v: usize, v_prime: usize) -> Result<CliqueSupportMap> {
        self.source.check_vertex(v)?;
        self.source.check_vertex(v_prime)?;
        if v == v_prime {
            return Err(Error::InvalidParams(
                "reduction needs two distinct vertices".into(),
            ));
        }
        let (supp_v, p) = self.exponent_vector(v);
        let (supp_w, q) = self.exponent_vector(v_prime);
        if supp_v.is_empty() {
            return Err(Error::InvalidSupportMap(
                HomViolation::EmptySupport { vertex: v }.to_string(),
            ));
        }
        if supp_v != supp_w {
            return Err(Error::SupportsDiffer { v, v_prime });
        }
        for &u in self.source.neighbors(v) {
            if u != v_prime && !self.source.has_edge(u, v_prime) {
                return Err(Error::LinkCondition {
                    v,
                    v_prime,
                    witness: u,
                });
            }
        }
        // New exponents p_i*q_1 - q_i*p_1; the x_1 entry is identically zero.
        let p1 = &p[0];
        let q1 = &q[0];
        let mut syllables: Vec<(usize, BigInt)> = Vec::new();
        for i in 1..supp_v.len() {
            let e = &p[i] * q1 - &q[i] * p1;
            if !e.is_zero() {
                syllables.push((supp_v[i], e));
            }
        }
        if syllables.is_empty() {
            return Err(Error::DegenerateReduction { v });
        }
        let new_image = RaagWord::new(self.target.clone(), syllables)?;
        debug_assert!(new_image.support().len() < supp_v.len());
        let mut images = self.images.clone();
        images[v] = new_image;
        let reduced = CliqueSupportMap {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        };
        // The rewrite must preserve the homomorphism; check, don't assume.
        reduced.require_valid()?;
        Ok(reduced)
    }

    /// Applies [`Self::reduce_equal_supports`] to the lexicographically least
    /// pair with equal supports until all supports are pairwise distinct.
    /// Terminates because the support mass strictly decreases.
    pub fn minimize_supports(&self) -> Result<(CliqueSupportMap, Vec<ReductionStep>)> {
        self.require_valid()?;
        let mut current = self.clone();
        let mut steps = Vec::new();
        loop {
            let supports = current.supports();
            let mut pair: Option<(usize, usize)> = None;
            'outer: for v in 0..supports.len() {
                for w in 0..supports.len() {
                    if v != w && supports[v] == supports[w] {
                        pair = Some((v, w));
                        break 'outer;
                    }
                }
            }
            let Some((v, v_prime)) = pair else {
                return Ok((current, steps));
            };
            let next = current.reduce_equal_supports(v, v_prime)?;
            steps.push(ReductionStep {
                vertex: v,
                against: v_prime,
                old_support: supports[v].clone(),
                new_support: next.images[v].support(),
            });
            debug_assert!(next.support_mass() < current.support_mass());
            current = next;
        }
    }

    /// Reads off `v -> support(image(v))` and verifies it is an induced
    /// embedding into the target's clique graph: injective, and adjacency is
    /// preserved in both directions. A failing reverse direction names the
    /// non-adjacent pair whose images commute (the candidate was not
    /// injective); supports must already be pairwise distinct.
    pub fn extract_delta(&self, cap: usize) -> Result<InducedEmbedding> {
        self.require_valid()?;
        let supports = self.supports();
        for u in 0..supports.len() {
            for v in (u + 1)..supports.len() {
                if supports[u] == supports[v] {
                    return Err(Error::NotMinimized { u, v });
                }
            }
        }
        let ck = clique_graph(&self.target, cap)?;
        let mut delta = Vec::with_capacity(supports.len());
        let mut delta_vertices = Vec::with_capacity(supports.len());
        for supp in &supports {
            let clique = Clique::new(&self.target, supp.clone())?;
            let idx = ck.vertex_of(clique.members()).ok_or_else(|| {
                Error::InvalidSupportMap(format!("support {supp:?} missing from clique graph"))
            })?;
            delta.push(clique);
            delta_vertices.push(idx);
        }
        let mut transcript = Vec::new();
        for u in 0..supports.len() {
            for v in (u + 1)..supports.len() {
                let source_adjacent = self.source.has_edge(u, v);
                let target_adjacent = ck.graph().has_edge(delta_vertices[u], delta_vertices[v]);
                transcript.push(PairCheck {
                    u,
                    v,
                    source_adjacent,
                    target_adjacent,
                });
                if source_adjacent && !target_adjacent {
                    // Commuting clique-supported images always land adjacent;
                    // reaching this means the hom check above was violated.
                    return Err(Error::InvalidSupportMap(format!(
                        "edge ({u}, {v}) maps to non-adjacent cliques"
                    )));
                }
                if !source_adjacent && target_adjacent {
                    return Err(Error::NotInduced { u, v });
                }
            }
        }
        Ok(InducedEmbedding {
            delta,
            delta_vertices,
            target_clique_graph: ck,
            transcript,
        })
    }
}

/// Builds the commutation graph of `n` abstract elements from a symmetric,
/// irreflexive relation given as pairs. Optional labels name the elements.
pub fn commutation_graph(
    n: usize,
    relations: &[(usize, usize)],
    labels: Option<Vec<String>>,
) -> Result<SimplicialGraph> {
    for &(a, b) in relations {
        if a == b {
            return Err(Error::ReflexivePair(a));
        }
    }
    let mut g = SimplicialGraph::from_edges(n, relations)?;
    if let Some(ls) = labels {
        g = g.with_labels(ls)?;
    }
    Ok(g)
}

/// Commutation graph of concrete words: vertices are the words, edges join
/// commuting pairs.
pub fn commutation_graph_from_words(words: &[RaagWord]) -> Result<SimplicialGraph> {
    let mut edges = Vec::new();
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            if words[i].commutes(&words[j])? {
                edges.push((i, j));
            }
        }
    }
    SimplicialGraph::from_edges(words.len(), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::DEFAULT_CLIQUE_CAP;

    fn labeled(g: SimplicialGraph, labels: &[&str]) -> Arc<SimplicialGraph> {
        Arc::new(
            g.with_labels(labels.iter().map(|s| s.to_string()).collect())
                .unwrap(),
        )
    }

    fn x_k2() -> Arc<SimplicialGraph> {
        labeled(
            SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap(),
            &["x1", "x2"],
        )
    }

    fn map_over(
        source: SimplicialGraph,
        target: &Arc<SimplicialGraph>,
        words: &[&str],
    ) -> CliqueSupportMap {
        let images = words
            .iter()
            .map(|w| RaagWord::parse(target, w).unwrap())
            .collect();
        CliqueSupportMap::new(source, target.clone(), images).unwrap()
    }

    #[test]
    fn hom_check_accepts_vertex_to_vertex_map() {
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^1", "x2^1"]);
        assert!(psi.check().unwrap().ok);
    }

    #[test]
    fn hom_check_flags_non_clique_support() {
        // target path x1-x2-x3, image with support {x1, x3} not a clique
        let x = labeled(SimplicialGraph::path(3), &["x1", "x2", "x3"]);
        let gamma = SimplicialGraph::edgeless(1);
        let psi = map_over(gamma, &x, &["x1^1 x3^1"]);
        let check = psi.check().unwrap();
        assert!(!check.ok);
        assert!(matches!(
            check.violation.unwrap(),
            HomViolation::SupportNotClique { vertex: 0, .. }
        ));
    }

    #[test]
    fn hom_check_flags_non_commuting_edge() {
        let x = labeled(SimplicialGraph::edgeless(2), &["x1", "x2"]);
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^1", "x2^1"]);
        let check = psi.check().unwrap();
        assert!(!check.ok);
        assert!(matches!(
            check.violation.unwrap(),
            HomViolation::NonCommutingEdge { u: 0, v: 1 }
        ));
    }

    #[test]
    fn hom_check_accepts_identity_on_p3() {
        let x = labeled(SimplicialGraph::path(3), &["a", "b", "c"]);
        let gamma = SimplicialGraph::path(3);
        let psi = map_over(gamma, &x, &["a^1", "b^1", "c^1"]);
        assert!(psi.check().unwrap().ok);
    }

    #[test]
    fn k2_reduction_matches_the_forced_exponent() {
        // images x1 x2 (p = (1,1)) and x1 x2^2 (q = (1,2)); new exponent on
        // x2 is p2*q1 - q2*p1 = 1 - 2 = -1.
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^1 x2^1", "x1^1 x2^2"]);
        let reduced = psi.reduce_equal_supports(0, 1).unwrap();
        assert_eq!(reduced.image(0).normal_form().to_text(), "x2^-1");
        assert_eq!(reduced.image(1), psi.image(1));
        assert!(reduced.check().unwrap().ok);
    }

    #[test]
    fn singleton_supports_collapse_to_degenerate() {
        // x1^2 and x1^3: k = 1, the image of v becomes the identity.
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^2", "x1^3"]);
        assert!(matches!(
            psi.reduce_equal_supports(0, 1),
            Err(Error::DegenerateReduction { v: 0 })
        ));
    }

    #[test]
    fn k3_reduction_example() {
        // p = (2,1,1), q = (1,1,1): exponents 1*1-1*2 = -1 on x2 and x3.
        let x = labeled(SimplicialGraph::complete(3), &["x1", "x2", "x3"]);
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^2 x2^1 x3^1", "x1^1 x2^1 x3^1"]);
        let reduced = psi.reduce_equal_supports(0, 1).unwrap();
        assert_eq!(reduced.image(0).normal_form().to_text(), "x2^-1 x3^-1");
        // Cross-check against the defining word: image(v)^{q1} * image(v')^{-p1}.
        let direct = psi.image(0).pow(1).concat(&psi.image(1).pow(-2)).unwrap();
        assert!(direct.element_eq(reduced.image(0)).unwrap());
    }

    #[test]
    fn supports_must_match_for_reduction() {
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^1", "x2^1"]);
        assert!(matches!(
            psi.reduce_equal_supports(0, 1),
            Err(Error::SupportsDiffer { v: 0, v_prime: 1 })
        ));
    }

    #[test]
    fn link_condition_failure_is_named() {
        // source path u - v - v': neighbor u of v is not adjacent to v'.
        let x = x_k2();
        let gamma = SimplicialGraph::path(3);
        let psi = map_over(gamma, &x, &["x1^1 x2^1", "x1^1 x2^2", "x1^1 x2^3"]);
        let err = psi.reduce_equal_supports(1, 2).unwrap_err();
        match err {
            Error::LinkCondition {
                v: 1,
                v_prime: 2,
                witness: 0,
            } => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn minimize_identity_when_supports_distinct() {
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^1", "x1^1 x2^1"]);
        let (min, steps) = psi.minimize_supports().unwrap();
        assert!(steps.is_empty());
        assert_eq!(min.supports(), psi.supports());
    }

    #[test]
    fn minimize_k2_example_in_one_step() {
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x1^1 x2^1", "x1^1 x2^2"]);
        let (min, steps) = psi.minimize_supports().unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(min.supports(), vec![vec![1], vec![0, 1]]);
        assert!(min.check().unwrap().ok);
    }

    #[test]
    fn minimize_two_rounds_over_k3() {
        // Three isolated vertices into the abelian A(K3): round one reduces
        // vertex 0 against 1 (support drops to {x2, x3}), round two reduces 0
        // against 2 (down to {x3}); supports end pairwise distinct and the
        // homomorphism check is re-verified after each round.
        let x = labeled(SimplicialGraph::complete(3), &["x1", "x2", "x3"]);
        let gamma = SimplicialGraph::edgeless(3);
        let psi = map_over(gamma, &x, &["x1^1 x2^1 x3^1", "x1^1 x2^2 x3^3", "x2^1 x3^1"]);
        let (min, steps) = psi.minimize_supports().unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].vertex, 0);
        assert_eq!(steps[0].against, 1);
        assert_eq!(steps[1].vertex, 0);
        assert_eq!(steps[1].against, 2);
        assert_eq!(min.image(0).normal_form().to_text(), "x3^-1");
        let supports = min.supports();
        assert_eq!(supports, vec![vec![2], vec![0, 1, 2], vec![1, 2]]);
        assert!(min.check().unwrap().ok);
        assert!(min.support_mass() < psi.support_mass());
    }

    #[test]
    fn minimize_three_into_z2_degenerates() {
        // Three isolated vertices into A(K2) = Z^2: a free group of rank 3
        // cannot inject, and reductions detect it. After one round the
        // supports are {x2}, {x1,x2}, {x2}; the equal singleton pair then
        // collapses vertex 0 to the identity, reported as degenerate.
        let x = x_k2();
        let gamma = SimplicialGraph::edgeless(3);
        let psi = map_over(gamma, &x, &["x1^1 x2^1", "x1^1 x2^2", "x2^1"]);
        assert!(matches!(
            psi.minimize_supports(),
            Err(Error::DegenerateReduction { v: 0 })
        ));
    }

    #[test]
    fn extract_delta_on_minimized_k2() {
        let x = x_k2();
        let gamma = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let psi = map_over(gamma, &x, &["x2^-1", "x1^1 x2^2"]);
        let emb = psi.extract_delta(DEFAULT_CLIQUE_CAP).unwrap();
        assert_eq!(emb.delta[0].members(), &[1]);
        assert_eq!(emb.delta[1].members(), &[0, 1]);
        assert!(emb
            .target_clique_graph
            .graph()
            .has_edge(emb.delta_vertices[0], emb.delta_vertices[1]));
    }

    #[test]
    fn free_pair_into_abelian_is_flagged() {
        // Two isolated source vertices with commuting images: the reverse
        // direction of the induced check fails, as it must (a free group of
        // rank 2 does not embed in an abelian group).
        let x = x_k2();
        let gamma = SimplicialGraph::edgeless(2);
        let psi = map_over(gamma, &x, &["x1^1", "x2^1"]);
        assert!(psi.check().unwrap().ok);
        assert!(matches!(
            psi.extract_delta(DEFAULT_CLIQUE_CAP),
            Err(Error::NotInduced { u: 0, v: 1 })
        ));
    }

    #[test]
    fn identity_embedding_of_c5_passes_biconditional() {
        let x = labeled(
            SimplicialGraph::cycle(5).unwrap(),
            &["v0", "v1", "v2", "v3", "v4"],
        );
        let gamma = SimplicialGraph::cycle(5).unwrap();
        let psi = map_over(gamma, &x, &["v0^1", "v1^1", "v2^1", "v3^1", "v4^1"]);
        let emb = psi.extract_delta(DEFAULT_CLIQUE_CAP).unwrap();
        assert!(emb.delta.iter().all(|c| c.len() == 1));
        assert_eq!(emb.transcript.len(), 10);
    }

    #[test]
    fn unminimized_map_is_rejected_by_extract() {
        let x = x_k2();
        let gamma = SimplicialGraph::edgeless(2);
        let psi = map_over(gamma, &x, &["x1^1", "x1^2"]);
        assert!(matches!(
            psi.extract_delta(DEFAULT_CLIQUE_CAP),
            Err(Error::NotMinimized { u: 0, v: 1 })
        ));
    }

    #[test]
    fn commutation_graph_shapes() {
        let k3 = commutation_graph(3, &[(0, 1), (0, 2), (1, 2)], None).unwrap();
        assert_eq!(k3, SimplicialGraph::complete(3));
        let p3 = commutation_graph(3, &[(0, 1), (1, 2)], None).unwrap();
        assert_eq!(p3, SimplicialGraph::path(3));
        assert!(matches!(
            commutation_graph(2, &[(1, 1)], None),
            Err(Error::ReflexivePair(1))
        ));
    }

    #[test]
    fn commutation_graph_from_words_matches_ambient_edges() {
        let x = labeled(SimplicialGraph::path(3), &["a", "b", "c"]);
        let words = vec![
            RaagWord::parse(&x, "a^1").unwrap(),
            RaagWord::parse(&x, "b^1").unwrap(),
            RaagWord::parse(&x, "c^1").unwrap(),
        ];
        let g = commutation_graph_from_words(&words).unwrap();
        assert_eq!(g, SimplicialGraph::path(3));
    }
}
