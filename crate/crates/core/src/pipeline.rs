//! The end-to-end obstruction pipeline.
//!
//! Inputs: a finite graph `gamma`, an asserted curve-graph palette size `m_s`
//! (an external input — nothing here computes curve-graph chromatic numbers
//! for real surfaces), and optionally a surface for the rank test. If a
//! right-angled Artin group on `gamma` embeds in the mapping class group,
//! `gamma` embeds induced into the curve graph's clique graph, whose
//! chromatic number is at most `n_s = 2^{m_s}`; so certified evidence that
//! `chi(gamma) > n_s` is an obstruction. Independently, a clique of `gamma`
//! larger than the surface's multicurve rank obstructs via abelian rank.
//!
//! Both tests are one-sided: `NOT_OBSTRUCTED_BY_THESE_TESTS` never claims an
//! embedding exists.

use serde::{Deserialize, Serialize};

use crate::budget::SearchBudget;
use crate::cliques::max_clique_size;
use crate::color::chromatic_number_instrumented;
use crate::curve::{surface_rank, SurfaceType};
use crate::error::{Error, Result};
use crate::generator::{
    generate_high_girth, ChromaticEvidence, GeneratorConfig, GirthChromaticCertificate,
};
use crate::graph::SimplicialGraph;
use crate::indep::independence_number_instrumented;
use crate::lift::clique_chromatic_upper_bound;

pub const ONE_SIDED_NOTE: &str =
    "one-sided test: NOT_OBSTRUCTED_BY_THESE_TESTS does not claim an embedding exists";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "OBSTRUCTED_BY_CHROMATIC")]
    ObstructedByChromatic,
    #[serde(rename = "OBSTRUCTED_BY_RANK")]
    ObstructedByRank,
    #[serde(rename = "NOT_OBSTRUCTED_BY_THESE_TESTS")]
    NotObstructedByTheseTests,
    #[serde(rename = "UNDECIDED")]
    Undecided,
}

/// Chromatic evidence for the verdict: certificate-grade when available,
/// otherwise the bounds the search established before the budget ran out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaEvidence {
    Certificate(ChromaticEvidence),
    Bounds {
        kind: String,
        lower: usize,
        upper: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCheck {
    pub max_clique: usize,
    pub surface_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceType>,
    pub model_assumption: String,
    pub m_s: u32,
    pub n_s: u64,
    pub gamma: SimplicialGraph,
    pub gamma_chromatic_evidence: GammaEvidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_check: Option<RankCheck>,
    pub verdict: Verdict,
    pub note: String,
}

/// Runs both obstruction tests. The chromatic test fires only on
/// certificate-grade or search-refuted evidence that `chi(gamma) > 2^{m_s}`;
/// the rank test fires when a clique exceeds the surface's multicurve rank.
/// With neither decided, the verdict is `UNDECIDED` carrying the bounds.
pub fn obstruct(
    gamma: &SimplicialGraph,
    m_s: u32,
    surface: Option<SurfaceType>,
    model_assumption: Option<String>,
    budget: SearchBudget,
) -> Result<ObstructionVerdict> {
    if m_s < 1 {
        return Err(Error::InvalidParams(
            "the curve-graph palette size must be at least 1".into(),
        ));
    }
    let n_s = clique_chromatic_upper_bound(m_s)?;
    let rank_check = match surface {
        Some(s) if gamma.n() > 0 => Some(RankCheck {
            max_clique: max_clique_size(gamma)?,
            surface_rank: surface_rank(s),
        }),
        _ => None,
    };

    // chromatic evidence: exact when the budget allows, else fall back to an
    // independence bound, else report the bounds the search proved
    let (evidence, fires, decided_negative) =
        match chromatic_number_instrumented(gamma, budget) {
            Ok((chi, witness, nodes)) => {
                let ev = GammaEvidence::Certificate(ChromaticEvidence::Exact {
                    chi,
                    witness,
                    exhaustive: true,
                    search_nodes: nodes,
                });
                (ev, chi as u64 > n_s, chi as u64 <= n_s)
            }
            Err(Error::Undecided { lower, upper, .. }) => {
                match independence_number_instrumented(gamma, budget) {
                    Ok((alpha, witness, nodes)) if alpha > 0 => {
                        let bound = gamma.n().div_ceil(alpha);
                        if bound as u64 > n_s {
                            let ev =
                                GammaEvidence::Certificate(ChromaticEvidence::IndependenceBound {
                                    alpha,
                                    witness,
                                    n: gamma.n(),
                                    bound,
                                    search_nodes: nodes,
                                });
                            (ev, true, false)
                        } else {
                            let ev = GammaEvidence::Bounds {
                                kind: "undecided".into(),
                                lower,
                                upper,
                            };
                            (ev, lower as u64 > n_s, upper as u64 <= n_s)
                        }
                    }
                    _ => {
                        let ev = GammaEvidence::Bounds {
                            kind: "undecided".into(),
                            lower,
                            upper,
                        };
                        (ev, lower as u64 > n_s, upper as u64 <= n_s)
                    }
                }
            }
            Err(e) => return Err(e),
        };

    let rank_fires = rank_check.is_some_and(|rc| rc.max_clique > rc.surface_rank);
    let verdict = if fires {
        Verdict::ObstructedByChromatic
    } else if rank_fires {
        Verdict::ObstructedByRank
    } else if decided_negative {
        Verdict::NotObstructedByTheseTests
    } else {
        Verdict::Undecided
    };

    Ok(ObstructionVerdict {
        surface,
        model_assumption: model_assumption.unwrap_or_else(|| {
            format!("caller asserts the curve graph is {m_s}-colorable; not checked here")
        }),
        m_s,
        n_s,
        gamma: gamma.clone(),
        gamma_chromatic_evidence: evidence,
        rank_check,
        verdict,
        note: ONE_SIDED_NOTE.into(),
    })
}

/// Output of [`synthesize`]: the witness graph, its certificate, and the
/// verdict it forces. The certificate embeds the same graph so it stays
/// independently verifiable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SynthesisBundle {
    pub graph: SimplicialGraph,
    pub certificate: GirthChromaticCertificate,
    pub verdict: ObstructionVerdict,
}

/// Produces a graph of girth at least `m` with certified chromatic number at
/// least `2^{m_s} + 1`: a right-angled Artin group that cannot embed wherever
/// the curve graph is `m_s`-colorable.
pub fn synthesize(
    m: usize,
    m_s: u32,
    seed: u64,
    surface: Option<SurfaceType>,
    config: &GeneratorConfig,
) -> Result<SynthesisBundle> {
    let n_s = clique_chromatic_upper_bound(m_s)?;
    let n_target = usize::try_from(n_s)
        .ok()
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::PaletteTooLarge {
            m: m_s,
            max: crate::lift::MAX_PALETTE_EXPONENT,
        })?;
    let certificate = generate_high_girth(m, n_target, seed, config)?;
    let rank_check = match surface {
        Some(s) => Some(RankCheck {
            max_clique: max_clique_size(&certificate.graph)?,
            surface_rank: surface_rank(s),
        }),
        None => None,
    };
    let verdict = ObstructionVerdict {
        surface,
        model_assumption: format!(
            "caller asserts the curve graph is {m_s}-colorable; witness certified independently"
        ),
        m_s,
        n_s,
        gamma: certificate.graph.clone(),
        gamma_chromatic_evidence: GammaEvidence::Certificate(certificate.evidence.clone()),
        rank_check,
        verdict: Verdict::ObstructedByChromatic,
        note: ONE_SIDED_NOTE.into(),
    };
    Ok(SynthesisBundle {
        graph: certificate.graph.clone(),
        certificate,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s11() -> SurfaceType {
        SurfaceType::new(1, 1).unwrap()
    }

    #[test]
    fn c5_with_one_color_is_chromatically_obstructed() {
        let c5 = SimplicialGraph::cycle(5).unwrap();
        let v = obstruct(&c5, 1, Some(s11()), None, SearchBudget::default()).unwrap();
        assert_eq!(v.verdict, Verdict::ObstructedByChromatic);
        assert_eq!(v.n_s, 2);
        match v.gamma_chromatic_evidence {
            GammaEvidence::Certificate(ChromaticEvidence::Exact { chi, .. }) => {
                assert_eq!(chi, 3)
            }
            other => panic!("expected exact evidence, got {other:?}"),
        }
    }

    #[test]
    fn an_edge_with_one_color_is_rank_obstructed() {
        let k2 = SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap();
        let v = obstruct(&k2, 1, Some(s11()), None, SearchBudget::default()).unwrap();
        assert_eq!(v.verdict, Verdict::ObstructedByRank);
        let rc = v.rank_check.unwrap();
        assert_eq!((rc.max_clique, rc.surface_rank), (2, 1));
    }

    #[test]
    fn a_single_vertex_is_never_obstructed() {
        let g = SimplicialGraph::edgeless(1);
        for m_s in [1, 2, 5] {
            let v = obstruct(&g, m_s, Some(s11()), None, SearchBudget::default()).unwrap();
            assert_eq!(v.verdict, Verdict::NotObstructedByTheseTests);
            assert!(v.note.contains("one-sided"));
        }
    }

    #[test]
    fn verdict_precedence_prefers_chromatic() {
        // C5 is also rank-obstructed for the once-punctured torus, but the
        // chromatic test decides first.
        let c5 = SimplicialGraph::cycle(5).unwrap();
        let v = obstruct(&c5, 1, Some(s11()), None, SearchBudget::default()).unwrap();
        assert_eq!(v.verdict, Verdict::ObstructedByChromatic);
        assert!(v.rank_check.unwrap().max_clique > v.rank_check.unwrap().surface_rank);
    }

    #[test]
    fn starved_budget_yields_undecided_without_rank() {
        // Grotzsch graph (chi = 4) with n_s = 2, no surface, and a budget too
        // small to decide anything: bounds straddle n_s, verdict UNDECIDED.
        let g = crate::generator::mycielskian(&SimplicialGraph::cycle(5).unwrap());
        let v = obstruct(&g, 1, None, None, SearchBudget::new(2)).unwrap();
        assert_eq!(v.verdict, Verdict::Undecided);
        match v.gamma_chromatic_evidence {
            GammaEvidence::Bounds { lower, upper, .. } => {
                assert!(lower as u64 <= v.n_s);
                assert!(upper as u64 > v.n_s);
            }
            other => panic!("expected bounds, got {other:?}"),
        }
    }

    #[test]
    fn synthesize_small_bundle() {
        let bundle = synthesize(4, 1, 7, Some(s11()), &GeneratorConfig::default()).unwrap();
        assert_eq!(bundle.verdict.verdict, Verdict::ObstructedByChromatic);
        assert_eq!(bundle.certificate.claims.chromatic_lb, 3);
        assert_eq!(bundle.graph, bundle.certificate.graph);
        let report = crate::generator::verify_certificate(
            &bundle.certificate,
            SearchBudget::default(),
        )
        .unwrap();
        assert!(report.verified());
    }
}
