//! Exact combinatorics for right-angled Artin group embedding obstructions.
//!
//! The toolkit: finite simplicial graphs with exact clique, girth, chromatic
//! and independence computations; the subset lift that colors a clique graph
//! from a coloring of its base; words in right-angled Artin groups with
//! canonical normal forms; support minimization for candidate homomorphisms
//! and extraction of the induced clique-graph embedding; constructive
//! high-girth high-chromatic witnesses with self-contained certificates;
//! finite curve-graph models; and the obstruction pipeline combining the
//! chromatic and rank tests.
//!
//! Everything is exact and deterministic: searches either finish or report
//! the bounds they established, all orderings are canonical, and identical
//! inputs serialize to identical bytes.

pub mod budget;
pub mod cliques;
pub mod color;
pub mod curve;
pub mod embed;
pub mod error;
pub mod generator;
pub mod girth;
pub mod graph;
pub mod indep;
pub mod io;
pub mod lift;
pub mod pipeline;
pub mod raag;

pub use budget::SearchBudget;
pub use cliques::{clique_graph, enumerate_cliques, max_clique, max_clique_size, CliqueGraph,
    DEFAULT_CLIQUE_CAP};
pub use color::{
    chromatic_number, chromatic_number_instrumented, dsatur_coloring, find_k_coloring,
    is_valid_coloring, ColorToken, Coloring,
};
pub use curve::{
    chromatic_lower_bound_from_model, disjointness_graph_small, farey_truncation,
    ingest_curve_graph, surface_rank, CurveModel, CurveModelMeta, FareyVertex, SurfaceType,
};
pub use embed::{
    commutation_graph, commutation_graph_from_words, CliqueSupportMap, HomCheck, HomViolation,
    InducedEmbedding, PairCheck, ReductionStep,
};
pub use error::{Error, Result};
pub use generator::{
    generate_high_girth, generate_triangle_free, mycielskian, verify_certificate,
    ChromaticEvidence, GeneratorConfig, GirthChromaticCertificate, VerificationReport,
    VerifyOutcome,
};
pub use girth::{girth, shortest_cycle, shortest_cycle_below, Girth};
pub use graph::{Clique, SimplicialGraph};
pub use indep::{independence_number, independence_number_instrumented, is_independent};
pub use lift::{clique_chromatic_upper_bound, lift_coloring, verify_lift, LiftCheck, LiftFailure};
pub use pipeline::{
    obstruct, synthesize, GammaEvidence, ObstructionVerdict, RankCheck, SynthesisBundle, Verdict,
};
