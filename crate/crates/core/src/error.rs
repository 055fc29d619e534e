use thiserror::Error;

/// Crate-wide error type.
///
/// Budget exhaustion is an error, never a silent wrong answer: searches that
/// run out of nodes report the best bounds they established instead of
/// guessing.
#[derive(Debug, Error)]
pub enum Error {
    // -- graph construction ------------------------------------------------
    #[error("self-loop ({0}, {0}) is not allowed in a simplicial graph")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("label list has {got} entries but graph has {n} vertices")]
    LabelCountMismatch { got: usize, n: usize },

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    // -- cliques -----------------------------------------------------------
    #[error("clique enumeration exceeded the cap of {cap} cliques")]
    CliqueCapExceeded { cap: usize },

    #[error("vertex set {members:?} is not a clique: {u} and {v} are not adjacent")]
    NotAClique { members: Vec<usize>, u: usize, v: usize },

    // -- budgeted searches ---------------------------------------------------
    #[error("{quantity} undecided at budget: established bounds {lower}..={upper}")]
    Undecided {
        quantity: &'static str,
        lower: usize,
        upper: usize,
    },

    // -- colorings -----------------------------------------------------------
    #[error("coloring assigns {got} vertices but graph has {n}")]
    ColoringSizeMismatch { got: usize, n: usize },

    #[error("coloring has no entry for vertex {0}")]
    MissingColor(usize),

    #[error("invalid coloring: edge ({u}, {v}) is monochromatic")]
    MonochromaticEdge { u: usize, v: usize },

    #[error("clique graph does not belong to this base graph: {0}")]
    CliqueGraphMismatch(String),

    #[error("palette size {m} exceeds the supported maximum {max} for 2^M")]
    PaletteTooLarge { m: u32, max: u32 },

    // -- words ---------------------------------------------------------------
    #[error("syllable on vertex {0} has exponent zero")]
    ZeroExponent(usize),

    #[error("words are defined over different ambient graphs")]
    AmbientMismatch,

    #[error("cannot parse word syllable {0:?}")]
    WordParse(String),

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    // -- support reduction -----------------------------------------------------
    #[error("invalid clique-support map: {0}")]
    InvalidSupportMap(String),

    #[error("supports of vertices {v} and {v_prime} differ; reduction requires equal supports")]
    SupportsDiffer { v: usize, v_prime: usize },

    #[error(
        "link condition fails at ({v}, {v_prime}): neighbor {witness} of {v} is not adjacent to {v_prime}"
    )]
    LinkCondition {
        v: usize,
        v_prime: usize,
        witness: usize,
    },

    #[error("degenerate reduction: image of vertex {v} collapses to the identity (candidate map cannot be injective)")]
    DegenerateReduction { v: usize },

    #[error("supports are not pairwise distinct: vertices {u} and {v} share a support")]
    NotMinimized { u: usize, v: usize },

    #[error("not an induced embedding: {u} and {v} are non-adjacent in the source but their images are adjacent cliques")]
    NotInduced { u: usize, v: usize },

    #[error("relation is not irreflexive: pair ({0}, {0})")]
    ReflexivePair(usize),

    // -- generation --------------------------------------------------------------
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("generation budget exhausted: best girth {best_girth:?}, best chromatic lower bound {best_chromatic_lb}")]
    GenerationFailed {
        best_girth: Option<usize>,
        best_chromatic_lb: usize,
    },

    // -- surfaces -------------------------------------------------------------
    #[error("invalid surface: Euler characteristic 2 - 2g - b = {chi} is not negative")]
    InvalidSurface { chi: i64 },

    #[error("no built-in disjointness model for surface (genus {genus}, punctures {punctures}); ingest an external model or use the Farey truncation")]
    UnsupportedSurface { genus: u32, punctures: u32 },

    // -- files ------------------------------------------------------------------
    #[error("malformed {what}: {detail}")]
    Malformed {
        what: &'static str,
        detail: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
