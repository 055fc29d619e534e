//! Lifting a coloring of a graph to a coloring of its clique graph.
//!
//! Given a valid coloring `f` of `G` by integers, color the clique graph by
//! assigning to the vertex of a clique `K` the set `{f(u) : u in K}`.
//! Adjacent clique-graph vertices come from distinct cliques whose union is a
//! clique, and a color present in one but not the other separates the set
//! tokens, so the lift is always valid. A palette of `M` integers therefore
//! lifts into the nonempty subsets of the palette: at most `2^M - 1` tokens,
//! and in particular the clique graph's chromatic number is at most `2^M`.

use std::collections::BTreeSet;

use crate::cliques::CliqueGraph;
use crate::color::{ColorToken, Coloring};
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

/// Largest supported palette exponent for [`clique_chromatic_upper_bound`].
pub const MAX_PALETTE_EXPONENT: u32 = 62;

/// Lifts a valid integer coloring of `g` to a set-token coloring of the
/// clique graph `gk`. Rejects invalid colorings naming a monochromatic edge.
pub fn lift_coloring(g: &SimplicialGraph, gk: &CliqueGraph, f: &Coloring) -> Result<Coloring> {
    gk.check_base(g)?;
    if let Some((u, v)) = f.first_violation(g)? {
        return Err(Error::MonochromaticEdge { u, v });
    }
    let ints = integer_tokens(f)?;
    let tokens = gk
        .cliques()
        .iter()
        .map(|k| {
            let set: BTreeSet<i64> = k.members().iter().map(|&u| ints[u]).collect();
            ColorToken::Set(set.into_iter().collect())
        })
        .collect();
    Ok(Coloring::new(tokens))
}

fn integer_tokens(f: &Coloring) -> Result<Vec<i64>> {
    f.tokens()
        .iter()
        .map(|t| match t {
            ColorToken::Int(v) => Ok(*v),
            ColorToken::Set(_) => Err(Error::InvalidParams(
                "lift_coloring needs integer color tokens; re-palette set-valued colorings first"
                    .into(),
            )),
        })
        .collect()
}

/// Outcome of checking a claimed lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftCheck {
    pub ok: bool,
    pub failure: Option<LiftFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftFailure {
    /// An edge of the clique graph got equal tokens.
    MonochromaticEdge { u: usize, v: usize },
    /// A clique vertex's token is not the image of its members' colors.
    TokenMismatch {
        clique_vertex: usize,
        expected: ColorToken,
        got: ColorToken,
    },
}

impl std::fmt::Display for LiftFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LiftFailure::MonochromaticEdge { u, v } => {
                write!(f, "clique-graph edge ({u}, {v}) is monochromatic")
            }
            LiftFailure::TokenMismatch {
                clique_vertex,
                expected,
                got,
            } => write!(
                f,
                "clique vertex {clique_vertex} has token {got}, expected {expected}"
            ),
        }
    }
}

/// Checks that `g_lift` is exactly the lift of `f` and is a valid coloring of
/// the clique graph. The first violated edge (or wrong token) is reported.
pub fn verify_lift(
    g: &SimplicialGraph,
    gk: &CliqueGraph,
    f: &Coloring,
    g_lift: &Coloring,
) -> Result<LiftCheck> {
    gk.check_base(g)?;
    if g_lift.len() != gk.graph().n() {
        return Err(Error::ColoringSizeMismatch {
            got: g_lift.len(),
            n: gk.graph().n(),
        });
    }
    if let Some((u, v)) = g_lift.first_violation(gk.graph())? {
        return Ok(LiftCheck {
            ok: false,
            failure: Some(LiftFailure::MonochromaticEdge { u, v }),
        });
    }
    let ints = integer_tokens(f)?;
    if ints.len() != g.n() {
        return Err(Error::ColoringSizeMismatch {
            got: ints.len(),
            n: g.n(),
        });
    }
    for (i, k) in gk.cliques().iter().enumerate() {
        let set: BTreeSet<i64> = k.members().iter().map(|&u| ints[u]).collect();
        let expected = ColorToken::Set(set.into_iter().collect());
        if g_lift.token(i) != &expected {
            return Ok(LiftCheck {
                ok: false,
                failure: Some(LiftFailure::TokenMismatch {
                    clique_vertex: i,
                    expected,
                    got: g_lift.token(i).clone(),
                }),
            });
        }
    }
    Ok(LiftCheck {
        ok: true,
        failure: None,
    })
}

/// `2^M`: the palette bound for clique graphs of `M`-colorable graphs. The
/// lift itself uses only nonempty subsets, so `2^M - 1` tokens suffice; the
/// round bound is the one quoted downstream. Errors above
/// [`MAX_PALETTE_EXPONENT`] rather than overflowing.
pub fn clique_chromatic_upper_bound(m: u32) -> Result<u64> {
    if m > MAX_PALETTE_EXPONENT {
        return Err(Error::PaletteTooLarge {
            m,
            max: MAX_PALETTE_EXPONENT,
        });
    }
    Ok(1u64 << m)
}
