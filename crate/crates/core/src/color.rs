//! Vertex colorings and the exact chromatic number solver.
//!
//! Tokens are opaque: plain integers for ordinary colorings, sorted integer
//! sets for lifted colorings of clique graphs. The solver is a DSATUR-ordered
//! branch and bound that climbs from a clique lower bound, refuting each
//! palette size exhaustively before moving up, so the answer is exact and
//! deterministic. Budget exhaustion is reported with the bounds established
//! so far, never papered over.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::{BudgetMeter, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

/// A color token: an integer, or a finite sorted set of integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColorToken {
    Int(i64),
    Set(Vec<i64>),
}

impl ColorToken {
    /// Set token in canonical sorted, deduplicated form.
    pub fn set(values: impl IntoIterator<Item = i64>) -> Self {
        let s: BTreeSet<i64> = values.into_iter().collect();
        ColorToken::Set(s.into_iter().collect())
    }
}

impl std::fmt::Display for ColorToken {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColorToken::Int(k) => write!(f, "{k}"),
            ColorToken::Set(s) => {
                let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

/// A total assignment of tokens to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    tokens: Vec<ColorToken>,
}

impl Coloring {
    pub fn new(tokens: Vec<ColorToken>) -> Self {
        Self { tokens }
    }

    /// Integer coloring from class indices.
    pub fn from_ints(classes: &[i64]) -> Self {
        Self {
            tokens: classes.iter().map(|&c| ColorToken::Int(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, v: usize) -> &ColorToken {
        &self.tokens[v]
    }

    pub fn tokens(&self) -> &[ColorToken] {
        &self.tokens
    }

    /// The set of distinct tokens in use.
    pub fn palette(&self) -> BTreeSet<ColorToken> {
        self.tokens.iter().cloned().collect()
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    fn check_total(&self, g: &SimplicialGraph) -> Result<()> {
        if self.tokens.len() != g.n() {
            return Err(Error::ColoringSizeMismatch {
                got: self.tokens.len(),
                n: g.n(),
            });
        }
        Ok(())
    }

    /// First monochromatic edge, if any. Errors when the assignment is not
    /// total on `g`.
    pub fn first_violation(&self, g: &SimplicialGraph) -> Result<Option<(usize, usize)>> {
        self.check_total(g)?;
        for (u, v) in g.edges() {
            if self.tokens[u] == self.tokens[v] {
                return Ok(Some((u, v)));
            }
        }
        Ok(None)
    }
}

impl serde::Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.tokens.len()))?;
        for (v, tok) in self.tokens.iter().enumerate() {
            map.serialize_entry(&v.to_string(), tok)?;
        }
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw: std::collections::BTreeMap<String, ColorToken> =
            std::collections::BTreeMap::deserialize(d)?;
        let n = raw.len();
        let mut tokens: Vec<Option<ColorToken>> = vec![None; n];
        for (key, tok) in raw {
            let v: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("vertex key is not an integer: {key:?}")))?;
            if v >= n {
                return Err(D::Error::custom(format!(
                    "coloring keys are not dense: vertex {v} with {n} entries"
                )));
            }
            tokens[v] = Some(tok);
        }
        let mut out = Vec::with_capacity(n);
        for (v, t) in tokens.into_iter().enumerate() {
            out.push(t.ok_or_else(|| D::Error::custom(format!("no color for vertex {v}")))?);
        }
        Ok(Coloring::new(out))
    }
}

/// True iff no edge of `g` is monochromatic under `f`.
pub fn is_valid_coloring(g: &SimplicialGraph, f: &Coloring) -> Result<bool> {
    Ok(f.first_violation(g)?.is_none())
}

/// Greedy DSATUR coloring; valid but not necessarily optimal. Used as the
/// upper bound inside the exact solver and as a cheap witness generator.
pub fn dsatur_coloring(g: &SimplicialGraph) -> Coloring {
    let n = g.n();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut neighbor_colors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        // Most saturated first; break ties by degree, then id.
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by(|&a, &b| {
                neighbor_colors[a]
                    .len()
                    .cmp(&neighbor_colors[b].len())
                    .then_with(|| g.degree(a).cmp(&g.degree(b)))
                    .then_with(|| b.cmp(&a))
            })
            .expect("some vertex is uncolored");
        let c = (0..).find(|c| !neighbor_colors[v].contains(c)).unwrap();
        color[v] = Some(c);
        for &u in g.neighbors(v) {
            neighbor_colors[u].insert(c);
        }
    }
    Coloring::from_ints(&color.iter().map(|c| c.unwrap() as i64).collect::<Vec<_>>())
}

/// Exact chromatic number with a witness using exactly `chi` tokens.
///
/// Climbs k upward from a clique lower bound; each level below the answer is
/// refuted by exhausting the DSATUR-ordered search. On budget exhaustion the
/// error carries the bounds proven so far.
pub fn chromatic_number(
    g: &SimplicialGraph,
    budget: SearchBudget,
) -> Result<(usize, Coloring)> {
    let (chi, witness, _nodes) = chromatic_number_instrumented(g, budget)?;
    Ok((chi, witness))
}

/// Like [`chromatic_number`], also reporting the search nodes used (for
/// certificate provenance).
pub fn chromatic_number_instrumented(
    g: &SimplicialGraph,
    budget: SearchBudget,
) -> Result<(usize, Coloring, u64)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new()), 0));
    }
    let upper = dsatur_coloring(g);
    let ub = upper.palette_size();
    let lb = greedy_clique_bound(g).max(1);
    let mut meter = BudgetMeter::new(budget);
    if lb == ub {
        return Ok((ub, canonical_relabel(&upper), meter.used()));
    }
    for k in lb..ub {
        match k_colorable(g, k, &mut meter) {
            KColor::Yes(witness) => {
                // Everything below k was refuted, so this is exact.
                return Ok((k, witness, meter.used()));
            }
            KColor::No => continue,
            KColor::Out => {
                return Err(Error::Undecided {
                    quantity: "chromatic number",
                    lower: k,
                    upper: ub,
                });
            }
        }
    }
    Ok((ub, canonical_relabel(&upper), meter.used()))
}

/// Decides k-colorability. `Ok(Some(f))` is a valid k-coloring, `Ok(None)`
/// means the search space was exhausted and no k-coloring exists; budget
/// exhaustion is an error with the trivial bounds.
pub fn find_k_coloring(
    g: &SimplicialGraph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<Coloring>> {
    let mut meter = BudgetMeter::new(budget);
    match k_colorable(g, k, &mut meter) {
        KColor::Yes(f) => Ok(Some(f)),
        KColor::No => Ok(None),
        KColor::Out => Err(Error::Undecided {
            quantity: "k-colorability",
            lower: 1,
            upper: g.n().max(1),
        }),
    }
}

/// Decides k-colorability; exhaustive when it answers `No`.
pub(crate) fn k_colorable(g: &SimplicialGraph, k: usize, meter: &mut BudgetMeter) -> KColor {
    let n = g.n();
    let mut color: Vec<usize> = vec![usize::MAX; n];
    let mut used = 0usize;
    match assign(g, k, &mut color, &mut used, 0, meter) {
        Some(true) => {
            let witness = Coloring::from_ints(
                &color.iter().map(|&c| c as i64).collect::<Vec<_>>(),
            );
            KColor::Yes(witness)
        }
        Some(false) => KColor::No,
        None => KColor::Out,
    }
}

pub(crate) enum KColor {
    Yes(Coloring),
    No,
    Out,
}

/// DSATUR-ordered backtracking. New color classes are opened at most one at a
/// time, which prunes the color-permutation symmetry without losing
/// completeness. Returns None on budget exhaustion.
fn assign(
    g: &SimplicialGraph,
    k: usize,
    color: &mut Vec<usize>,
    used: &mut usize,
    colored: usize,
    meter: &mut BudgetMeter,
) -> Option<bool> {
    let n = g.n();
    if colored == n {
        return Some(true);
    }
    // Pick the uncolored vertex with the most distinctly-colored neighbors.
    let mut best_v = usize::MAX;
    let mut best_key = (0usize, 0usize);
    for v in 0..n {
        if color[v] != usize::MAX {
            continue;
        }
        let mut mask = 0u64; // k is small in practice; a word suffices up to 64
        let mut sat = 0usize;
        for &u in g.neighbors(v) {
            let c = color[u];
            if c != usize::MAX && c < 64 {
                if mask >> c & 1 == 0 {
                    mask |= 1 << c;
                    sat += 1;
                }
            } else if c != usize::MAX {
                sat += 1;
            }
        }
        let key = (sat, g.degree(v));
        if best_v == usize::MAX || key > best_key {
            best_v = v;
            best_key = key;
        }
    }
    let v = best_v;
    let limit = (*used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&u| color[u] == c) {
            continue;
        }
        if !meter.charge() {
            return None;
        }
        color[v] = c;
        let opened = c == *used;
        if opened {
            *used += 1;
        }
        match assign(g, k, color, used, colored + 1, meter) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        color[v] = usize::MAX;
        if opened {
            *used -= 1;
        }
    }
    Some(false)
}

/// Size of a greedily-grown clique: a sound chromatic lower bound.
fn greedy_clique_bound(g: &SimplicialGraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    for start in 0..n {
        let mut clique = vec![start];
        for u in 0..n {
            if u != start && clique.iter().all(|&w| g.has_edge(w, u)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Relabels an integer coloring so classes appear as 0,1,2,... in order of
/// first use; keeps witnesses canonical.
fn canonical_relabel(f: &Coloring) -> Coloring {
    let mut map: Vec<(i64, i64)> = Vec::new();
    let mut out = Vec::with_capacity(f.len());
    for t in f.tokens() {
        let v = match t {
            ColorToken::Int(v) => *v,
            ColorToken::Set(_) => return f.clone(), // set tokens left untouched
        };
        let found = map.iter().find(|(k, _)| *k == v).map(|(_, n)| *n);
        let n = match found {
            Some(n) => n,
            None => {
                let n = map.len() as i64;
                map.push((v, n));
                n
            }
        };
        out.push(ColorToken::Int(n));
    }
    Coloring::new(out)
}
