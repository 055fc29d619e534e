//! Words in right-angled Artin groups.
//!
//! A word over a defining graph is a sequence of syllables `(vertex,
//! exponent)` with nonzero exponents. Generators on adjacent vertices
//! commute; nothing else does. Two reduced words represent the same group
//! element exactly when one can be shuffled into the other by swapping
//! adjacent syllables on adjacent vertices, so we compute a canonical
//! representative: first reduce (merge and cancel syllables that can be
//! brought together by shuffles), then greedily emit, at each step, the
//! frontable syllable with the least vertex id. Equality of elements is then
//! equality of normal forms, and the support of an element (the vertices
//! appearing in a reduced word for it) is read off the normal form.
//!
//! Exponents are arbitrary-precision: the support-reduction step multiplies
//! exponents and must not overflow silently.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: BigInt,
}

/// A word in the right-angled Artin group on `ambient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagWord {
    ambient: Arc<SimplicialGraph>,
    syllables: Vec<Syllable>,
}

impl RaagWord {
    pub fn identity(ambient: Arc<SimplicialGraph>) -> Self {
        Self {
            ambient,
            syllables: Vec::new(),
        }
    }

    /// Builds a word, validating vertex ids and nonzero exponents.
    pub fn new(
        ambient: Arc<SimplicialGraph>,
        syllables: Vec<(usize, BigInt)>,
    ) -> Result<Self> {
        for (v, e) in &syllables {
            ambient.check_vertex(*v)?;
            if e.is_zero() {
                return Err(Error::ZeroExponent(*v));
            }
        }
        Ok(Self {
            ambient,
            syllables: syllables
                .into_iter()
                .map(|(vertex, exponent)| Syllable { vertex, exponent })
                .collect(),
        })
    }

    /// Single generator raised to a nonzero power.
    pub fn generator(ambient: Arc<SimplicialGraph>, vertex: usize, exponent: i64) -> Result<Self> {
        Self::new(ambient, vec![(vertex, BigInt::from(exponent))])
    }

    pub fn ambient(&self) -> &Arc<SimplicialGraph> {
        &self.ambient
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    fn same_ambient(&self, other: &RaagWord) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &RaagWord) -> Result<RaagWord> {
        if !self.same_ambient(other) {
            return Err(Error::AmbientMismatch);
        }
        let mut syllables = self.syllables.clone();
        syllables.extend(other.syllables.iter().cloned());
        Ok(RaagWord {
            ambient: self.ambient.clone(),
            syllables,
        })
    }

    /// The inverse word: reversed syllables with negated exponents.
    pub fn inverse(&self) -> RaagWord {
        RaagWord {
            ambient: self.ambient.clone(),
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    vertex: s.vertex,
                    exponent: -s.exponent.clone(),
                })
                .collect(),
        }
    }

    /// `self^k` by syllable repetition; meant for small test exponents.
    pub fn pow(&self, k: i64) -> RaagWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut syllables = Vec::new();
        for _ in 0..k.unsigned_abs() {
            syllables.extend(base.syllables.iter().cloned());
        }
        RaagWord {
            ambient: self.ambient.clone(),
            syllables,
        }
    }

    /// Canonical normal form: reduced, then lexicographically least among
    /// shuffle-equivalent words under the vertex order.
    pub fn normal_form(&self) -> RaagWord {
        let reduced = reduce(&self.ambient, self.syllables.clone());
        let canonical = canonicalize(&self.ambient, reduced);
        RaagWord {
            ambient: self.ambient.clone(),
            syllables: canonical,
        }
    }

    /// Vertices appearing in the normal form.
    pub fn support(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .normal_form()
            .syllables
            .iter()
            .map(|s| s.vertex)
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn is_identity(&self) -> bool {
        self.normal_form().syllables.is_empty()
    }

    /// Group-element equality via normal forms.
    pub fn element_eq(&self, other: &RaagWord) -> Result<bool> {
        Ok(self.concat(&other.inverse())?.is_identity())
    }

    /// True iff the commutator `[self, other]` is trivial.
    pub fn commutes(&self, other: &RaagWord) -> Result<bool> {
        let commutator = self
            .concat(other)?
            .concat(&self.inverse())?
            .concat(&other.inverse())?;
        Ok(commutator.is_identity())
    }

    /// Total absolute exponent mass; reduction never increases it.
    pub fn exponent_mass(&self) -> BigInt {
        self.syllables
            .iter()
            .map(|s| s.exponent.abs())
            .sum::<BigInt>()
    }

    /// Parses whitespace-separated syllables `label^exponent` (bare `label`
    /// means exponent 1). The empty string is the identity.
    pub fn parse(ambient: &Arc<SimplicialGraph>, text: &str) -> Result<RaagWord> {
        let mut syllables = Vec::new();
        for tok in text.split_whitespace() {
            let (label, exp_text) = match tok.rsplit_once('^') {
                Some((l, e)) => (l, e),
                None => (tok, "1"),
            };
            let vertex = ambient
                .vertex_by_label(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            let exponent: BigInt = exp_text
                .parse()
                .map_err(|_| Error::WordParse(tok.to_string()))?;
            if exponent.is_zero() {
                return Err(Error::ZeroExponent(vertex));
            }
            syllables.push((vertex, exponent));
        }
        RaagWord::new(ambient.clone(), syllables)
    }

    /// Text form `label^exp label^exp ...`; the identity is the empty string.
    pub fn to_text(&self) -> String {
        self.syllables
            .iter()
            .map(|s| format!("{}^{}", self.ambient.label(s.vertex), s.exponent))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Repeatedly merges syllable pairs on the same vertex that are separated
/// only by syllables commuting with it, cancelling to nothing when exponents
/// sum to zero. The result is reduced: no shuffle sequence can create another
/// cancellation.
fn reduce(g: &SimplicialGraph, mut syls: Vec<Syllable>) -> Vec<Syllable> {
    'scan: loop {
        for i in 0..syls.len() {
            let v = syls[i].vertex;
            for j in (i + 1)..syls.len() {
                if syls[j].vertex == v {
                    let merged = &syls[i].exponent + &syls[j].exponent;
                    syls.remove(j);
                    if merged.is_zero() {
                        syls.remove(i);
                    } else {
                        syls[i].exponent = merged;
                    }
                    continue 'scan;
                }
                if !g.has_edge(syls[j].vertex, v) {
                    break; // blocked: nothing beyond j can reach i
                }
            }
        }
        return syls;
    }
}

/// Greedy lexicographic ordering of a reduced word: emit, among the syllables
/// that can be shuffled to the front, the one with the least vertex id. In a
/// reduced word two frontable syllables never share a vertex, so the choice
/// is unambiguous.
fn canonicalize(g: &SimplicialGraph, mut syls: Vec<Syllable>) -> Vec<Syllable> {
    let mut out = Vec::with_capacity(syls.len());
    while !syls.is_empty() {
        let mut best = 0; // index 0 is always frontable
        for i in 1..syls.len() {
            let frontable = syls[..i]
                .iter()
                .all(|s| g.has_edge(s.vertex, syls[i].vertex));
            if frontable && syls[i].vertex < syls[best].vertex {
                best = i;
            }
        }
        out.push(syls.remove(best));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: SimplicialGraph) -> Arc<SimplicialGraph> {
        Arc::new(g)
    }

    fn k2() -> Arc<SimplicialGraph> {
        arc(SimplicialGraph::from_edges(2, &[(0, 1)])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap())
    }

    fn free2() -> Arc<SimplicialGraph> {
        arc(SimplicialGraph::edgeless(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap())
    }

    fn p3() -> Arc<SimplicialGraph> {
        arc(SimplicialGraph::path(3)
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap())
    }

    #[test]
    fn commuting_generators_cancel() {
        // a b a^-1 b over K2 reduces to b^2
        let g = k2();
        let w = RaagWord::parse(&g, "a^1 b^1 a^-1 b^1").unwrap();
        let nf = w.normal_form();
        assert_eq!(nf.to_text(), "b^2");
        assert_eq!(w.support(), vec![1]);
    }

    #[test]
    fn free_group_word_stays_reduced() {
        let g = free2();
        let w = RaagWord::parse(&g, "a^1 b^1 a^-1").unwrap();
        assert_eq!(w.normal_form().to_text(), "a^1 b^1 a^-1");
    }

    /// Exhaustive closure under swaps of adjacent syllables on adjacent
    /// vertices; true when some reachable word has an adjacent same-vertex
    /// pair (a merge or cancellation).
    fn shuffle_closure_reaches_merge(g: &SimplicialGraph, start: &[Syllable]) -> bool {
        let key = |s: &[Syllable]| {
            s.iter()
                .map(|x| (x.vertex, x.exponent.clone()))
                .collect::<Vec<_>>()
        };
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![start.to_vec()];
        seen.insert(key(start));
        while let Some(cur) = queue.pop() {
            if cur.windows(2).any(|t| t[0].vertex == t[1].vertex) {
                return true;
            }
            for i in 0..cur.len().saturating_sub(1) {
                if g.has_edge(cur[i].vertex, cur[i + 1].vertex) {
                    let mut next = cur.clone();
                    next.swap(i, i + 1);
                    if seen.insert(key(&next)) {
                        queue.push(next);
                    }
                }
            }
        }
        false
    }

    #[test]
    fn p3_shuffle_reachable_cancellation_is_found() {
        // a c b c^-1 a^-1 over a-b-c: swapping the commuting pair (b, c^-1)
        // brings the c syllables together and the word collapses to b. The
        // exhaustive shuffle oracle confirms a cancellation is reachable.
        let g = p3();
        let w = RaagWord::parse(&g, "a^1 c^1 b^1 c^-1 a^-1").unwrap();
        assert!(shuffle_closure_reaches_merge(&g, w.syllables()));
        assert_eq!(w.normal_form().to_text(), "b^1");
        assert_eq!(w.support(), vec![1]);
    }

    #[test]
    fn p3_blocked_word_stays_reduced() {
        // a c b a^-1 over a-b-c: the a pair is blocked by c (a !~ c), and the
        // shuffle oracle confirms no reachable cancellation.
        let g = p3();
        let w = RaagWord::parse(&g, "a^1 c^1 b^1 a^-1").unwrap();
        assert!(!shuffle_closure_reaches_merge(&g, w.syllables()));
        let nf = w.normal_form();
        assert_eq!(nf.syllable_count(), 4);
        assert_eq!(nf.to_text(), "a^1 b^1 c^1 a^-1");
    }

    #[test]
    fn identity_support_is_empty() {
        let g = k2();
        assert_eq!(RaagWord::identity(g.clone()).support(), Vec::<usize>::new());
        let w = RaagWord::parse(&g, "a^2 a^-2").unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn commutation_cases() {
        let g = k2();
        let a = RaagWord::parse(&g, "a^1").unwrap();
        let b = RaagWord::parse(&g, "b^1").unwrap();
        assert!(a.commutes(&b).unwrap());

        let f = free2();
        let a = RaagWord::parse(&f, "a^1").unwrap();
        let b = RaagWord::parse(&f, "b^1").unwrap();
        assert!(!a.commutes(&b).unwrap());

        let p = p3();
        let ab = RaagWord::parse(&p, "a^1 b^1").unwrap();
        let bc = RaagWord::parse(&p, "b^1 c^1").unwrap();
        let b_alone = RaagWord::parse(&p, "b^1").unwrap();
        assert!(!ab.commutes(&bc).unwrap());
        assert!(ab.commutes(&b_alone).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = RaagWord::parse(&k2(), "a^1").unwrap();
        let b = RaagWord::parse(&free2(), "b^1").unwrap();
        assert!(matches!(a.commutes(&b), Err(Error::AmbientMismatch)));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let g = p3();
        let w = RaagWord::parse(&g, "c^2 a^1 b^-1 a^-1 c^-2 b^1").unwrap();
        let nf = w.normal_form();
        assert_eq!(nf.normal_form(), nf);
    }

    #[test]
    fn element_equality_via_normal_forms() {
        let g = k2();
        let u = RaagWord::parse(&g, "a^1 b^1").unwrap();
        let v = RaagWord::parse(&g, "b^1 a^1").unwrap();
        assert!(u.element_eq(&v).unwrap());
        assert_eq!(u.normal_form(), v.normal_form());
        let w = RaagWord::parse(&g, "a^1 b^2").unwrap();
        assert!(!u.element_eq(&w).unwrap());
    }

    #[test]
    fn parse_rejects_garbage() {
        let g = k2();
        assert!(matches!(
            RaagWord::parse(&g, "z^1"),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            RaagWord::parse(&g, "a^0"),
            Err(Error::ZeroExponent(0))
        ));
        assert!(matches!(
            RaagWord::parse(&g, "a^x"),
            Err(Error::WordParse(_))
        ));
    }

    #[test]
    fn parse_round_trip() {
        let g = p3();
        let w = RaagWord::parse(&g, "a^1 b^-2 c^3").unwrap();
        assert_eq!(RaagWord::parse(&g, &w.to_text()).unwrap(), w);
        assert_eq!(RaagWord::parse(&g, "").unwrap().syllable_count(), 0);
        // bare label means exponent 1
        assert_eq!(
            RaagWord::parse(&g, "a b").unwrap(),
            RaagWord::parse(&g, "a^1 b^1").unwrap()
        );
    }

    #[test]
    fn pow_and_inverse() {
        let g = free2();
        let w = RaagWord::parse(&g, "a^1 b^1").unwrap();
        let sq = w.pow(2);
        assert_eq!(sq.normal_form().to_text(), "a^1 b^1 a^1 b^1");
        assert!(w.pow(-1).element_eq(&w.inverse()).unwrap());
        assert!(w.pow(0).is_identity());
        assert!(w.concat(&w.inverse()).unwrap().is_identity());
    }
}
