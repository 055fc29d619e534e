//! Clique enumeration, the clique graph, and maximum cliques.
//!
//! The clique graph of `G` has one vertex per nonempty clique of `G`, with
//! `v_K ~ v_L` exactly when `K != L` and `K ∪ L` is again a clique. Note that
//! nested cliques `K ⊂ L` are adjacent (their union is `L`): the definition
//! forces it, even though it surprises at first sight.
//!
//! Clique counts blow up exponentially, so every enumeration takes an explicit
//! cap and fails loudly instead of exhausting memory.

use crate::error::{Error, Result};
use crate::graph::{Clique, SimplicialGraph};

/// Default enumeration cap.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// All nonempty cliques of `g`, each exactly once, ordered by size and then
/// lexicographically on the sorted member lists.
pub fn enumerate_cliques(g: &SimplicialGraph, cap: usize) -> Result<Vec<Clique>> {
    if cap == 0 {
        return Err(Error::InvalidParams("clique cap must be at least 1".into()));
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        stack.push(v);
        extend(g, &mut stack, cap, &mut out)?;
        stack.pop();
    }
    // DFS emits in pure lexicographic order; re-sort graded for canonical output.
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out.into_iter().map(Clique::from_sorted_unchecked).collect())
}

fn extend(
    g: &SimplicialGraph,
    stack: &mut Vec<usize>,
    cap: usize,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if out.len() >= cap {
        return Err(Error::CliqueCapExceeded { cap });
    }
    out.push(stack.clone());
    let last = *stack.last().expect("stack is nonempty");
    // Candidates above `last` adjacent to every stack member.
    for &u in g.neighbors(last) {
        if u > last && stack.iter().all(|&w| g.has_edge(w, u)) {
            stack.push(u);
            extend(g, stack, cap, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// The clique graph of a base graph together with the vertex-to-clique index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueGraph {
    graph: SimplicialGraph,
    cliques: Vec<Clique>,
    base_n: usize,
}

impl CliqueGraph {
    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn base_vertex_count(&self) -> usize {
        self.base_n
    }

    /// Index of the clique-graph vertex for `members`, if present.
    pub fn vertex_of(&self, members: &[usize]) -> Option<usize> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        self.cliques.binary_search_by(|c| {
            c.len()
                .cmp(&m.len())
                .then_with(|| c.members().cmp(m.as_slice()))
        })
        .ok()
    }

    /// Checks that this clique graph was built from `base` (same vertex count
    /// and every indexed clique is a clique of `base`).
    pub fn check_base(&self, base: &SimplicialGraph) -> Result<()> {
        if base.n() != self.base_n {
            return Err(Error::CliqueGraphMismatch(format!(
                "base has {} vertices, clique graph was built over {}",
                base.n(),
                self.base_n
            )));
        }
        for c in &self.cliques {
            if !base.is_clique(c.members()) {
                return Err(Error::CliqueGraphMismatch(format!(
                    "indexed vertex set {:?} is not a clique of the base graph",
                    c.members()
                )));
            }
        }
        Ok(())
    }
}

/// Builds the clique graph of `g`, with vertices in the canonical clique
/// order of [`enumerate_cliques`].
pub fn clique_graph(g: &SimplicialGraph, cap: usize) -> Result<CliqueGraph> {
    let cliques = enumerate_cliques(g, cap)?;
    let k = cliques.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if union_is_clique(g, &cliques[i], &cliques[j]) {
                edges.push((i, j));
            }
        }
    }
    let mut graph = SimplicialGraph::from_edges(k, &edges)?;
    let labels: Vec<String> = cliques.iter().map(|c| c.display(g)).collect();
    graph = graph.with_labels(labels)?;
    Ok(CliqueGraph {
        graph,
        cliques,
        base_n: g.n(),
    })
}

/// `K ∪ L` is a clique iff every member of `K \ L` is adjacent to every member
/// of `L \ K` (pairs within each clique are adjacent already).
fn union_is_clique(g: &SimplicialGraph, a: &Clique, b: &Clique) -> bool {
    for &u in a.members() {
        for &v in b.members() {
            if u != v && !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Size of a maximum clique of `g`, which equals the cohomological dimension
/// of the right-angled Artin group on `g`. Errors on the empty graph.
pub fn max_clique_size(g: &SimplicialGraph) -> Result<usize> {
    Ok(max_clique(g)?.len())
}

/// A maximum clique, found by branch and bound with a greedy coloring bound.
/// Deterministic: ties resolve by vertex id.
pub fn max_clique(g: &SimplicialGraph) -> Result<Clique> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let bits = g.adjacency_bitsets();
    let mut best: Vec<usize> = vec![0];
    let mut current: Vec<usize> = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    expand_max_clique(g, &bits, &all, &mut current, &mut best);
    Ok(Clique::from_sorted_unchecked({
        let mut b = best;
        b.sort_unstable();
        b
    }))
}

fn expand_max_clique(
    g: &SimplicialGraph,
    bits: &[Vec<u64>],
    candidates: &[usize],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring of the candidate set bounds how much it can add.
    let bound = greedy_color_count(g, candidates);
    if current.len() + bound <= best.len() {
        return;
    }
    for (idx, &v) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - idx) <= best.len() {
            break;
        }
        current.push(v);
        let next: Vec<usize> = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&u| bits[v][u / 64] >> (u % 64) & 1 == 1)
            .collect();
        expand_max_clique(g, bits, &next, current, best);
        current.pop();
    }
}

fn greedy_color_count(g: &SimplicialGraph, vertices: &[usize]) -> usize {
    let mut colors: Vec<Vec<usize>> = Vec::new();
    for &v in vertices {
        let mut placed = false;
        for class in colors.iter_mut() {
            if class.iter().all(|&u| !g.has_edge(u, v)) {
                class.push(v);
                placed = true;
                break;
            }
        }
        if !placed {
            colors.push(vec![v]);
        }
    }
    colors.len()
}
