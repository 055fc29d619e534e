//! Girth: the length of a shortest simple cycle, `Infinite` for forests.

use std::collections::VecDeque;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::SimplicialGraph;

/// Finite girth, or `Infinite` for forests. Serializes as a JSON number or
/// `null`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match Option::<u64>::deserialize(d)? {
            Some(g) => Girth::Finite(g as usize),
            None => Girth::Infinite,
        })
    }
}

impl Girth {
    pub fn is_at_least(&self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => *g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinity"),
        }
    }
}

/// Exact girth of `g`.
pub fn girth(g: &SimplicialGraph) -> Girth {
    match shortest_cycle(g) {
        Some(c) => Girth::Finite(c.len()),
        None => Girth::Infinite,
    }
}

/// A shortest simple cycle of `g`, as a vertex sequence in cycle order.
/// Deterministic: the BFS sweep and tie-breaks are fixed.
pub fn shortest_cycle(g: &SimplicialGraph) -> Option<Vec<usize>> {
    shortest_cycle_below(g, usize::MAX)
}

/// A shortest simple cycle of length `< bound`, or `None` when the girth is
/// at least `bound`. Runs one truncated BFS per root; from a root on a
/// shortest cycle the detection is exact, and every extracted cycle is a
/// genuine simple cycle, so the minimum over roots is the girth whenever the
/// girth is below `bound`.
pub fn shortest_cycle_below(g: &SimplicialGraph, bound: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut best_len = bound;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched: Vec<usize> = Vec::new();
    for root in 0..n {
        if best_len <= 3 {
            break; // no simple cycle is shorter
        }
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        // Cycles of length L need BFS levels up to floor(L/2); processing
        // nodes up to depth (best_len - 1) / 2 covers every candidate < best_len.
        let depth_limit = (best_len.saturating_sub(1)) / 2;
        let mut queue = VecDeque::new();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if dist[u] > depth_limit {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if w != parent[u] && parent[w] != u {
                    // Non-tree edge: the two tree paths plus (u, w) close a
                    // simple cycle once the shared prefix is stripped.
                    if let Some(cycle) = extract_cycle(&dist, &parent, u, w) {
                        if cycle.len() < best_len {
                            best_len = cycle.len();
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
    }
    best
}

fn extract_cycle(
    dist: &[usize],
    parent: &[usize],
    u: usize,
    w: usize,
) -> Option<Vec<usize>> {
    // Walk both endpoints up to their lowest common ancestor in the BFS tree.
    let mut up_u = vec![u];
    let mut up_w = vec![w];
    let (mut a, mut b) = (u, w);
    while dist[a] > dist[b] {
        a = parent[a];
        up_u.push(a);
    }
    while dist[b] > dist[a] {
        b = parent[b];
        up_w.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_u.push(a);
        up_w.push(b);
    }
    // a == b is the LCA; cycle = path(LCA..u) + path(w..LCA-exclusive) reversed.
    let len = up_u.len() + up_w.len() - 1;
    if len < 3 {
        return None; // u-w was effectively a tree edge seen twice
    }
    let mut cycle: Vec<usize> = up_u.into_iter().rev().collect();
    up_w.pop(); // drop the duplicated LCA
    cycle.extend(up_w.into_iter());
    Some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_cycle(g: &SimplicialGraph, c: &[usize]) -> bool {
        if c.len() < 3 {
            return false;
        }
        let mut seen = c.to_vec();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != c.len() {
            return false;
        }
        (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
    }

    #[test]
    fn girth_of_c5() {
        let g = SimplicialGraph::cycle(5).unwrap();
        assert_eq!(girth(&g), Girth::Finite(5));
        let c = shortest_cycle(&g).unwrap();
        assert!(is_cycle(&g, &c));
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn trees_have_infinite_girth() {
        assert_eq!(girth(&SimplicialGraph::path(6)), Girth::Infinite);
        assert_eq!(girth(&SimplicialGraph::edgeless(3)), Girth::Infinite);
        assert_eq!(
            girth(&SimplicialGraph::from_edges(2, &[(0, 1)]).unwrap()),
            Girth::Infinite
        );
        // star
        let star = SimplicialGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(girth(&star), Girth::Infinite);
    }

    #[test]
    fn girth_of_petersen_is_5() {
        let g = SimplicialGraph::petersen();
        assert_eq!(girth(&g), Girth::Finite(5));
    }

    #[test]
    fn girth_of_k4() {
        assert_eq!(girth(&SimplicialGraph::complete(4)), Girth::Finite(3));
    }

    #[test]
    fn bounded_search_respects_bound() {
        let g = SimplicialGraph::cycle(5).unwrap();
        assert!(shortest_cycle_below(&g, 5).is_none());
        assert!(shortest_cycle_below(&g, 6).is_some());
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g =
            SimplicialGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
                .unwrap();
        assert_eq!(girth(&g), Girth::Finite(3));
        let c = shortest_cycle(&g).unwrap();
        assert!(is_cycle(&g, &c));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn girth_serializes_as_number_or_null() {
        assert_eq!(serde_json::to_string(&Girth::Finite(5)).unwrap(), "5");
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "null");
        assert_eq!(
            serde_json::from_str::<Girth>("null").unwrap(),
            Girth::Infinite
        );
        assert_eq!(
            serde_json::from_str::<Girth>("7").unwrap(),
            Girth::Finite(7)
        );
    }
}
