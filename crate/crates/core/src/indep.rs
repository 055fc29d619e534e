//! Exact maximum independent sets.
//!
//! Branch and bound with degree-0/1 reductions and connected-component
//! splitting, which together make sparse instances (the ones the certificate
//! pipeline produces) cheap. Budget exhaustion reports bounds instead of
//! guessing.

use crate::budget::{BudgetMeter, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;

/// Exact independence number with a maximum independent set witness.
pub fn independence_number(
    g: &SimplicialGraph,
    budget: SearchBudget,
) -> Result<(usize, Vec<usize>)> {
    let (alpha, witness, _) = independence_number_instrumented(g, budget)?;
    Ok((alpha, witness))
}

/// Like [`independence_number`], also reporting nodes used.
pub fn independence_number_instrumented(
    g: &SimplicialGraph,
    budget: SearchBudget,
) -> Result<(usize, Vec<usize>, u64)> {
    let mut meter = BudgetMeter::new(budget);
    let live: Vec<usize> = (0..g.n()).collect();
    match mis(g, live, &mut meter) {
        Some(mut set) => {
            set.sort_unstable();
            debug_assert!(is_independent(g, &set));
            Ok((set.len(), set, meter.used()))
        }
        None => {
            // Budget ran out; report the trivial bounds we still know.
            let lower = greedy_independent(g).len();
            Err(Error::Undecided {
                quantity: "independence number",
                lower,
                upper: g.n(),
            })
        }
    }
}

/// True when no edge of `g` joins two members of `set`.
pub fn is_independent(g: &SimplicialGraph, set: &[usize]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// First edge inside `set`, if any.
pub fn first_dependent_pair(g: &SimplicialGraph, set: &[usize]) -> Option<(usize, usize)> {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return Some((u.min(v), u.max(v)));
            }
        }
    }
    None
}

fn greedy_independent(g: &SimplicialGraph) -> Vec<usize> {
    let mut taken = Vec::new();
    let mut blocked = vec![false; g.n()];
    for v in 0..g.n() {
        if !blocked[v] {
            taken.push(v);
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    taken
}

/// Maximum independent set of the subgraph induced on `live`.
/// Returns None when the budget runs dry.
fn mis(g: &SimplicialGraph, live: Vec<usize>, meter: &mut BudgetMeter) -> Option<Vec<usize>> {
    if !meter.charge() {
        return None;
    }
    if live.is_empty() {
        return Some(Vec::new());
    }
    let mut alive = vec![false; g.n()];
    for &v in &live {
        alive[v] = true;
    }
    let deg = |v: usize, alive: &[bool]| g.neighbors(v).iter().filter(|&&u| alive[u]).count();

    // Degree-0 and degree-1 vertices are always safely taken.
    let mut taken: Vec<usize> = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for &v in &live {
            if !alive[v] {
                continue;
            }
            let d = deg(v, &alive);
            if d == 0 {
                taken.push(v);
                alive[v] = false;
                changed = true;
            } else if d == 1 {
                let u = *g
                    .neighbors(v)
                    .iter()
                    .find(|&&u| alive[u])
                    .expect("degree-1 vertex has a live neighbor");
                taken.push(v);
                alive[v] = false;
                alive[u] = false;
                changed = true;
            }
        }
    }
    let rest: Vec<usize> = live.iter().copied().filter(|&v| alive[v]).collect();
    if rest.is_empty() {
        return Some(taken);
    }

    // Solve connected components independently.
    let components = split_components(g, &rest, &alive);
    if components.len() > 1 {
        for comp in components {
            let sub = mis(g, comp, meter)?;
            taken.extend(sub);
        }
        return Some(taken);
    }

    // Branch on a vertex of maximum degree (ties to the least id).
    let comp = components.into_iter().next().expect("one component");
    let v = *comp
        .iter()
        .max_by_key(|&&v| (deg(v, &alive), std::cmp::Reverse(v)))
        .expect("component is nonempty");

    // Take v: drop its closed neighborhood.
    let without_closed: Vec<usize> = comp
        .iter()
        .copied()
        .filter(|&u| u != v && !g.has_edge(u, v))
        .collect();
    let take = mis(g, without_closed, meter)?;

    // Skip v.
    let without_v: Vec<usize> = comp.iter().copied().filter(|&u| u != v).collect();
    let skip = mis(g, without_v, meter)?;

    let mut best = if take.len() + 1 >= skip.len() {
        let mut t = take;
        t.push(v);
        t
    } else {
        skip
    };
    best.extend(taken);
    Some(best)
}

fn split_components(g: &SimplicialGraph, live: &[usize], alive: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for &start in live {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if alive[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}
