//! Simple-cycle enumeration and the odd-cycle detectors built on it.
//!
//! Cycles are enumerated by backtracking with a canonical start: each cycle
//! is reported exactly once, rooted at its smallest vertex with the smaller
//! of its two root neighbors first. The enumeration order is deterministic.

use super::{Cycle, SimpleGraph};

/// All simple cycles of length ≤ `cap`, each reported once.
pub fn simple_cycles_up_to(g: &SimpleGraph, cap: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if cap < 3 {
        return out;
    }
    let mut path = Vec::with_capacity(cap);
    let mut used = vec![false; g.n() + 1];
    for start in 1..=g.n() {
        path.push(start);
        used[start] = true;
        extend(g, start, cap, &mut path, &mut used, &mut out);
        used[start] = false;
        path.pop();
    }
    out
}

fn extend(
    g: &SimpleGraph,
    start: usize,
    cap: usize,
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Cycle>,
) {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == start && path.len() >= 3 && path[1] < v {
            out.push(Cycle::new(path.clone()));
        } else if w > start && !used[w] && path.len() < cap {
            used[w] = true;
            path.push(w);
            extend(g, start, cap, path, used, out);
            path.pop();
            used[w] = false;
        }
    }
}

/// A shortest odd simple cycle; panics if the graph is bipartite (callers
/// check first).
pub(super) fn shortest_odd_cycle(g: &SimpleGraph) -> Cycle {
    let mut best: Option<Cycle> = None;
    for c in simple_cycles_up_to(g, g.n()) {
        if c.is_odd() && best.as_ref().is_none_or(|b| c.len() < b.len()) {
            best = Some(c);
        }
    }
    best.expect("non-bipartite graph has an odd cycle")
}

/// First pair of vertex-disjoint odd cycles in enumeration order, if any.
pub fn disjoint_odd_cycle_pair(g: &SimpleGraph) -> Option<(Cycle, Cycle)> {
    let odd: Vec<Cycle> = simple_cycles_up_to(g, g.n())
        .into_iter()
        .filter(Cycle::is_odd)
        .collect();
    for i in 0..odd.len() {
        for j in i + 1..odd.len() {
            if !odd[i].shares_vertex_with(&odd[j]) {
                debug_assert!(odd[i].is_cycle_of(g) && odd[j].is_cycle_of(g));
                return Some((odd[i].clone(), odd[j].clone()));
            }
        }
    }
    None
}

/// True iff every pair of odd cycles shares at least one vertex.
pub fn odd_cycles_pairwise_intersect(g: &SimpleGraph) -> bool {
    let odd: Vec<Cycle> = simple_cycles_up_to(g, g.n())
        .into_iter()
        .filter(Cycle::is_odd)
        .collect();
    for i in 0..odd.len() {
        for j in i + 1..odd.len() {
            if !odd[i].shares_vertex_with(&odd[j]) {
                return false;
            }
        }
    }
    true
}
