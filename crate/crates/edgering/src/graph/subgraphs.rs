//! Detectors for the distinguished subgraph shapes: the bowtie (two
//! triangles sharing one vertex), the friendship graph F₃ (three triangles
//! at a common hub), and chorded even cycles C_{k,ℓ}; plus the odd
//! unicyclic spanning subgraph used to full-dimensionalize edge polytopes.

use super::{cycles, Cycle, GraphError, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgraphKind {
    /// Two edge-disjoint triangles sharing exactly one vertex.
    Bowtie,
    /// Three pairwise edge-disjoint triangles sharing one common vertex.
    Friendship3,
    /// Even cycle of length `2k` with a chord splitting off an arc of
    /// `ell − 1` edges (so `3 ≤ ell ≤ k + 1`).
    ChordedEvenCycle { k: usize, ell: usize },
}

/// An exact subgraph occurrence: vertex set and edge set of the match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialSubgraph {
    pub kind: SubgraphKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// All bowtie, F₃ and C_{k,ℓ} occurrences of a graph.
pub fn find_special_subgraphs(g: &SimpleGraph) -> Vec<SpecialSubgraph> {
    let cycles = cycles::simple_cycles_up_to(g, g.n());
    let triangles: Vec<&Cycle> = cycles.iter().filter(|c| c.len() == 3).collect();
    let mut out = Vec::new();

    // Bowties: pairs of triangles meeting in exactly one vertex. Sharing a
    // single vertex forces the triangles to be edge-disjoint.
    for i in 0..triangles.len() {
        for j in i + 1..triangles.len() {
            if shared_vertices(triangles[i], triangles[j]).len() == 1 {
                out.push(tagged(SubgraphKind::Bowtie, &[triangles[i], triangles[j]]));
            }
        }
    }

    // Friendship graphs: triples of triangles whose pairwise intersections
    // are all the same single vertex.
    for i in 0..triangles.len() {
        for j in i + 1..triangles.len() {
            let sij = shared_vertices(triangles[i], triangles[j]);
            if sij.len() != 1 {
                continue;
            }
            for t3 in triangles.iter().skip(j + 1) {
                let sik = shared_vertices(triangles[i], t3);
                let sjk = shared_vertices(triangles[j], t3);
                if sik == sij && sjk == sij {
                    out.push(tagged(
                        SubgraphKind::Friendship3,
                        &[triangles[i], triangles[j], t3],
                    ));
                }
            }
        }
    }

    // Chorded even cycles: every even cycle of length 2k ≥ 8 together with
    // each chord. The chord splits the cycle into arcs of a and 2k−a edges;
    // the occurrence is C_{k, min(a, 2k−a) + 1}.
    for c in cycles.iter().filter(|c| c.len() >= 8 && c.len() % 2 == 0) {
        let k = c.len() / 2;
        let vs = c.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let consecutive = j == i + 1 || (i == 0 && j == vs.len() - 1);
                if consecutive || !g.adjacent(vs[i], vs[j]) {
                    continue;
                }
                let arc = (j - i).min(vs.len() - (j - i));
                let ell = arc + 1;
                let mut vertices = vs.to_vec();
                vertices.sort_unstable();
                let mut edges = c.edges();
                edges.push((vs[i].min(vs[j]), vs[i].max(vs[j])));
                out.push(SpecialSubgraph {
                    kind: SubgraphKind::ChordedEvenCycle { k, ell },
                    vertices,
                    edges,
                });
            }
        }
    }
    out
}

fn shared_vertices(a: &Cycle, b: &Cycle) -> Vec<usize> {
    let mut s: Vec<usize> = a
        .vertices()
        .iter()
        .filter(|v| b.vertices().contains(v))
        .copied()
        .collect();
    s.sort_unstable();
    s
}

fn tagged(kind: SubgraphKind, triangles: &[&Cycle]) -> SpecialSubgraph {
    let mut vertices: Vec<usize> = triangles
        .iter()
        .flat_map(|t| t.vertices().iter().copied())
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges: Vec<(usize, usize)> = triangles.iter().flat_map(|t| t.edges()).collect();
    edges.sort_unstable();
    edges.dedup();
    SpecialSubgraph {
        kind,
        vertices,
        edges,
    }
}

/// Connected spanning subgraph with exactly `n` edges whose unique cycle is
/// odd: a BFS spanning tree plus one same-color non-tree edge.
pub fn odd_unicyclic_spanning_subgraph(g: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected(g.components()));
    }
    let mut depth = vec![usize::MAX; g.n() + 1];
    let mut tree_edges = Vec::with_capacity(g.n() - 1);
    depth[1] = 0;
    let mut queue = std::collections::VecDeque::from([1usize]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                tree_edges.push((v.min(w), v.max(w)));
                queue.push_back(w);
            }
        }
    }
    // A non-tree edge between vertices of equal depth parity closes an odd
    // cycle; one exists exactly when the graph is non-bipartite.
    let closing = g
        .edges()
        .iter()
        .find(|&&(u, v)| !tree_edges.contains(&(u, v)) && depth[u] % 2 == depth[v] % 2)
        .copied()
        .ok_or(GraphError::BipartiteInput)?;
    tree_edges.push(closing);
    SimpleGraph::new(g.n(), &tree_edges)
}
