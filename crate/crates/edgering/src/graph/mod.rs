//! Simple graphs on vertex set {1, …, N}, their cycle structure, and
//! exhaustive enumeration of small connected isomorphism classes.
//!
//! The edge list order is significant everywhere: edge `i` of a graph is the
//! variable `x_{i+1}` of its toric ring and the `i`-th generator of its edge
//! polytope, and it never changes after construction. All types are
//! immutable once built and every detector is a pure query.

mod corpus;
mod cycles;
pub mod families;
mod subgraphs;

use thiserror::Error;

pub use corpus::{enumerate_connected_graphs, GraphCorpus};
pub use subgraphs::{odd_unicyclic_spanning_subgraph, SpecialSubgraph, SubgraphKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    ZeroVertices,
    #[error("edge list is empty")]
    EmptyEdgeList,
    #[error("loop {{{0},{1}}} at edge position {2}")]
    Loop(usize, usize, usize),
    #[error("duplicate edge {{{0},{1}}} at edge position {2}")]
    DuplicateEdge(usize, usize, usize),
    #[error("edge {{{0},{1}}} at position {2} is out of range 1..={3}")]
    VertexOutOfRange(usize, usize, usize, usize),
    #[error("graph is not connected; components: {0:?}")]
    NotConnected(Vec<Vec<usize>>),
    #[error("graph is bipartite, no odd cycle exists")]
    BipartiteInput,
    #[error("{0}")]
    InvalidBound(String),
}

/// Finite simple graph on vertices `1..=n` with a stable, ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Validates and builds a graph. Rejects loops, duplicate edges,
    /// out-of-range vertices and empty edge lists, identifying the
    /// offending edge position (0-based) in each case.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if edge_list.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        Self::new_allow_empty(n, edge_list)
    }

    /// Same validation as [`SimpleGraph::new`] but permits an empty edge
    /// list, which the corpus needs for the one-vertex graph.
    pub(crate) fn new_allow_empty(
        n: usize,
        edge_list: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for (pos, &(u, v)) in edge_list.iter().enumerate() {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::VertexOutOfRange(u, v, pos, n));
            }
            if u == v {
                return Err(GraphError::Loop(u, v, pos));
            }
            let e = (u.min(v), u.max(v));
            if edges.contains(&e) {
                return Err(GraphError::DuplicateEdge(u, v, pos));
            }
            edges.push(e);
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in adj.iter_mut() {
            nb.sort_unstable();
        }
        Ok(SimpleGraph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in construction order, each normalized to `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of a vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u,v}` in the edge list, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.iter().position(|&f| f == e)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Connected components as sorted vertex lists, ordered by minimum
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut comps = Vec::new();
        for s in 1..=self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-coloring by BFS; `None` when some component has an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n + 1];
        for s in 1..=self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        let part0 = (1..=self.n).filter(|&v| color[v] == 0).collect();
        let part1 = (1..=self.n).filter(|&v| color[v] == 1).collect();
        Some((part0, part1))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Canonical text form `"N M"` header plus one `"u v"` line per edge,
    /// matching the edge-list file format.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Simple cycle in a host graph, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub(crate) fn new(vertices: Vec<usize>) -> Self {
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges (= number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Edges of the cycle in traversal order, normalized pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                let u = self.vertices[i];
                let v = self.vertices[(i + 1) % k];
                (u.min(v), u.max(v))
            })
            .collect()
    }

    /// Consecutive pairs are host edges and no vertex repeats.
    pub fn is_cycle_of(&self, g: &SimpleGraph) -> bool {
        let k = self.vertices.len();
        if k < 3 {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for i in 0..k {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % k];
            if !g.adjacent(u, v) || !seen.insert(u) {
                return false;
            }
        }
        true
    }

    pub fn shares_vertex_with(&self, other: &Cycle) -> bool {
        self.vertices.iter().any(|v| other.vertices.contains(v))
    }

    /// Does the host graph have an edge joining two non-consecutive
    /// vertices of this cycle?
    pub fn has_chord_in(&self, g: &SimpleGraph) -> bool {
        let k = self.vertices.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if !consecutive && g.adjacent(self.vertices[i], self.vertices[j]) {
                    return true;
                }
            }
        }
        false
    }
}

/// Whether a graph is bipartite, with the respective witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { parts: (Vec<usize>, Vec<usize>) },
    OddCycleWitness(Cycle),
}

/// An even cycle of length ≥ 8 together with its chord flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordedCycleReport {
    pub cycle: Cycle,
    pub has_chord: bool,
}

/// Total structural report; all fields are mutually consistent by
/// construction (bipartite ⟺ no odd cycle witness).
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub connected: bool,
    pub components: Vec<Vec<usize>>,
    pub bipartiteness: Bipartiteness,
    pub triangle_count: usize,
    pub has_four_cycle: bool,
    pub long_even_cycles: Vec<ChordedCycleReport>,
    pub cycles: Vec<Cycle>,
    pub cycle_cap: usize,
}

impl StructureReport {
    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness, Bipartiteness::Bipartite { .. })
    }
}

/// Full structural classification with the default cycle cap `n` (all
/// simple cycles).
pub fn classify_structure(g: &SimpleGraph) -> StructureReport {
    classify_structure_with_cap(g, g.n())
}

/// As [`classify_structure`] but enumerating simple cycles only up to the
/// given length cap. Bipartiteness and its witness never depend on the cap.
pub fn classify_structure_with_cap(g: &SimpleGraph, cap: usize) -> StructureReport {
    let cycles = cycles::simple_cycles_up_to(g, cap);
    let components = g.components();
    let bipartiteness = match g.bipartition() {
        Some(parts) => Bipartiteness::Bipartite { parts },
        None => Bipartiteness::OddCycleWitness(cycles::shortest_odd_cycle(g)),
    };
    let triangle_count = cycles.iter().filter(|c| c.len() == 3).count();
    let has_four_cycle = cycles.iter().any(|c| c.len() == 4);
    let long_even_cycles = cycles
        .iter()
        .filter(|c| c.len() >= 8 && c.len() % 2 == 0)
        .map(|c| ChordedCycleReport {
            cycle: c.clone(),
            has_chord: c.has_chord_in(g),
        })
        .collect();
    StructureReport {
        connected: components.len() == 1,
        components,
        bipartiteness,
        triangle_count,
        has_four_cycle,
        long_even_cycles,
        cycles,
        cycle_cap: cap,
    }
}

pub use cycles::{disjoint_odd_cycle_pair, odd_cycles_pairwise_intersect, simple_cycles_up_to};
pub use subgraphs::find_special_subgraphs;
