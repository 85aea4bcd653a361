//! Exhaustive enumeration of connected graphs on up to 8 vertices, one
//! canonical representative per isomorphism class.
//!
//! Graphs are grown one vertex at a time: every canonical graph on k
//! vertices is extended by a new vertex with each of the 2^k possible
//! neighborhoods, and the extension is reduced to canonical form again.
//! The canonical form of a graph is the lexicographically smallest packed
//! upper-triangle bit string over all vertex relabelings, found by
//! branch-and-bound over permutation prefixes.

use std::collections::BTreeSet;

use super::{GraphError, SimpleGraph};

/// Canonical representatives of all connected isomorphism classes with at
/// most `max_n` vertices, in a deterministic order.
#[derive(Debug, Clone)]
pub struct GraphCorpus {
    max_n: usize,
    graphs: Vec<SimpleGraph>,
}

impl GraphCorpus {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn graphs(&self) -> &[SimpleGraph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SimpleGraph> {
        self.graphs.iter()
    }

    /// Number of graphs per vertex count, as `(n, count)` pairs.
    pub fn counts_by_n(&self) -> Vec<(usize, usize)> {
        (1..=self.max_n)
            .map(|n| (n, self.graphs.iter().filter(|g| g.n() == n).count()))
            .collect()
    }
}

/// Enumerates one representative per connected isomorphism class with
/// `1..=max_n` vertices. Guarded to `max_n ≤ 8`.
pub fn enumerate_connected_graphs(max_n: usize) -> Result<GraphCorpus, GraphError> {
    if !(1..=8).contains(&max_n) {
        return Err(GraphError::InvalidBound(format!(
            "corpus bound must be in 1..=8, got {max_n}"
        )));
    }
    // Canonical keys of ALL graphs (connected or not) per vertex count; a
    // connected graph on n vertices may restrict to a disconnected one on
    // the first n−1, so intermediate levels keep everything.
    let mut level: Vec<u32> = vec![0]; // the one-vertex graph
    let mut per_n: Vec<Vec<u32>> = vec![level.clone()];
    for k in 1..max_n {
        let mut next = BTreeSet::new();
        for &key in &level {
            let adj = unpack(k, key);
            for mask in 0u8..1 << k {
                let mut ext = adj;
                ext[k] = mask;
                for (i, row) in ext.iter_mut().enumerate().take(k) {
                    if mask >> i & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                next.insert(canonical_key(k + 1, &ext));
            }
        }
        level = next.into_iter().collect();
        per_n.push(level.clone());
    }

    let mut graphs = Vec::new();
    for (idx, keys) in per_n.iter().enumerate() {
        let n = idx + 1;
        for &key in keys {
            let g = graph_from_key(n, key);
            if g.is_connected() {
                graphs.push(g);
            }
        }
    }
    Ok(GraphCorpus { max_n, graphs })
}

/// Canonical key of an arbitrary adjacency structure on `n ≤ 8` vertices.
#[cfg(test)]
pub(crate) fn canonical_key_of(g: &SimpleGraph) -> Option<u32> {
    if g.n() > 8 {
        return None;
    }
    let mut adj = [0u8; 8];
    for &(u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    Some(canonical_key(g.n(), &adj))
}

fn graph_from_key(n: usize, key: u32) -> SimpleGraph {
    let adj = unpack(n, key);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if adj[j] >> i & 1 == 1 {
                edges.push((i + 1, j + 1));
            }
        }
    }
    SimpleGraph::new_allow_empty(n, &edges).expect("enumerated graphs are valid")
}

/// Bit layout: when position `j` is assigned, the pair bits `(i, j)` for
/// `i = 0..j` are appended most-significant-first; groups for successive
/// `j` follow each other, so earlier positions dominate the comparison.
fn pack_bits(n: usize, adj: &[u8; 8]) -> u32 {
    let mut key = 0u32;
    for j in 1..n {
        for i in 0..j {
            key = key << 1 | u32::from(adj[j] >> i & 1);
        }
    }
    key
}

fn unpack(n: usize, key: u32) -> [u8; 8] {
    let mut adj = [0u8; 8];
    let total = n * (n - 1) / 2;
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if key >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn canonical_key(n: usize, adj: &[u8; 8]) -> u32 {
    let total_bits = n * (n - 1) / 2;
    // Identity labeling as the initial bound.
    let mut best = pack_bits(n, adj);
    let mut perm = [0usize; 8];
    search(n, adj, 0, 0u8, &mut perm, 0, 0, total_bits, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn search(
    n: usize,
    adj: &[u8; 8],
    level: usize,
    used: u8,
    perm: &mut [usize; 8],
    prefix: u32,
    prefix_len: usize,
    total_bits: usize,
    best: &mut u32,
) {
    if level == n {
        if prefix < *best {
            *best = prefix;
        }
        return;
    }
    // Bits appended by putting original vertex v at position `level`.
    let mut candidates: Vec<(u32, usize)> = (0..n)
        .filter(|&v| used >> v & 1 == 0)
        .map(|v| {
            let mut bits = 0u32;
            for i in 0..level {
                bits = bits << 1 | u32::from(adj[v] >> perm[i] & 1);
            }
            (bits, v)
        })
        .collect();
    candidates.sort_unstable();
    for (bits, v) in candidates {
        let new_len = prefix_len + level;
        let new_prefix = prefix << level | bits;
        // Compare against the same-length prefix of the incumbent.
        if new_prefix > *best >> (total_bits - new_len) {
            continue;
        }
        perm[level] = v;
        search(
            n,
            adj,
            level + 1,
            used | 1 << v,
            perm,
            new_prefix,
            new_len,
            total_bits,
            best,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_key_is_isomorphism_invariant() {
        // C5 under two different labelings.
        let a = SimpleGraph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let b = SimpleGraph::new(5, &[(1, 3), (3, 5), (2, 5), (2, 4), (1, 4)]).unwrap();
        assert_eq!(canonical_key_of(&a), canonical_key_of(&b));
    }

    #[test]
    fn corpus_counts_small() {
        let corpus = enumerate_connected_graphs(4).unwrap();
        assert_eq!(corpus.counts_by_n(), vec![(1, 1), (2, 1), (3, 2), (4, 6)]);
        assert_eq!(corpus.len(), 10);
    }

    #[test]
    fn corpus_rejects_out_of_range() {
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_connected_graphs(9).is_err());
    }
}
