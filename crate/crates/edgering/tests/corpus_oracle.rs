//! Independent enumeration oracle for the graph corpus: brute force over
//! all adjacency bit masks with canonical-form dedup by plain permutation
//! minimization, no incremental construction and no branch-and-bound.

use edgering::graph::enumerate_connected_graphs;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Connected-graph isomorphism classes on exactly n vertices, counted the
/// slow way.
fn count_connected_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut canonical_forms = std::collections::HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        // Adjacency matrix and connectivity.
        let mut adj = vec![vec![false; n]; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if adj[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            continue;
        }
        // Minimal relabeled mask over all permutations.
        let canon = perms
            .iter()
            .map(|p| {
                let mut m = 0u32;
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if adj[p[i]][p[j]] {
                        m |= 1 << b;
                    }
                }
                m
            })
            .min()
            .unwrap();
        canonical_forms.insert(canon);
    }
    canonical_forms.len()
}

#[test]
fn corpus_counts_match_independent_oracle() {
    let corpus = enumerate_connected_graphs(6).unwrap();
    let by_n = corpus.counts_by_n();
    let expected = [1, 1, 2, 6, 21, 112];
    for n in 1..=6 {
        assert_eq!(
            by_n[n - 1],
            (n, expected[n - 1]),
            "published count, n = {n}"
        );
        assert_eq!(
            count_connected_classes(n),
            expected[n - 1],
            "oracle count, n = {n}"
        );
    }
    assert_eq!(corpus.len(), 143);
}

#[test]
fn corpus_graphs_are_pairwise_distinct_and_connected() {
    let corpus = enumerate_connected_graphs(5).unwrap();
    for g in corpus.iter() {
        assert!(g.is_connected());
    }
    let set: std::collections::HashSet<_> =
        corpus.iter().map(|g| (g.n(), g.edges().to_vec())).collect();
    assert_eq!(set.len(), corpus.len());
}
