//! Named graph constructors used by the verifiers and tests.

use super::SimpleGraph;

/// Cycle graph C_k on vertices `1..=k`.
pub fn cycle(k: usize) -> SimpleGraph {
    assert!(k >= 3);
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i, i + 1)).collect();
    edges.push((1, k));
    SimpleGraph::new(k, &edges).unwrap()
}

/// Complete graph K_n.
pub fn complete(n: usize) -> SimpleGraph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i, j));
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

/// Complete bipartite graph K_{a,b} on `{1..a} ∪ {a+1..a+b}`, edges in
/// row-major order: (1,a+1), (1,a+2), …
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    assert!(a >= 1 && b >= 1);
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            edges.push((i, a + j));
        }
    }
    SimpleGraph::new(a + b, &edges).unwrap()
}

/// Bowtie: two triangles sharing vertex 3, with the edge order
/// {1,3},{2,3},{1,2},{3,4},{3,5},{4,5}.
pub fn bowtie() -> SimpleGraph {
    SimpleGraph::new(5, &[(1, 3), (2, 3), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap()
}

/// Friendship graph F_t: t triangles glued at hub vertex 1.
pub fn friendship(t: usize) -> SimpleGraph {
    assert!(t >= 1);
    let mut edges = Vec::new();
    for p in 0..t {
        let a = 2 + 2 * p;
        let b = 3 + 2 * p;
        edges.push((1, a));
        edges.push((a, b));
        edges.push((1, b));
    }
    SimpleGraph::new(1 + 2 * t, &edges).unwrap()
}

/// C_{k,ℓ}: the even cycle 1–2–…–2k–1 with the chord {1,ℓ}. Requires
/// `k ≥ 4` and `3 ≤ ℓ ≤ k + 1`. Cycle edges first, chord last.
pub fn chorded_even_cycle(k: usize, ell: usize) -> SimpleGraph {
    assert!(k >= 4, "chorded even cycle needs k >= 4");
    assert!((3..=k + 1).contains(&ell), "chord offset out of range");
    let n = 2 * k;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    edges.push((1, ell));
    SimpleGraph::new(n, &edges).unwrap()
}

/// Two vertex-disjoint triangles {1,2,3} and {4,5,6} joined by the bridge
/// edge {3,4}; the six triangle edges come first.
pub fn two_triangles_bridged() -> SimpleGraph {
    SimpleGraph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]).unwrap()
}

/// Two vertex-disjoint triangles joined by a path of length 2 through a
/// middle vertex (7 vertices).
pub fn two_triangles_path_bridged() -> SimpleGraph {
    SimpleGraph::new(
        7,
        &[
            (1, 2),
            (2, 3),
            (1, 3),
            (5, 6),
            (6, 7),
            (5, 7),
            (3, 4),
            (4, 5),
        ],
    )
    .unwrap()
}

/// Two vertex-disjoint hexagons {1..6} and {7..12} joined by the bridge
/// edge {6,7}; the twelve hexagon edges come first.
pub fn two_hexagons_bridged() -> SimpleGraph {
    let mut edges: Vec<(usize, usize)> = (1..6).map(|i| (i, i + 1)).collect();
    edges.push((1, 6));
    edges.extend((7..12).map(|i| (i, i + 1)));
    edges.push((7, 12));
    edges.push((6, 7));
    SimpleGraph::new(12, &edges).unwrap()
}

/// Two hexagons sharing exactly one vertex (11 vertices, 12 edges).
pub fn two_hexagons_shared_vertex() -> SimpleGraph {
    let mut edges: Vec<(usize, usize)> = (1..6).map(|i| (i, i + 1)).collect();
    edges.push((1, 6));
    // Second hexagon 1–7–8–9–10–11–1.
    edges.push((1, 7));
    edges.extend((7..11).map(|i| (i, i + 1)));
    edges.push((1, 11));
    SimpleGraph::new(11, &edges).unwrap()
}
