use super::*;
use crate::graph::families;
use std::collections::HashSet;

fn triangle() -> SimpleGraph {
    SimpleGraph::new(3, &[(1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Independent oracle for the triangle: with edges {1,2},{1,3},{2,3} the
/// system Σλ_e ρ(e) = x is square with the closed-form solution
/// λ = ((x1+x2−x3)/2, (x1−x2+x3)/2, (−x1+x2+x3)/2), so membership in tP
/// is just nonnegativity of those three values.
fn triangle_count_oracle(t: i64) -> u64 {
    let mut count = 0;
    for x1 in 0..=2 * t {
        for x2 in 0..=2 * t - x1 {
            let x3 = 2 * t - x1 - x2;
            if x1 + x2 >= x3 && x1 + x3 >= x2 && x2 + x3 >= x1 {
                count += 1;
            }
        }
    }
    count
}

/// Independent oracle for connected bipartite graphs, whose vertex-edge
/// incidence matrices are totally unimodular: every lattice point of tP is
/// a sum of t generators, so |tP ∩ ℤᴺ| is the number of distinct degree
/// sequences of t-edge multisets.
fn bipartite_count_oracle(g: &SimpleGraph, t: usize) -> u64 {
    assert!(g.is_bipartite() && g.is_connected());
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(vec![0; g.n()]);
    for _ in 0..t {
        let mut next = HashSet::new();
        for point in &seen {
            for &(u, v) in g.edges() {
                let mut p = point.clone();
                p[u - 1] += 1;
                p[v - 1] += 1;
                next.insert(p);
            }
        }
        seen = next;
    }
    seen.len() as u64
}

#[test]
fn dimensions_follow_bipartite_rule() {
    assert_eq!(edge_polytope(&families::cycle(6)).unwrap().dim(), 4);
    assert_eq!(edge_polytope(&families::bowtie()).unwrap().dim(), 4);
    assert_eq!(
        edge_polytope(&families::complete_bipartite(2, 3))
            .unwrap()
            .dim(),
        3
    );
}

#[test]
fn rejects_disconnected_and_edgeless() {
    let disconnected = SimpleGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
    assert!(matches!(
        edge_polytope(&disconnected),
        Err(PolytopeError::Disconnected(_))
    ));
    let k1 = SimpleGraph::new_allow_empty(1, &[]).unwrap();
    assert!(matches!(edge_polytope(&k1), Err(PolytopeError::NoEdges)));
}

#[test]
fn subpolytope_dimensions() {
    // Two disjoint triangles: each block has affine dimension 2, plus one
    // for mixing the dilation budget between them.
    let host = families::two_triangles_bridged();
    let q = edge_subpolytope(&host, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(q.dim(), 5);
    assert_eq!(q.block_count(), 2);

    // Two disjoint hexagons: 4 + 4 + 1.
    let host = families::two_hexagons_bridged();
    let q = edge_subpolytope(&host, &(0..12).collect::<Vec<_>>()).unwrap();
    assert_eq!(q.dim(), 9);
    assert_eq!(q.block_count(), 2);

    // A single edge is a point.
    let q = edge_subpolytope(&host, &[0]).unwrap();
    assert_eq!(q.dim(), 0);
}

#[test]
fn subpolytope_rejects_bad_subsets() {
    let host = triangle();
    assert!(matches!(
        edge_subpolytope(&host, &[]),
        Err(PolytopeError::EmptySubset)
    ));
    assert!(edge_subpolytope(&host, &[0, 0]).is_err());
    assert!(edge_subpolytope(&host, &[7]).is_err());
}

#[test]
fn triangle_membership() {
    let p = edge_polytope(&triangle()).unwrap();
    assert!(p.contains(2, &[1, 1, 2]).unwrap());
    assert!(!p.contains(2, &[3, 1, 0]).unwrap());
    // Coordinate-sum shortcut: Σx ≠ 2t.
    assert!(!p.contains(1, &[1, 1, 1]).unwrap());
}

#[test]
fn triangle_relative_interior() {
    let p = edge_polytope(&triangle()).unwrap();
    assert!(p.relint_contains(3, &[2, 2, 2]).unwrap());
    assert!(!p.relint_contains(2, &[1, 1, 2]).unwrap());
}

#[test]
fn disjoint_triangles_interior_point() {
    let host = families::two_triangles_bridged();
    let q = edge_subpolytope(&host, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert!(q.relint_contains(3, &[1, 1, 1, 1, 1, 1]).unwrap());
}

#[test]
fn triangle_counts_match_hand_oracle() {
    let p = edge_polytope(&triangle()).unwrap();
    assert_eq!(p.count_lattice_points(0).unwrap(), 1);
    assert_eq!(p.count_lattice_points(1).unwrap(), 3);
    assert_eq!(p.count_lattice_points(2).unwrap(), 6);
    for t in 0..=4 {
        assert_eq!(
            p.count_lattice_points(t).unwrap(),
            triangle_count_oracle(i64::from(t)),
            "t = {t}"
        );
    }
}

#[test]
fn k23_counts_match_multiset_oracle() {
    let g = families::complete_bipartite(2, 3);
    let p = edge_polytope(&g).unwrap();
    assert_eq!(p.count_lattice_points(1).unwrap(), 6);
    assert_eq!(p.count_lattice_points(2).unwrap(), 18);
    assert_eq!(p.count_lattice_points(3).unwrap(), 40);
    for t in 0..=3 {
        assert_eq!(
            p.count_lattice_points(t).unwrap(),
            bipartite_count_oracle(&g, t as usize),
            "t = {t}"
        );
    }
}

#[test]
fn delta_of_triangle_is_one() {
    let p = edge_polytope(&triangle()).unwrap();
    let d = p.delta_polynomial().unwrap();
    assert_eq!(d.coefficients(), &[1, 0, 0]);
    assert_eq!(d.degree(), 0);
    assert_eq!(d.codegree(), 3);
    assert_eq!(d.ehrhart_counts(), &[1, 3, 6]);
}

#[test]
fn delta_of_k23() {
    let p = edge_polytope(&families::complete_bipartite(2, 3)).unwrap();
    let d = p.delta_polynomial().unwrap();
    assert_eq!(d.coefficients(), &[1, 2, 0, 0]);
    assert_eq!(d.degree(), 1);
    assert_eq!(d.codegree(), 3);
    assert_eq!(d.to_string(), "1 + 2λ");
}

#[test]
fn delta_of_c4_has_degree_one() {
    let p = edge_polytope(&families::cycle(4)).unwrap();
    let d = p.delta_polynomial().unwrap();
    assert_eq!(d.degree(), 1);
    assert_eq!(d.coefficients(), &[1, 1, 0]);
}

#[test]
fn codegree_by_interior_search() {
    let p = edge_polytope(&triangle()).unwrap();
    assert_eq!(p.codegree_by_interior().unwrap(), 3);

    let bowtie = edge_polytope(&families::bowtie()).unwrap();
    assert!(bowtie.relint_contains(3, &[1, 1, 2, 1, 1]).unwrap());
    assert_eq!(bowtie.codegree_by_interior().unwrap(), 3);

    let hexagon = edge_polytope(&families::cycle(6)).unwrap();
    assert!(hexagon.relint_contains(3, &[1, 1, 1, 1, 1, 1]).unwrap());
    assert_eq!(hexagon.codegree_by_interior().unwrap(), 3);
}

#[test]
fn codegree_paths_agree_on_gadgets() {
    for g in [
        triangle(),
        families::cycle(4),
        families::cycle(6),
        families::bowtie(),
        families::complete_bipartite(2, 3),
        families::complete(4),
    ] {
        let p = edge_polytope(&g).unwrap();
        let d = p.delta_polynomial().unwrap();
        assert_eq!(
            p.codegree_by_interior().unwrap(),
            d.codegree(),
            "graph {:?}",
            g.edges()
        );
    }
}

/// Direct LP-membership count over the full candidate box, with the public
/// `contains` (which carries the explicit budget row): the independent
/// route against the blockwise convolution.
fn direct_count(p: &EdgePolytope, t: u32) -> u64 {
    let n = p.ambient_dim();
    let mut count = 0u64;
    let mut x = vec![0i64; n];
    fn rec(p: &EdgePolytope, t: u32, i: usize, left: i64, x: &mut Vec<i64>, count: &mut u64) {
        if i == x.len() {
            if left == 0 && p.contains(t, x).unwrap() {
                *count += 1;
            }
            return;
        }
        for v in 0..=left.min(i64::from(t)) {
            x[i] = v;
            rec(p, t, i + 1, left - v, x, count);
        }
        x[i] = 0;
    }
    rec(p, t, 0, 2 * i64::from(t), &mut x, &mut count);
    count
}

#[test]
fn convolution_agrees_with_direct_count_on_two_triangles() {
    let host = families::two_triangles_bridged();
    let q = edge_subpolytope(&host, &[0, 1, 2, 3, 4, 5]).unwrap();
    assert_eq!(q.block_count(), 2);
    for t in 0..=4 {
        assert_eq!(
            q.count_lattice_points(t).unwrap(),
            direct_count(&q, t),
            "t = {t}"
        );
    }
}

#[test]
fn convolution_agrees_with_direct_count_on_triangle_plus_edge() {
    let host = families::two_triangles_bridged();
    let q = edge_subpolytope(&host, &[0, 1, 2, 3]).unwrap();
    assert_eq!(q.block_count(), 2);
    for t in 0..=4 {
        assert_eq!(
            q.count_lattice_points(t).unwrap(),
            direct_count(&q, t),
            "t = {t}"
        );
    }
}

#[test]
fn projection_preserves_delta_bowtie() {
    let g = families::bowtie();
    let p = edge_polytope(&g).unwrap();
    let q = full_dimensionalize(&p, &g).unwrap();
    assert_eq!(q.ambient_dim(), 4);
    assert_eq!(q.dim(), 4);
    assert_eq!(
        q.delta_polynomial().unwrap().coefficients(),
        p.delta_polynomial().unwrap().coefficients()
    );
}

#[test]
fn projection_preserves_delta_c6() {
    let g = families::cycle(6);
    let p = edge_polytope(&g).unwrap();
    let q = full_dimensionalize(&p, &g).unwrap();
    assert_eq!(q.ambient_dim(), 4);
    assert_eq!(q.dim(), 4);
    assert_eq!(
        q.delta_polynomial().unwrap().coefficients(),
        p.delta_polynomial().unwrap().coefficients()
    );
}

#[test]
fn projection_of_single_edge_is_a_point() {
    let g = SimpleGraph::new(2, &[(1, 2)]).unwrap();
    let p = edge_polytope(&g).unwrap();
    let q = full_dimensionalize(&p, &g).unwrap();
    assert_eq!(q.ambient_dim(), 0);
    assert_eq!(q.dim(), 0);
    let d = q.delta_polynomial().unwrap();
    assert_eq!(d.coefficients(), &[1]);
}

#[test]
fn ehrhart_l1_equals_edge_count_on_small_corpus() {
    for g in crate::graph::enumerate_connected_graphs(5).unwrap().iter() {
        if g.edge_count() == 0 {
            continue;
        }
        let p = edge_polytope(g).unwrap();
        assert_eq!(
            p.count_lattice_points(1).unwrap(),
            g.edge_count() as u64,
            "graph {:?}",
            g.edges()
        );
    }
}

/// Half-integrality oracle: basic solutions of a graph incidence system
/// are half-integral, so x ∈ tP ∩ ℤᴺ exactly when 2x is a sum of 2t
/// generator vectors. Counting even points of the level-2t semigroup is
/// therefore an independent route around the LP entirely.
fn semigroup_count_oracle(g: &SimpleGraph, t: usize) -> u64 {
    let mut level: HashSet<Vec<i64>> = HashSet::new();
    level.insert(vec![0; g.n()]);
    for _ in 0..2 * t {
        let mut next = HashSet::new();
        for point in &level {
            for &(u, v) in g.edges() {
                let mut p = point.clone();
                p[u - 1] += 1;
                p[v - 1] += 1;
                next.insert(p);
            }
        }
        level = next;
    }
    level
        .iter()
        .filter(|p| p.iter().all(|&c| c % 2 == 0))
        .count() as u64
}

#[test]
fn counts_match_semigroup_oracle_on_small_corpus() {
    for g in crate::graph::enumerate_connected_graphs(5).unwrap().iter() {
        if g.edge_count() == 0 {
            continue;
        }
        let p = edge_polytope(g).unwrap();
        for t in 0..=3u32 {
            assert_eq!(
                p.count_lattice_points(t).unwrap(),
                semigroup_count_oracle(g, t as usize),
                "graph {:?}, t = {t}",
                g.edges()
            );
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]
    /// Blockwise convolution agrees with the direct budget-row LP count on
    /// random edge subsets of random small graphs.
    #[test]
    fn convolution_agrees_with_direct_count_random(
        mask in 1u32..1 << 10,
        subset_mask in 1u32..1 << 10,
    ) {
        let n = 5;
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        proptest::prop_assume!(!edges.is_empty());
        let g = SimpleGraph::new(n, &edges).unwrap();
        let subset: Vec<usize> = (0..g.edge_count())
            .filter(|e| subset_mask >> e & 1 == 1)
            .collect();
        proptest::prop_assume!(!subset.is_empty());
        let q = edge_subpolytope(&g, &subset).unwrap();
        for t in 0..=2u32 {
            proptest::prop_assert_eq!(
                q.count_lattice_points(t).unwrap(),
                direct_count(&q, t),
                "subset {:?} of {:?} at t = {}", subset, g.edges(), t
            );
        }
    }
}
