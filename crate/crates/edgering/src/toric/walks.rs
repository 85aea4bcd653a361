//! Even closed walks, their binomials f_Γ, and the walk-based checks:
//! that walk binomials generate the graded pieces, and that every
//! length-6 walk contributing a new cubic generator is a 6-cycle or a
//! bowtie.

use std::collections::{BTreeMap, HashMap};

use super::{
    graded_ideal_dim, image_of, monomials_of_degree, Binomial, EvenClosedWalk, Monomial, ToricError,
};
use crate::graph::SimpleGraph;

/// Every even closed walk of length ≤ 2·max_half_length, one
/// representative per equivalence class under rotation, reflection and
/// starting parity; deterministic order.
pub fn even_closed_walks(
    g: &SimpleGraph,
    max_half_length: usize,
) -> Result<Vec<EvenClosedWalk>, ToricError> {
    if max_half_length < 2 {
        return Err(ToricError::InvalidBound(
            "walk enumeration needs max_half_length ≥ 2".into(),
        ));
    }
    let mut classes: BTreeMap<Vec<usize>, EvenClosedWalk> = BTreeMap::new();
    let mut trail = Vec::new();
    for len in (2..=2 * max_half_length).step_by(2) {
        for start in 1..=g.n() {
            trail.push(start);
            walk_dfs(g, start, len, &mut trail, &mut classes);
            trail.pop();
        }
    }
    Ok(classes.into_values().collect())
}

fn walk_dfs(
    g: &SimpleGraph,
    start: usize,
    len: usize,
    trail: &mut Vec<usize>,
    classes: &mut BTreeMap<Vec<usize>, EvenClosedWalk>,
) {
    if trail.len() == len {
        if g.adjacent(*trail.last().unwrap(), start) {
            record_walk(g, trail, classes);
        }
        return;
    }
    let v = *trail.last().unwrap();
    for &w in g.neighbors(v) {
        trail.push(w);
        walk_dfs(g, start, len, trail, classes);
        trail.pop();
    }
}

fn record_walk(
    g: &SimpleGraph,
    trail: &[usize],
    classes: &mut BTreeMap<Vec<usize>, EvenClosedWalk>,
) {
    let len = trail.len();
    let edges: Vec<usize> = (0..len)
        .map(|i| {
            g.edge_index(trail[i], trail[(i + 1) % len])
                .expect("walk steps along edges")
        })
        .collect();
    let key = canonical_edge_sequence(&edges);
    classes.entry(key).or_insert_with(|| EvenClosedWalk {
        edge_indices: edges,
        vertices: trail.to_vec(),
    });
}

/// Minimum over all rotations of the edge sequence and of its reversal.
fn canonical_edge_sequence(edges: &[usize]) -> Vec<usize> {
    let len = edges.len();
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |seq: &[usize]| {
        for r in 0..len {
            let rotated: Vec<usize> = (0..len).map(|i| seq[(i + r) % len]).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    };
    consider(edges);
    let reversed: Vec<usize> = edges.iter().rev().copied().collect();
    consider(&reversed);
    best.unwrap()
}

/// f_Γ: the alternating-position products. `None` marks the zero binomial
/// (the two products coincide).
pub fn walk_binomial(g: &SimpleGraph, walk: &EvenClosedWalk) -> Option<Binomial> {
    let n = g.edge_count();
    let mut plus = Monomial::one(n);
    let mut minus = Monomial::one(n);
    for (pos, &e) in walk.edge_indices().iter().enumerate() {
        if pos % 2 == 0 {
            plus = plus.times_var(e);
        } else {
            minus = minus.times_var(e);
        }
    }
    if plus == minus {
        None
    } else {
        debug_assert_eq!(image_of(g, &plus), image_of(g, &minus));
        Some(Binomial::new_unchecked(plus, minus))
    }
}

/// Shape of a length-6 walk that carries a fresh cubic binomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkShape {
    /// Six distinct trail vertices.
    C6,
    /// Bowtie trail: one vertex repeated at distance 3, two triangles
    /// sharing exactly that vertex.
    G6,
}

/// Classifies every half-length-3 walk whose binomial is nonzero and has
/// coprime halves (a common variable makes f_Γ a monomial multiple of a
/// lower-degree binomial, so it reduces and contributes no new generator
/// shape). Every such walk must be a 6-cycle or a bowtie; anything else is
/// an error. Walks carrying the same binomial are reported once (a bowtie
/// is traversed by two inequivalent figure-eight walks).
pub fn classify_degree3_walks(
    g: &SimpleGraph,
) -> Result<Vec<(EvenClosedWalk, WalkShape)>, ToricError> {
    let mut out = Vec::new();
    let mut seen_binomials = std::collections::BTreeSet::new();
    for walk in even_closed_walks(g, 3)? {
        if walk.half_length() != 3 {
            continue;
        }
        let Some(binomial) = walk_binomial(g, &walk) else {
            continue;
        };
        if !binomial.plus().is_coprime_with(binomial.minus()) {
            continue;
        }
        let trail = walk.vertices();
        let mut distinct = trail.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let shape = match distinct.len() {
            6 => WalkShape::C6,
            5 => {
                let repeats: Vec<(usize, usize)> = (0..6)
                    .flat_map(|i| ((i + 1)..6).map(move |j| (i, j)))
                    .filter(|&(i, j)| trail[i] == trail[j])
                    .collect();
                if repeats.len() == 1 && repeats[0].1 - repeats[0].0 == 3 {
                    WalkShape::G6
                } else {
                    return Err(ToricError::UnclassifiableWalk(trail.to_vec()));
                }
            }
            _ => return Err(ToricError::UnclassifiableWalk(trail.to_vec())),
        };
        if seen_binomials.insert(binomial.unordered()) {
            out.push((walk, shape));
        }
    }
    Ok(out)
}

/// Desk check that walk binomials generate the graded pieces: for each
/// q ≤ q_max, the span of the monomial multiples of the walk binomials of
/// half-length ≤ q must fill (I_G)_q. Both sides are spanned by
/// plus/minus monomial pairs, so the rank comparison is a connectivity
/// count over the degree-q monomials.
pub fn verify_walk_generation(g: &SimpleGraph, q_max: usize) -> Result<bool, ToricError> {
    if q_max < 2 {
        return Err(ToricError::InvalidBound(
            "generation check needs q_max ≥ 2".into(),
        ));
    }
    let walks = even_closed_walks(g, q_max)?;
    let binomials: Vec<(usize, Binomial)> = walks
        .iter()
        .filter_map(|w| walk_binomial(g, w).map(|b| (w.half_length(), b)))
        .collect();

    for q in 2..=q_max {
        let monomials = monomials_of_degree(g.edge_count(), q);
        let index: HashMap<&Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut uf = UnionFind::new(monomials.len());
        for (p, b) in &binomials {
            if *p > q {
                continue;
            }
            for cof in monomials_of_degree(g.edge_count(), q - p) {
                let mp = cof.product(b.plus());
                let mm = cof.product(b.minus());
                uf.union(index[&mp], index[&mm]);
            }
        }
        // Walk multiples stay inside their fiber, so the span rank is at
        // most dim (I_G)_q; equality is the generation statement.
        if uf.edge_rank() != graded_ideal_dim(g, q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    /// Number of successful merges = rank of the difference-row matrix.
    merges: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            merges: 0,
        }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.merges += 1;
        true
    }

    pub fn edge_rank(&self) -> usize {
        self.merges
    }
}
