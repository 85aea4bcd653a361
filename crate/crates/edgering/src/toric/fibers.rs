//! Graded pieces and minimal generators of I_G from monomial fibers.
//!
//! dim (I_G)_q = Σ_F (|F| − 1) over the degree-q fibers. The minimal
//! generator count in degree q is the rank difference
//! dim (I_G)_q − dim (m·I_G)_q; since both spaces are spanned by
//! differences of monomials (rows with one +1 and one −1), the elimination
//! collapses to connectivity: connecting two monomials of a fiber whenever
//! they share a variable (their quotients then lie in a common lower
//! fiber) spans (m·I_G)_q fiber by fiber, so
//! μ_q = Σ_F (#components of the sharing graph − 1),
//! and the returned basis binomials join the components, smallest
//! representatives first.

use std::collections::BTreeMap;

use super::{fibers, image_of, Binomial, Monomial, ToricError};
use crate::graph::SimpleGraph;
use crate::polytope::LatticePoint;

/// π(x^a) = Σ a_i ρ(e_i), paired with the degree (the s-exponent).
pub fn pi_image(g: &SimpleGraph, m: &Monomial) -> Result<(LatticePoint, usize), ToricError> {
    if m.n_vars() != g.edge_count() {
        return Err(ToricError::LengthMismatch {
            expected: g.edge_count(),
            got: m.n_vars(),
        });
    }
    Ok((image_of(g, m), m.degree()))
}

/// dim (I_G)_q = Σ over fibers of (|F| − 1).
pub fn graded_ideal_dim(g: &SimpleGraph, q: usize) -> Result<usize, ToricError> {
    if q < 1 {
        return Err(ToricError::InvalidBound("degree must be ≥ 1".into()));
    }
    super::check_degree_bound(q)?;
    Ok(fibers(g, q).iter().map(|f| f.len() - 1).sum())
}

/// Minimal generators of I_G per degree, up to the truncation bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGenerators {
    per_degree: BTreeMap<usize, Vec<Binomial>>,
    q_max: usize,
}

impl MinimalGenerators {
    /// Basis binomials by degree (degrees with μ_q = 0 map to empty lists).
    pub fn per_degree(&self) -> &BTreeMap<usize, Vec<Binomial>> {
        &self.per_degree
    }

    /// μ_q for q = 2..=q_max.
    pub fn mu(&self) -> BTreeMap<usize, u64> {
        self.per_degree
            .iter()
            .map(|(&q, v)| (q, v.len() as u64))
            .collect()
    }

    pub fn mu_at(&self, q: usize) -> u64 {
        self.per_degree.get(&q).map_or(0, |v| v.len() as u64)
    }

    pub fn total(&self) -> u64 {
        self.per_degree.values().map(|v| v.len() as u64).sum()
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    /// All generators in (degree, construction) order.
    pub fn all(&self) -> Vec<(usize, Binomial)> {
        self.per_degree
            .iter()
            .flat_map(|(&q, v)| v.iter().map(move |b| (q, b.clone())))
            .collect()
    }
}

/// Minimal generators in degrees 2..=q_max via fiber-graph components.
pub fn minimal_generators(g: &SimpleGraph, q_max: usize) -> Result<MinimalGenerators, ToricError> {
    if q_max < 2 {
        return Err(ToricError::InvalidBound(
            "generator search needs q_max ≥ 2".into(),
        ));
    }
    super::check_degree_bound(q_max)?;
    let mut per_degree = BTreeMap::new();
    for q in 2..=q_max {
        per_degree.insert(q, degree_generators(g, q));
    }
    Ok(MinimalGenerators { per_degree, q_max })
}

/// Completion binomials for one degree: per fiber, one binomial joining
/// each extra sharing-graph component to the first.
fn degree_generators(g: &SimpleGraph, q: usize) -> Vec<Binomial> {
    let mut out = Vec::new();
    for fiber in fibers(g, q) {
        if fiber.len() < 2 {
            continue;
        }
        let comps = sharing_components(&fiber);
        if comps.len() < 2 {
            continue;
        }
        // Components ordered by their smallest monomial; representatives
        // are the lexicographically smallest members.
        let base = &fiber[comps[0][0]];
        for comp in &comps[1..] {
            let rep = &fiber[comp[0]];
            out.push(Binomial::new_unchecked(rep.clone(), base.clone()));
        }
    }
    out
}

/// Connected components of the variable-sharing graph on a fiber, each as
/// sorted member indices, ordered by first member (fibers are in
/// lexicographic order, so the first member is the smallest monomial).
fn sharing_components(fiber: &[Monomial]) -> Vec<Vec<usize>> {
    let k = fiber.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for i in 0..k {
        for j in i + 1..k {
            if !fiber[i].is_coprime_with(&fiber[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..k {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    comps.sort_by_key(|c| c[0]);
    comps
}
