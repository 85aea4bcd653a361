//! The toric ideal I_G of a graph, computed through monomial fibers.
//!
//! Writing π(x_i) = **t**^{ρ(e_i)} s, two degree-q monomials lie in the
//! same *fiber* when their π-images coincide; the degree-q piece of I_G is
//! spanned by the differences within each fiber. Minimal generators,
//! even-closed-walk binomials, and the truncated Betti data (μ_q and
//! β_{2,j}) are all derived from this picture with exact arithmetic.

mod betti;
mod fibers;
mod walks;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};
use crate::polytope::{LatticePoint, PolytopeError};

pub use betti::{linearity_verdict, truncated_betti, BettiTable};
pub use fibers::{graded_ideal_dim, minimal_generators, pi_image, MinimalGenerators};
pub use walks::{
    classify_degree3_walks, even_closed_walks, verify_walk_generation, walk_binomial, WalkShape,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("monomial has {got} exponents, graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0}")]
    InvalidBound(String),
    #[error("truncation bounds too small: {0}")]
    InsufficientBounds(String),
    #[error(
        "length-6 walk with nonzero coprime binomial is neither a 6-cycle nor a bowtie: {0:?}"
    )]
    UnclassifiableWalk(Vec<usize>),
    #[error("invalid binomial: {0}")]
    InvalidBinomial(String),
    #[error("polytope error: {0}")]
    Polytope(#[from] PolytopeError),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("kernel error: {0}")]
    Kernel(#[from] crate::exactla::ExactLaError),
}

/// Monomial in the edge variables x_1..x_n, stored as its exponent vector.
/// The ordering is the lexicographic monomial order with x_1 > x_2 > …
/// (entrywise comparison of exponent vectors).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn new(exponents: Vec<u8>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial 1.
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    /// x_i as a monomial (0-based variable index).
    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    /// Multiply by x_i.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Divide by x_i, if divisible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    /// Variables with positive exponent (0-based).
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{e}", i + 1)?,
            }
        }
        Ok(())
    }
}

/// Difference of two distinct equal-degree monomials with equal π-images,
/// i.e. an element of I_G.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Validates the I_G membership invariants against the host graph.
    pub fn new(g: &SimpleGraph, plus: Monomial, minus: Monomial) -> Result<Self, ToricError> {
        if plus == minus {
            return Err(ToricError::InvalidBinomial(
                "the two monomials coincide".into(),
            ));
        }
        if plus.degree() != minus.degree() {
            return Err(ToricError::InvalidBinomial("degrees differ".into()));
        }
        let (im_plus, _) = pi_image(g, &plus)?;
        let (im_minus, _) = pi_image(g, &minus)?;
        if im_plus != im_minus {
            return Err(ToricError::InvalidBinomial(
                "π-images differ, not an element of the toric ideal".into(),
            ));
        }
        Ok(Binomial { plus, minus })
    }

    pub(crate) fn new_unchecked(plus: Monomial, minus: Monomial) -> Self {
        Binomial { plus, minus }
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn degree(&self) -> usize {
        self.plus.degree()
    }

    /// The unordered pair of monomials, for sign-insensitive comparison.
    pub fn unordered(&self) -> (Monomial, Monomial) {
        if self.plus <= self.minus {
            (self.plus.clone(), self.minus.clone())
        } else {
            (self.minus.clone(), self.plus.clone())
        }
    }
}

impl std::fmt::Display for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// Closed walk of even length, stored as its vertex trail v_1..v_{2q}
/// (closing back to v_1) with the matching edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenClosedWalk {
    edge_indices: Vec<usize>,
    vertices: Vec<usize>,
}

impl EvenClosedWalk {
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edge_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_indices.is_empty()
    }

    pub fn half_length(&self) -> usize {
        self.edge_indices.len() / 2
    }
}

/// Codimension, generator and linearity data of the ideal of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSummary {
    /// dim K[G] = dim P_G + 1.
    pub ring_dim: usize,
    /// c = |E(G)| − ring_dim.
    pub codim: usize,
    pub generator_degrees: Vec<usize>,
    /// Exactly one minimal generator within the truncation bounds.
    pub hypersurface: bool,
    /// Expected Cohen–Macaulay q-linear generator counts C(c+q−1, q) per
    /// degree that actually carries generators, with the observed counts.
    pub eg_checks: Vec<EgCheck>,
    /// No positive integer c ≤ 10⁶ satisfies c(c+1)(c+2)/6 = 2, so a
    /// 3-linear edge ring can never have exactly two generators.
    pub eg_two_generators_impossible: bool,
    pub q_max: usize,
    pub j_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgCheck {
    pub q: usize,
    pub expected: u64,
    pub observed: u64,
    pub matches: bool,
}

/// Codimension and generator summary; see [`IdealSummary`].
pub fn ideal_summary(
    g: &SimpleGraph,
    q_max: usize,
    j_max: usize,
) -> Result<IdealSummary, ToricError> {
    if q_max < 2 || j_max < q_max + 1 {
        return Err(ToricError::InsufficientBounds(format!(
            "need q_max ≥ 2 and j_max ≥ q_max + 1, got ({q_max}, {j_max})"
        )));
    }
    let p = crate::polytope::edge_polytope(g)?;
    let ring_dim = p.dim() + 1;
    let codim = g.edge_count() - ring_dim;
    let gens = minimal_generators(g, q_max)?;
    let generator_degrees: Vec<usize> = gens
        .per_degree()
        .iter()
        .flat_map(|(&q, v)| std::iter::repeat_n(q, v.len()))
        .collect();
    let total: usize = generator_degrees.len();
    let eg_checks = gens
        .per_degree()
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(&q, v)| {
            let expected = binomial_u64(codim + q - 1, q);
            EgCheck {
                q,
                expected,
                observed: v.len() as u64,
                matches: v.len() as u64 == expected,
            }
        })
        .collect();
    Ok(IdealSummary {
        ring_dim,
        codim,
        generator_degrees,
        hypersurface: total == 1,
        eg_checks,
        eg_two_generators_impossible: eg_two_generators_impossible(1_000_000),
        q_max,
        j_max,
    })
}

/// Scans c = 1..=bound for solutions of c(c+1)(c+2)/6 = 2.
pub fn eg_two_generators_impossible(bound: u64) -> bool {
    (1..=bound).all(|c| c * (c + 1) * (c + 2) != 12)
}

pub(crate) fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// π-image of a monomial, shared by the fiber machinery.
pub(crate) fn image_of(g: &SimpleGraph, m: &Monomial) -> LatticePoint {
    let mut img = vec![0i64; g.n()];
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            let (u, v) = g.edges()[i];
            img[u - 1] += i64::from(e);
            img[v - 1] += i64::from(e);
        }
    }
    img
}

/// Monomial exponents are stored as bytes; degrees anywhere near the cap
/// are far beyond what enumeration could handle anyway.
pub(crate) fn check_degree_bound(q: usize) -> Result<(), ToricError> {
    if q > 64 {
        return Err(ToricError::InvalidBound(format!(
            "degree bound {q} exceeds the supported maximum 64"
        )));
    }
    Ok(())
}

/// All degree-q monomials in n variables, ascending lexicographic order.
pub(crate) fn monomials_of_degree(n_vars: usize, q: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n_vars];
    fn rec(i: usize, left: usize, current: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if i + 1 == current.len() {
            current[i] = left as u8;
            out.push(Monomial::new(current.clone()));
            current[i] = 0;
            return;
        }
        for e in 0..=left {
            current[i] = e as u8;
            rec(i + 1, left - e, current, out);
        }
        current[i] = 0;
    }
    if n_vars == 0 {
        return out;
    }
    rec(0, q, &mut current, &mut out);
    out
}

/// Fibers of the degree-q monomials: groups with equal π-image, in
/// deterministic (image-sorted) order; monomials within each fiber stay in
/// lexicographic order. Singleton fibers are included.
pub(crate) fn fibers(g: &SimpleGraph, q: usize) -> Vec<Vec<Monomial>> {
    let mut map: BTreeMap<LatticePoint, Vec<Monomial>> = BTreeMap::new();
    for m in monomials_of_degree(g.edge_count(), q) {
        map.entry(image_of(g, &m)).or_default().push(m);
    }
    map.into_values().collect()
}

#[cfg(test)]
mod tests;
