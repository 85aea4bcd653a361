//! Edge polytopes and their δ-polynomials.
//!
//! For a graph G on {1,…,N} with edges e₁,…,eₙ, the edge polytope is the
//! convex hull of the incidence vectors ρ(e) = **e**ᵢ + **e**ⱼ for
//! e = {i,j}. This module computes dilation lattice-point counts
//! |tP ∩ ℤᴺ|, the δ-polynomial
//! δ(P,λ) = (1−λ)^{d+1}[1 + Σₜ |tP ∩ ℤᴺ| λᵗ], its degree and codegree,
//! and the full-dimensionalizing coordinate projections.
//!
//! Membership and relative-interior questions are decided by the exact
//! rational LP kernel. Candidate enumeration applies necessary conditions
//! only (coordinate caps, bipartite balance, stable-set cuts), so pruning
//! can never change a count: the LP remains the decider.

mod count;

use std::collections::BTreeMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::exactla::{self, rat, LpStatus, Rat, RationalMatrix};
use crate::graph::{GraphError, SimpleGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("graph is not connected; components: {0:?}")]
    Disconnected(Vec<Vec<usize>>),
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge subset is empty")]
    EmptySubset,
    #[error("invalid edge subset: {0}")]
    InvalidSubset(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("linear algebra kernel: {0}")]
    Kernel(#[from] exactla::ExactLaError),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
}

/// Integer point of the ambient lattice.
pub type LatticePoint = Vec<i64>;

/// One connected component of the generating edge set: its ambient
/// coordinates, its generators, the bipartition of its coordinates if the
/// component is bipartite, and the stable-set cuts used for pruning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ComponentBlock {
    pub coords: Vec<usize>,
    pub gens: Vec<usize>,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    /// Necessary inequalities x(T) ≤ x(N(T)) for stable sets T of the
    /// component, as (T-coords, N(T)-coords) pairs.
    pub stable_cuts: Vec<(Vec<usize>, Vec<usize>)>,
}

/// Lattice polytope given by its generating points. For true edge
/// polytopes every generator is 0/1 with coordinate sum 2 and the
/// component blocks carry the edge structure; coordinate projections
/// produced by [`full_dimensionalize`] have no block structure and use the
/// generic counting path.
#[derive(Debug)]
pub struct EdgePolytope {
    ambient_dim: usize,
    generators: Vec<LatticePoint>,
    dim: usize,
    blocks: Vec<ComponentBlock>,
    /// Common coordinate sum of all generators, when uniform (2 for edge
    /// polytopes); enables the Σx = sum·t shortcut.
    uniform_gen_sum: Option<i64>,
    /// Write-once memo of |tP ∩ ℤᴺ| per t.
    count_memo: Mutex<BTreeMap<u32, u64>>,
    /// Memo of per-block shell counts keyed by (block index, shell sum).
    shell_memo: Mutex<BTreeMap<(usize, i64), u64>>,
}

impl Clone for EdgePolytope {
    fn clone(&self) -> Self {
        EdgePolytope {
            ambient_dim: self.ambient_dim,
            generators: self.generators.clone(),
            dim: self.dim,
            blocks: self.blocks.clone(),
            uniform_gen_sum: self.uniform_gen_sum,
            count_memo: Mutex::new(self.count_memo.lock().unwrap().clone()),
            shell_memo: Mutex::new(self.shell_memo.lock().unwrap().clone()),
        }
    }
}

impl EdgePolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Intrinsic (affine) dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    /// Number of component blocks of the generating edge set (0 for
    /// generic projected polytopes).
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// ρ(e) = **e**ᵢ + **e**ⱼ as a 0/1 vector in the ambient space.
fn rho(n: usize, edge: (usize, usize)) -> LatticePoint {
    let mut v = vec![0i64; n];
    v[edge.0 - 1] = 1;
    v[edge.1 - 1] = 1;
    v
}

/// Affine dimension of a generator family: rank of the homogenized
/// matrix [g | 1] minus 1.
fn affine_dim(generators: &[LatticePoint]) -> usize {
    if generators.is_empty() {
        return 0;
    }
    if generators[0].is_empty() {
        // Points of ℝ⁰: a single point.
        return 0;
    }
    let rows: Vec<Vec<i64>> = generators
        .iter()
        .map(|g| {
            let mut r = g.clone();
            r.push(1);
            r
        })
        .collect();
    let m = RationalMatrix::from_int_rows(&rows);
    exactla::rank(&m, exactla::RankMode::Exact) - 1
}

/// Edge polytope P_G of a connected graph.
///
/// The intrinsic dimension is computed by rank and cross-checked against
/// the bipartite rule (N−1 non-bipartite, N−2 bipartite).
pub fn edge_polytope(g: &SimpleGraph) -> Result<EdgePolytope, PolytopeError> {
    if g.edge_count() == 0 {
        return Err(PolytopeError::NoEdges);
    }
    if !g.is_connected() {
        return Err(PolytopeError::Disconnected(g.components()));
    }
    let p = edge_subpolytope(g, &(0..g.edge_count()).collect::<Vec<_>>())?;
    let expected = if g.is_bipartite() {
        g.n() - 2
    } else {
        g.n() - 1
    };
    if p.dim != expected {
        return Err(PolytopeError::Internal(format!(
            "rank dimension {} disagrees with bipartite rule {}",
            p.dim, expected
        )));
    }
    Ok(p)
}

/// Polytope generated by a subset of the edges of `g`, in the ambient
/// space ℝᴺ of the host graph. The subset need not be connected; its
/// component blocks are recorded for convolution counting.
pub fn edge_subpolytope(
    g: &SimpleGraph,
    edge_subset: &[usize],
) -> Result<EdgePolytope, PolytopeError> {
    if edge_subset.is_empty() {
        return Err(PolytopeError::EmptySubset);
    }
    let mut seen = vec![false; g.edge_count()];
    for &e in edge_subset {
        if e >= g.edge_count() {
            return Err(PolytopeError::InvalidSubset(format!(
                "edge index {e} out of range 0..{}",
                g.edge_count()
            )));
        }
        if seen[e] {
            return Err(PolytopeError::InvalidSubset(format!(
                "edge index {e} repeated"
            )));
        }
        seen[e] = true;
    }

    let n = g.n();
    let generators: Vec<LatticePoint> = edge_subset.iter().map(|&e| rho(n, g.edges()[e])).collect();
    let blocks = component_blocks(g, edge_subset);
    let dim = affine_dim(&generators);
    Ok(EdgePolytope {
        ambient_dim: n,
        generators,
        dim,
        blocks,
        uniform_gen_sum: Some(2),
        count_memo: Mutex::new(BTreeMap::new()),
        shell_memo: Mutex::new(BTreeMap::new()),
    })
}

/// Splits the selected edges into connected components and prepares the
/// per-block pruning data.
fn component_blocks(g: &SimpleGraph, edge_subset: &[usize]) -> Vec<ComponentBlock> {
    let n = g.n();
    // Union-find over vertices touched by the subset.
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for &e in edge_subset {
        let (u, v) = g.edges()[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut block_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in edge_subset {
        let r = find(&mut parent, g.edges()[e].0);
        block_of_root.entry(r).or_insert_with(|| {
            roots.push(r);
            roots.len() - 1
        });
    }

    let mut touched = vec![false; n + 1];
    for &e in edge_subset {
        let (u, v) = g.edges()[e];
        touched[u] = true;
        touched[v] = true;
    }

    let mut blocks: Vec<ComponentBlock> = (0..roots.len())
        .map(|_| ComponentBlock {
            coords: Vec::new(),
            gens: Vec::new(),
            bipartition: None,
            stable_cuts: Vec::new(),
        })
        .collect();
    for (gen_idx, &e) in edge_subset.iter().enumerate() {
        let r = find(&mut parent, g.edges()[e].0);
        blocks[block_of_root[&r]].gens.push(gen_idx);
    }
    for v in 1..=n {
        if !touched[v] {
            continue;
        }
        let r = find(&mut parent, v);
        blocks[block_of_root[&r]].coords.push(v - 1);
    }

    for block in blocks.iter_mut() {
        let edges_local: Vec<(usize, usize)> = block
            .gens
            .iter()
            .map(|&gi| {
                let (u, v) = g.edges()[edge_subset[gi]];
                let lu = block.coords.binary_search(&(u - 1)).unwrap();
                let lv = block.coords.binary_search(&(v - 1)).unwrap();
                (lu, lv)
            })
            .collect();
        block.bipartition = local_bipartition(block.coords.len(), &edges_local).map(|(a, b)| {
            (
                a.iter().map(|&i| block.coords[i]).collect(),
                b.iter().map(|&i| block.coords[i]).collect(),
            )
        });
        block.stable_cuts = stable_set_cuts(block.coords.len(), &edges_local)
            .into_iter()
            .map(|(t, nt)| {
                (
                    t.iter().map(|&i| block.coords[i]).collect(),
                    nt.iter().map(|&i| block.coords[i]).collect(),
                )
            })
            .collect();
    }
    blocks
}

fn local_bipartition(k: usize, edges: &[(usize, usize)]) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color = vec![u8::MAX; k];
    for s in 0..k {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some((
        (0..k).filter(|&v| color[v] == 0).collect(),
        (0..k).filter(|&v| color[v] == 1).collect(),
    ))
}

/// Stable sets T with their neighborhoods N(T); each yields the valid cone
/// inequality x(T) ≤ x(N(T)). Capped to components of ≤ 16 coordinates
/// (anything larger never reaches the enumeration paths).
fn stable_set_cuts(k: usize, edges: &[(usize, usize)]) -> Vec<(Vec<usize>, Vec<usize>)> {
    if k > 16 {
        return Vec::new();
    }
    let mut nb = vec![0u32; k];
    for &(u, v) in edges {
        nb[u] |= 1 << v;
        nb[v] |= 1 << u;
    }
    let mut cuts = Vec::new();
    for mask in 1u32..1 << k {
        let mut stable = true;
        let mut neighborhood = 0u32;
        for v in 0..k {
            if mask >> v & 1 == 1 {
                if nb[v] & mask != 0 {
                    stable = false;
                    break;
                }
                neighborhood |= nb[v];
            }
        }
        if !stable {
            continue;
        }
        let t: Vec<usize> = (0..k).filter(|&v| mask >> v & 1 == 1).collect();
        let nt: Vec<usize> = (0..k).filter(|&v| neighborhood >> v & 1 == 1).collect();
        cuts.push((t, nt));
    }
    // Small sets first: singleton cuts reject most candidates cheaply.
    cuts.sort_by_key(|(t, _)| t.len());
    cuts
}

impl EdgePolytope {
    /// Membership of `x` in the dilation `tP`, decided by exact LP
    /// feasibility of `Σ λ_e ρ(e) = x, Σ λ = t, λ ≥ 0`.
    pub fn contains(&self, t: u32, x: &[i64]) -> Result<bool, PolytopeError> {
        if x.len() != self.ambient_dim {
            return Err(PolytopeError::DimensionMismatch(format!(
                "point has {} coordinates, ambient dimension is {}",
                x.len(),
                self.ambient_dim
            )));
        }
        // Every point of tP has coordinate sum (gen sum)·t.
        if let Some(s) = self.uniform_gen_sum {
            if x.iter().sum::<i64>() != s * i64::from(t) {
                return Ok(false);
            }
        }
        if x.iter().any(|&v| v < 0) && self.generators.iter().all(|g| g.iter().all(|&v| v >= 0)) {
            return Ok(false);
        }
        if self.ambient_dim == 0 {
            return Ok(true);
        }
        let (a, b) = self.membership_system(t, x);
        let out = exactla::lp_feasible(&a, &b)?;
        Ok(out.status == LpStatus::Feasible)
    }

    /// Relative-interior membership: true exactly when the max-min LP
    /// certifies an all-positive convex combination of **all** generators.
    pub fn relint_contains(&self, t: u32, x: &[i64]) -> Result<bool, PolytopeError> {
        if x.len() != self.ambient_dim {
            return Err(PolytopeError::DimensionMismatch(format!(
                "point has {} coordinates, ambient dimension is {}",
                x.len(),
                self.ambient_dim
            )));
        }
        if let Some(s) = self.uniform_gen_sum {
            if x.iter().sum::<i64>() != s * i64::from(t) {
                return Ok(false);
            }
        }
        if self.ambient_dim == 0 {
            return Ok(true);
        }
        let (a, b) = self.membership_system(t, x);
        let out = exactla::lp_max_min_coordinate(&a, &b)?;
        Ok(out.status == LpStatus::Optimal && out.objective.is_some_and(|e| e > rat(0)))
    }

    /// Constraint system `[generatorsᵀ; 1ᵀ] λ = [x; t]`.
    fn membership_system(&self, t: u32, x: &[i64]) -> (RationalMatrix, Vec<Rat>) {
        let n = self.generators.len();
        let m = self.ambient_dim;
        let mut a = RationalMatrix::zeros(m + 1, n);
        for (j, g) in self.generators.iter().enumerate() {
            for (i, &v) in g.iter().enumerate() {
                if v != 0 {
                    a.set(i, j, rat(v));
                }
            }
            a.set(m, j, rat(1));
        }
        let mut b: Vec<Rat> = x.iter().map(|&v| rat(v)).collect();
        b.push(rat(i64::from(t)));
        (a, b)
    }
}

/// δ-polynomial of a lattice polytope together with the Ehrhart counts it
/// was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPolynomial {
    coefficients: Vec<u64>,
    degree: usize,
    codegree: usize,
    ehrhart_counts: Vec<u64>,
}

impl DeltaPolynomial {
    /// Coefficients δ₀..δ_d (length d+1, trailing zeros kept).
    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Largest index with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// d + 1 − degree.
    pub fn codegree(&self) -> usize {
        self.codegree
    }

    /// The counts L(0)..L(d) the coefficients were computed from.
    pub fn ehrhart_counts(&self) -> &[u64] {
        &self.ehrhart_counts
    }

    /// Normalized volume Σ δ_i.
    pub fn delta_sum(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

impl std::fmt::Display for DeltaPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 && !(i == 0 && self.degree == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "λ")?,
                1 => write!(f, "{c}λ")?,
                _ if c == 1 => write!(f, "λ^{i}")?,
                _ => write!(f, "{c}λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl EdgePolytope {
    /// δ(P, λ) from the counts L(0)..L(d) by the alternating binomial sum
    /// δ_i = Σ_{j≤i} (−1)^{i−j} C(d+1, i−j) L(j). Exact integers
    /// throughout; a negative coefficient means a counting bug and is
    /// reported as an internal error.
    pub fn delta_polynomial(&self) -> Result<DeltaPolynomial, PolytopeError> {
        let d = self.dim;
        let counts: Vec<u64> = self.counts_up_to(d as u32)?;
        let binom = binomial_row(d + 1);
        let mut coefficients = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let mut acc: i128 = 0;
            for j in 0..=i {
                let c = binom[i - j] as i128 * counts[j] as i128;
                if (i - j) % 2 == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
            if acc < 0 {
                return Err(PolytopeError::Internal(format!(
                    "negative δ_{i} = {acc}: lattice counting is inconsistent"
                )));
            }
            coefficients.push(acc as u64);
        }
        if coefficients[0] != 1 {
            return Err(PolytopeError::Internal(format!(
                "δ_0 = {} (must be 1)",
                coefficients[0]
            )));
        }
        let degree = coefficients.iter().rposition(|&c| c != 0).unwrap_or(0);
        Ok(DeltaPolynomial {
            codegree: d + 1 - degree,
            degree,
            coefficients,
            ehrhart_counts: counts,
        })
    }

    /// Smallest dilation `r ≤ d+1` whose relative interior meets the
    /// lattice, found by independent interior-point search (no δ data).
    pub fn codegree_by_interior(&self) -> Result<usize, PolytopeError> {
        for r in 1..=(self.dim as u32 + 1) {
            if self.find_interior_point(r)?.is_some() {
                return Ok(r as usize);
            }
        }
        Err(PolytopeError::Internal(
            "no interior lattice point up to dilation d+1".into(),
        ))
    }

    /// True when `int(rP)` meets the lattice for some `r ≤ r_max`.
    /// Degree bounds follow without a full δ computation:
    /// deg ≥ k ⟺ codeg ≤ d + 1 − k.
    pub fn has_interior_point_within(&self, r_max: usize) -> Result<bool, PolytopeError> {
        for r in 1..=r_max as u32 {
            if self.find_interior_point(r)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub(crate) fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for k in 1..=n {
        let prev = row[k - 1];
        row.push(prev * (n - k + 1) as u64 / k as u64);
    }
    row
}

/// Full-dimensionalizing projection: drops the last coordinate for a
/// non-bipartite connected graph, and one coordinate from each side of the
/// bipartition for a bipartite one. The image is a full dimensional
/// lattice polytope with the same δ-polynomial.
pub fn full_dimensionalize(
    p: &EdgePolytope,
    g: &SimpleGraph,
) -> Result<EdgePolytope, PolytopeError> {
    if p.ambient_dim != g.n() {
        return Err(PolytopeError::DimensionMismatch(
            "polytope ambient dimension does not match the graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(PolytopeError::Disconnected(g.components()));
    }
    let dropped: Vec<usize> = match g.bipartition() {
        None => vec![g.n() - 1],
        Some((u_side, v_side)) => {
            // Any U-vertex and any V-vertex serve as the relabeled 1 and N.
            let u = *u_side
                .first()
                .ok_or_else(|| PolytopeError::Internal("bipartite graph with empty side".into()))?;
            let v = *v_side
                .first()
                .ok_or_else(|| PolytopeError::Internal("bipartite graph with empty side".into()))?;
            vec![u - 1, v - 1]
        }
    };
    let generators: Vec<LatticePoint> = p
        .generators
        .iter()
        .map(|gen| {
            gen.iter()
                .enumerate()
                .filter(|(i, _)| !dropped.contains(i))
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    let ambient_dim = p.ambient_dim - dropped.len();
    let dim = affine_dim(&generators);
    if dim != p.dim {
        return Err(PolytopeError::Internal(format!(
            "projection changed dimension: {} → {}",
            p.dim, dim
        )));
    }
    if dim != ambient_dim {
        return Err(PolytopeError::Internal(format!(
            "projected polytope is not full dimensional: dim {dim} in ℝ^{ambient_dim}"
        )));
    }
    let uniform_gen_sum = generators
        .first()
        .map(|g0| g0.iter().sum::<i64>())
        .filter(|&s| generators.iter().all(|g| g.iter().sum::<i64>() == s));
    Ok(EdgePolytope {
        ambient_dim,
        generators,
        dim,
        blocks: Vec::new(),
        uniform_gen_sum,
        count_memo: Mutex::new(BTreeMap::new()),
        shell_memo: Mutex::new(BTreeMap::new()),
    })
}

#[cfg(test)]
mod tests;
