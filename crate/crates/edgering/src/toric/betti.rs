//! Truncated graded Betti data: minimal generator counts μ_q and minimal
//! first-syzygy counts β_{2,j}.
//!
//! A first syzygy in degree j is a tuple (h_1, …, h_μ) with Σ h_i g_i = 0
//! and deg h_i = j − deg g_i. Expanding over the monomials of each h_i,
//! the coefficient space is indexed by pairs (i, a); each pair contributes
//! the difference a·plus_i − a·minus_i in the degree-j monomial space, so
//! the syzygy space is the kernel of a two-sparse difference matrix, i.e.
//! the cycle space of a multigraph on the degree-j monomials. Its dimension is
//! the number of non-forest columns and a basis comes from fundamental
//! cycles. Minimality is the usual graded Nakayama quotient:
//! β_{2,j} = dim Syz_j − dim (m·Syz)_j, the latter rank computed by the
//! exact kernel (modular with exact fallback).

use std::collections::BTreeMap;

use super::{minimal_generators, walks::UnionFind, Binomial, Monomial, ToricError};
use crate::exactla::{rank, RankMode, RationalMatrix};
use crate::graph::SimpleGraph;

/// Truncated Betti table: μ_q for q ≤ q_max and β_{2,j} for j ≤ j_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    mu: BTreeMap<usize, u64>,
    beta2: BTreeMap<usize, u64>,
    q_max: usize,
    j_max: usize,
    truncated: bool,
}

impl BettiTable {
    pub fn mu(&self) -> &BTreeMap<usize, u64> {
        &self.mu
    }

    pub fn mu_at(&self, q: usize) -> u64 {
        self.mu.get(&q).copied().unwrap_or(0)
    }

    pub fn beta2(&self) -> &BTreeMap<usize, u64> {
        &self.beta2
    }

    pub fn beta2_at(&self, j: usize) -> u64 {
        self.beta2.get(&j).copied().unwrap_or(0)
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    pub fn j_max(&self) -> usize {
        self.j_max
    }

    /// Always true: the table never claims anything beyond its bounds.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn total_generators(&self) -> u64 {
        self.mu.values().sum()
    }
}

/// μ_q and β_{2,j} within the given bounds. Requires `q_max ≥ 2` and
/// `j_max ≥ q_max + 1`. Ideals with no generator inside the bounds yield
/// the all-zero table.
pub fn truncated_betti(
    g: &SimpleGraph,
    q_max: usize,
    j_max: usize,
) -> Result<BettiTable, ToricError> {
    if q_max < 2 {
        return Err(ToricError::InsufficientBounds(
            "generator bound q_max must be ≥ 2".into(),
        ));
    }
    if j_max < q_max + 1 {
        return Err(ToricError::InsufficientBounds(format!(
            "syzygy bound j_max = {j_max} must be at least q_max + 1 = {}",
            q_max + 1
        )));
    }
    super::check_degree_bound(j_max)?;
    let gens = minimal_generators(g, q_max)?;
    let mu = gens.mu();
    let flat: Vec<(usize, Binomial)> = gens.all();

    let mut beta2: BTreeMap<usize, u64> = (2..=j_max).map(|j| (j, 0)).collect();
    // A principal ideal admits no nonzero minimal first syzygy.
    if flat.len() > 1 {
        let mut prev_basis: Vec<SparseVec> = Vec::new();
        let mut prev_columns: Vec<(usize, Monomial)> = Vec::new();
        let min_deg = flat.iter().map(|(d, _)| *d).min().unwrap();
        for j in min_deg..=j_max {
            let level = syzygy_level(g, &flat, j)?;
            let moved = shifted_rank(g, &prev_basis, &prev_columns, &level.columns)?;
            let dim_syz = level.basis.len() as u64;
            beta2.insert(j, dim_syz - moved as u64);
            prev_basis = level.basis;
            prev_columns = level.columns;
        }
    }

    Ok(BettiTable {
        mu,
        beta2,
        q_max,
        j_max,
        truncated: true,
    })
}

/// Sparse syzygy vector over the column index space of its level.
type SparseVec = Vec<(usize, i64)>;

struct SyzygyLevel {
    columns: Vec<(usize, Monomial)>,
    basis: Vec<SparseVec>,
}

/// Kernel basis of the degree-j syzygy matrix via fundamental cycles of
/// the plus/minus multigraph.
fn syzygy_level(
    g: &SimpleGraph,
    gens: &[(usize, Binomial)],
    j: usize,
) -> Result<SyzygyLevel, ToricError> {
    let n = g.edge_count();
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    for (i, (d, _)) in gens.iter().enumerate() {
        if j < *d {
            continue;
        }
        for a in super::monomials_of_degree(n, j - d) {
            columns.push((i, a));
        }
    }

    // Endpoints of each column in the degree-j monomial node space.
    let mut node_ids: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut endpoints: Vec<(usize, usize)> = Vec::with_capacity(columns.len()); // (minus, plus)
    for (i, a) in &columns {
        let b = &gens[*i].1;
        let plus = a.product(b.plus());
        let minus = a.product(b.minus());
        let next = node_ids.len();
        let p = *node_ids.entry(plus).or_insert(next);
        let next = node_ids.len();
        let m = *node_ids.entry(minus).or_insert(next);
        endpoints.push((m, p));
    }
    let n_nodes = node_ids.len();

    // Forest/non-forest split in column order.
    let mut uf = UnionFind::new(n_nodes);
    let mut tree_cols: Vec<usize> = Vec::new();
    let mut cycle_cols: Vec<usize> = Vec::new();
    for (c, &(m, p)) in endpoints.iter().enumerate() {
        if uf.union(m, p) {
            tree_cols.push(c);
        } else {
            cycle_cols.push(c);
        }
    }

    // Root each tree and record parent edges with their orientation.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_nodes]; // (neighbor, col)
    for &c in &tree_cols {
        let (m, p) = endpoints[c];
        adj[m].push((p, c));
        adj[p].push((m, c));
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n_nodes]; // (parent node, col)
    let mut depth: Vec<usize> = vec![0; n_nodes];
    let mut visited = vec![false; n_nodes];
    for start in 0..n_nodes {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, c) in &adj[v] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some((v, c));
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    // Walking a step from node a to node b along column c contributes
    // +w_c if b is the plus end, −w_c otherwise.
    let step_sign = |a: usize, b: usize, c: usize| -> i64 {
        let (m, p) = endpoints[c];
        debug_assert!((a, b) == (m, p) || (a, b) == (p, m));
        if b == p {
            1
        } else {
            -1
        }
    };

    let mut basis: Vec<SparseVec> = Vec::with_capacity(cycle_cols.len());
    for &c in &cycle_cols {
        let (mn, pl) = endpoints[c];
        // 0 = w_c + Σ steps along the tree path plus → minus.
        let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
        coeffs.insert(c, 1);
        let (mut u, mut v) = (pl, mn);
        // Walk both endpoints to their LCA, accumulating step signs. The
        // u-side walks in path direction; the v-side steps are traversed
        // against path direction, so their signs flip.
        while depth[u] > depth[v] {
            let (pu, cu) = parent[u].unwrap();
            *coeffs.entry(cu).or_insert(0) += step_sign(u, pu, cu);
            u = pu;
        }
        while depth[v] > depth[u] {
            let (pv, cv) = parent[v].unwrap();
            *coeffs.entry(cv).or_insert(0) -= step_sign(v, pv, cv);
            v = pv;
        }
        while u != v {
            let (pu, cu) = parent[u].unwrap();
            *coeffs.entry(cu).or_insert(0) += step_sign(u, pu, cu);
            u = pu;
            let (pv, cv) = parent[v].unwrap();
            *coeffs.entry(cv).or_insert(0) -= step_sign(v, pv, cv);
            v = pv;
        }
        basis.push(coeffs.into_iter().filter(|&(_, x)| x != 0).collect());
    }
    Ok(SyzygyLevel { columns, basis })
}

/// Rank of { x_k · s : s in the previous level's basis } inside the
/// current column space.
fn shifted_rank(
    g: &SimpleGraph,
    prev_basis: &[SparseVec],
    prev_columns: &[(usize, Monomial)],
    columns: &[(usize, Monomial)],
) -> Result<usize, ToricError> {
    if prev_basis.is_empty() {
        return Ok(0);
    }
    let col_index: BTreeMap<(usize, &Monomial), usize> = columns
        .iter()
        .enumerate()
        .map(|(idx, (i, a))| ((*i, a), idx))
        .collect();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for s in prev_basis {
        for k in 0..g.edge_count() {
            let mut row = vec![0i64; columns.len()];
            for &(cidx, coeff) in s {
                let (i, a) = &prev_columns[cidx];
                let shifted = a.times_var(k);
                let target = col_index[&(*i, &shifted)];
                row[target] += coeff;
            }
            if row.iter().any(|&v| v != 0) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(0);
    }
    let m = RationalMatrix::from_int_rows(&rows);
    Ok(rank(&m, RankMode::Modular))
}

/// Truncated q-linearity: within the table's bounds, all generators live
/// in degree q and all minimal first syzygies in degree q+1. A table with
/// no generators at all passes vacuously; callers screening for q-linear
/// resolutions must additionally require a nonzero ideal.
pub fn linearity_verdict(table: &BettiTable, q: usize) -> Result<bool, ToricError> {
    if table.q_max < q || table.j_max < q + 2 {
        return Err(ToricError::InsufficientBounds(format!(
            "table bounds ({}, {}) cannot judge {q}-linearity",
            table.q_max, table.j_max
        )));
    }
    let mu_ok = table.mu.iter().all(|(&d, &v)| d == q || v == 0);
    let beta_ok = table.beta2.iter().all(|(&j, &v)| j == q + 1 || v == 0);
    Ok(mu_ok && beta_ok)
}
