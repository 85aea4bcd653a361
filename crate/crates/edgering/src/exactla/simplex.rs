//! Two-phase primal simplex over exact rationals with Bland's pivoting rule.
//!
//! Bland's rule guarantees termination; the solver also counts pivots
//! against the bound C(rows+cols, rows) on the number of distinct bases
//! and aborts if it is ever reached.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::{ExactLaError, Rat, RationalMatrix};

pub(super) enum SolveResult {
    Optimal { x: Vec<Rat>, objective: Rat },
    Infeasible { phase1_opt: Rat },
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    cost: Vec<Rat>,
    objective: Rat,
    basis: Vec<usize>,
    n_struct: usize,
    pivots: BigUint,
    ceiling: BigUint,
}

impl Tableau {
    fn pivot(&mut self, p: usize, q: usize) -> Result<(), ExactLaError> {
        self.pivots += 1u32;
        if self.pivots > self.ceiling {
            return Err(ExactLaError::PivotCeiling);
        }
        let inv = self.rows[p][q].recip();
        for v in self.rows[p].iter_mut() {
            *v *= &inv;
        }
        self.rhs[p] *= &inv;
        let pivot_row = self.rows[p].clone();
        let pivot_rhs = self.rhs[p].clone();
        for i in 0..self.rows.len() {
            if i == p || self.rows[i][q].is_zero() {
                continue;
            }
            let factor = self.rows[i][q].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !self.cost[q].is_zero() {
            let factor = self.cost[q].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.objective -= &factor * &pivot_rhs;
        }
        self.basis[p] = q;
        Ok(())
    }

    /// Runs Bland-rule pivoting to optimality over columns `0..col_limit`.
    /// Returns false when an unbounded direction is detected.
    fn optimize(&mut self, col_limit: usize) -> Result<bool, ExactLaError> {
        loop {
            let entering = (0..col_limit).find(|&j| self.cost[j].is_negative());
            let Some(q) = entering else {
                return Ok(true);
            };
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][q].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][q];
                let better = match &leaving {
                    None => true,
                    Some((best_i, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_i])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((p, _)) = leaving else {
                return Ok(false);
            };
            self.pivot(p, q)?;
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Minimizes `c·x` over `Ax = b, x ≥ 0`.
pub(super) fn solve_min(
    a: &RationalMatrix,
    b: &[Rat],
    c: &[Rat],
) -> Result<SolveResult, ExactLaError> {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(c.len(), n);

    // Artificial columns form the starting basis; rows are flipped so the
    // right-hand side is nonnegative.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = a.row(i).to_vec();
        if flip {
            for v in row.iter_mut() {
                *v = -std::mem::take(v);
            }
        }
        row.extend((0..m).map(|j| if j == i { Rat::one() } else { Rat::zero() }));
        rows.push(row);
        rhs.push(if flip { -b[i].clone() } else { b[i].clone() });
    }

    // Phase-1 cost: minimize the sum of artificials. With the artificials
    // basic, the reduced cost of column j is −Σ_i T[i][j].
    let mut cost = vec![Rat::zero(); n + m];
    let mut objective = Rat::zero();
    for j in 0..n {
        let col_sum = rows.iter().fold(Rat::zero(), |acc, r| acc + &r[j]);
        cost[j] = -col_sum;
    }
    for v in &rhs {
        objective -= v;
    }

    let mut t = Tableau {
        rows,
        rhs,
        cost,
        objective,
        basis: (n..n + m).collect(),
        n_struct: n,
        pivots: BigUint::zero(),
        ceiling: binomial(n + 2 * m, m),
    };

    if !t.optimize(n + m)? {
        return Err(ExactLaError::Internal(
            "phase-1 objective is bounded below by zero".into(),
        ));
    }
    // objective currently holds −(phase-1 value).
    let phase1_opt = -t.objective.clone();
    if phase1_opt.is_positive() {
        return Ok(SolveResult::Infeasible { phase1_opt });
    }

    // Drive leftover artificials out of the (degenerate) basis; a row with
    // no structural entry to pivot on is redundant and dropped.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= t.n_struct {
            match (0..t.n_struct).find(|&j| !t.rows[i][j].is_zero()) {
                Some(q) => t.pivot(i, q)?,
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in t.rows.iter_mut() {
        row.truncate(t.n_struct);
    }

    // Phase 2: rebuild the reduced-cost row from the real objective. The
    // objective cell holds the negated objective value so the uniform
    // pivot update applies to the cost row unchanged.
    t.cost = c.to_vec();
    t.objective = Rat::zero();
    for i in 0..t.rows.len() {
        let cb = c[t.basis[i]].clone();
        if cb.is_zero() {
            continue;
        }
        let row = t.rows[i].clone();
        for (v, rv) in t.cost.iter_mut().zip(&row) {
            *v -= &cb * rv;
        }
        t.objective -= &cb * &t.rhs[i];
    }

    if !t.optimize(t.n_struct)? {
        return Ok(SolveResult::Unbounded);
    }

    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        x[bv] = t.rhs[i].clone();
    }
    Ok(SolveResult::Optimal {
        x,
        objective: -t.objective.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn minimizes_simple_objective() {
        // min −x1 − x2 s.t. x1 + x2 + s = 1 → optimum −1.
        let a = RationalMatrix::from_int_rows(&[vec![1, 1, 1]]);
        let b = vec![rat(1)];
        let c = vec![rat(-1), rat(-1), rat(0)];
        match solve_min(&a, &b, &c).unwrap() {
            SolveResult::Optimal { objective, .. } => assert_eq!(objective, rat(-1)),
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn detects_unbounded() {
        // min −x1 s.t. x1 − x2 = 0: x1 = x2 → ∞.
        let a = RationalMatrix::from_int_rows(&[vec![1, -1]]);
        let b = vec![rat(0)];
        let c = vec![rat(-1), rat(0)];
        assert!(matches!(
            solve_min(&a, &b, &c).unwrap(),
            SolveResult::Unbounded
        ));
    }

    #[test]
    fn drops_redundant_rows() {
        // Duplicated constraint must not confuse phase 2.
        let a = RationalMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        let b = vec![rat(2), rat(2)];
        let c = vec![rat(1), rat(0)];
        match solve_min(&a, &b, &c).unwrap() {
            SolveResult::Optimal { objective, x } => {
                assert_eq!(objective, rat(0));
                assert_eq!(x, vec![rat(0), rat(2)]);
            }
            _ => panic!("expected optimum"),
        }
    }
}
