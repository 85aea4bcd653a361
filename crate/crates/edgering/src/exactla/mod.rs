//! Exact arithmetic kernel: big rationals, rational simplex, matrix ranks.
//!
//! Everything in this module is exact; there is no floating point anywhere.
//! Feasibility witnesses returned by the LP entry points re-substitute into
//! their constraint systems with zero residual, and ranks are ranks over ℚ
//! (with an optional two-prime modular fast path that falls back to exact
//! elimination on disagreement).

mod rank;
mod simplex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use rank::{rank, RankMode};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLaError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("objective is unbounded")]
    Unbounded,
    #[error("simplex pivot ceiling exceeded (anti-cycling invariant violated)")]
    PivotCeiling,
    #[error("internal arithmetic invariant violated: {0}")]
    Internal(String),
}

/// Dense matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    /// Zero matrix of the given shape. Both dimensions must be positive.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        assert!(!rows.is_empty(), "matrix dimensions must be positive");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix dimensions must be positive");
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        RationalMatrix {
            rows: 0,
            cols,
            data,
        }
        .with_rows_from_data()
    }

    fn with_rows_from_data(mut self) -> Self {
        self.rows = self.data.len() / self.cols;
        self
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[Rat]) -> Result<Vec<Rat>, ExactLaError> {
        if x.len() != self.cols {
            return Err(ExactLaError::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }
}

/// Status of a linear-programming call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Feasible,
    Infeasible,
    Optimal,
}

/// Outcome of an LP call. A returned witness satisfies all constraints
/// exactly when substituted; for infeasible systems `objective` carries the
/// (strictly positive) phase-1 optimum as a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub witness: Option<Vec<Rat>>,
    pub objective: Option<Rat>,
}

/// Decides `∃x ≥ 0 with Ax = b` by phase-1 simplex with Bland's rule.
///
/// Feasible systems return an exact witness, re-verified by substitution
/// before being handed back. Infeasible systems report the positive phase-1
/// optimum as the certificate.
pub fn lp_feasible(a: &RationalMatrix, b: &[Rat]) -> Result<LpOutcome, ExactLaError> {
    if b.len() != a.rows() {
        return Err(ExactLaError::DimensionMismatch(format!(
            "matrix has {} rows, rhs has length {}",
            a.rows(),
            b.len()
        )));
    }
    let zero_cost = vec![Rat::zero(); a.cols()];
    match simplex::solve_min(a, b, &zero_cost)? {
        simplex::SolveResult::Optimal { x, .. } => {
            let residual_ok = a.mul_vec(&x)?.iter().zip(b).all(|(lhs, rhs)| lhs == rhs);
            if !residual_ok {
                return Err(ExactLaError::Internal(
                    "feasible witness failed exact re-substitution".into(),
                ));
            }
            Ok(LpOutcome {
                status: LpStatus::Feasible,
                witness: Some(x),
                objective: None,
            })
        }
        simplex::SolveResult::Infeasible { phase1_opt } => Ok(LpOutcome {
            status: LpStatus::Infeasible,
            witness: None,
            objective: Some(phase1_opt),
        }),
        simplex::SolveResult::Unbounded => Err(ExactLaError::Unbounded),
    }
}

/// Maximizes `ε ≥ 0` subject to `Ax = b, x ≥ ε·1`.
///
/// The optimum `ε* > 0` exactly when `b` admits an all-positive preimage,
/// which is how relative-interior membership is certified. A system with
/// no nonnegative solution at all reports `Infeasible`; `Err(Unbounded)`
/// means ε can grow without limit.
pub fn lp_max_min_coordinate(a: &RationalMatrix, b: &[Rat]) -> Result<LpOutcome, ExactLaError> {
    if b.len() != a.rows() {
        return Err(ExactLaError::DimensionMismatch(format!(
            "matrix has {} rows, rhs has length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    // Substitute x = μ + ε·1 with μ ≥ 0, ε ≥ 0: columns [A | A·1],
    // objective min −ε.
    let mut ext = RationalMatrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        let mut row_sum = Rat::zero();
        for j in 0..n {
            row_sum += a.get(i, j);
            ext.set(i, j, a.get(i, j).clone());
        }
        ext.set(i, n, row_sum);
    }
    let mut cost = vec![Rat::zero(); n + 1];
    cost[n] = -Rat::one();

    match simplex::solve_min(&ext, b, &cost)? {
        simplex::SolveResult::Optimal { x, objective } => {
            let eps = -objective;
            let witness: Vec<Rat> = x[..n].iter().map(|mu| mu + &eps).collect();
            let residual_ok = a
                .mul_vec(&witness)?
                .iter()
                .zip(b)
                .all(|(lhs, rhs)| lhs == rhs);
            if !residual_ok || witness.iter().any(|w| w < &eps) {
                return Err(ExactLaError::Internal(
                    "max-min witness failed exact re-substitution".into(),
                ));
            }
            Ok(LpOutcome {
                status: LpStatus::Optimal,
                witness: Some(witness),
                objective: Some(eps),
            })
        }
        simplex::SolveResult::Infeasible { phase1_opt } => Ok(LpOutcome {
            status: LpStatus::Infeasible,
            witness: None,
            objective: Some(phase1_opt),
        }),
        simplex::SolveResult::Unbounded => Err(ExactLaError::Unbounded),
    }
}

/// True when the rational is strictly positive.
pub fn is_positive(r: &Rat) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests;
