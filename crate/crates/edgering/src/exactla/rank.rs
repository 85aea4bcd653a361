//! Matrix rank over ℚ: fraction-free exact elimination, and a two-prime
//! modular fast path that falls back to the exact computation whenever the
//! primes disagree (or a denominator vanishes modulo one of them).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::RationalMatrix;

/// Fixed ~30-bit primes; fixed so repeated runs are deterministic.
const MODULAR_PRIMES: [u64; 2] = [1_000_000_007, 998_244_353];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    Exact,
    Modular,
}

/// Rank of a rational matrix.
///
/// `Modular` computes the rank over two distinct prime fields and returns
/// the common value; any disagreement (a symptom of an unlucky prime)
/// triggers the exact fraction-free elimination instead, so the result is
/// always the rank over ℚ up to the usual two-prime confidence, and exact
/// whenever it matters.
pub fn rank(m: &RationalMatrix, mode: RankMode) -> usize {
    match mode {
        RankMode::Exact => exact_rank(m),
        RankMode::Modular => {
            let r0 = modular_rank(m, MODULAR_PRIMES[0]);
            let r1 = modular_rank(m, MODULAR_PRIMES[1]);
            match (r0, r1) {
                (Some(a), Some(b)) if a == b => a,
                _ => exact_rank(m),
            }
        }
    }
}

/// Bareiss fraction-free elimination on the integer matrix obtained by
/// clearing denominators row by row (row scaling preserves rank).
fn exact_rank(m: &RationalMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let lcm = m.row(i).iter().fold(BigInt::from(1), |acc, v| {
                num_integer::lcm(acc, v.denom().clone())
            });
            m.row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();

    let rows = m.rows();
    let cols = m.cols();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for i in rank + 1..rows {
            let factor = std::mem::replace(&mut a[i][col], BigInt::zero());
            for j in col + 1..cols {
                let num = &pivot * &a[i][j] - &factor * &a[rank][j];
                // Bareiss: entries stay minors of the input, so this division
                // is exact.
                a[i][j] = num / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over F_p; `None` when some denominator vanishes mod p.
fn modular_rank(m: &RationalMatrix, p: u64) -> Option<usize> {
    let reduce = |v: &BigInt| -> u64 {
        let r = v % BigInt::from(p);
        let r = if r.is_negative() {
            r + BigInt::from(p)
        } else {
            r
        };
        u64::try_from(r).expect("residue fits u64")
    };
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for v in m.row(i) {
            let den = reduce(v.denom());
            if den == 0 {
                return None;
            }
            let num = reduce(v.numer());
            row.push(mul_mod(num, inv_mod(den, p), p));
        }
        a.push(row);
    }

    let rows = m.rows();
    let cols = m.cols();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let inv = inv_mod(a[rank][col], p);
        for i in rank + 1..rows {
            if a[i][col] == 0 {
                continue;
            }
            let factor = mul_mod(a[i][col], inv, p);
            for j in col..cols {
                let sub = mul_mod(factor, a[rank][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: p is prime and a ≠ 0 mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}
