//! Dilation lattice-point counting.
//!
//! Candidates are enumerated over the shell Σx = 2t (per component block:
//! shell sum s, per-coordinate cap ⌊s/2⌋, bipartite side balance, stable-set
//! cuts) and membership of each survivor is decided by exact LP
//! feasibility. The pruning rules are necessary conditions only, so they
//! never change a count. Polytopes whose generating edge set is
//! disconnected are counted blockwise: the total is the convolution of the
//! per-block shell counts over all splits of the dilation budget.
//! Projected polytopes without edge structure use a generic bounding-box
//! scan with the same LP decider.

use rayon::prelude::*;

use super::{ComponentBlock, EdgePolytope, LatticePoint, PolytopeError};
use crate::exactla::{self, rat, LpStatus, Rat, RationalMatrix};

impl EdgePolytope {
    /// Exact |tP ∩ ℤᴺ|; memoized per polytope, write-once and
    /// deterministic regardless of evaluation order.
    pub fn count_lattice_points(&self, t: u32) -> Result<u64, PolytopeError> {
        if let Some(&c) = self.count_memo.lock().unwrap().get(&t) {
            return Ok(c);
        }
        let c = self.count_uncached(t)?;
        self.count_memo.lock().unwrap().insert(t, c);
        Ok(c)
    }

    /// L(0)..L(tmax), evaluating the dilations in parallel.
    pub(crate) fn counts_up_to(&self, tmax: u32) -> Result<Vec<u64>, PolytopeError> {
        (0..=tmax)
            .into_par_iter()
            .map(|t| self.count_lattice_points(t))
            .collect()
    }

    fn count_uncached(&self, t: u32) -> Result<u64, PolytopeError> {
        if t == 0 || self.ambient_dim == 0 {
            return Ok(1);
        }
        match self.blocks.len() {
            0 => self.generic_count(t),
            1 => self.block_shell_count(0, 2 * i64::from(t)),
            _ => self.convolution_count(t),
        }
    }

    /// Number of integer points with coordinate sum `s` on the block's
    /// coordinates that the block cone accepts (dilation budget s/2).
    fn block_shell_count(&self, bi: usize, s: i64) -> Result<u64, PolytopeError> {
        if let Some(&c) = self.shell_memo.lock().unwrap().get(&(bi, s)) {
            return Ok(c);
        }
        let c = self.block_shell_uncached(bi, s)?;
        self.shell_memo.lock().unwrap().insert((bi, s), c);
        Ok(c)
    }

    fn block_shell_uncached(&self, bi: usize, s: i64) -> Result<u64, PolytopeError> {
        let block = &self.blocks[bi];
        if s == 0 {
            return Ok(1);
        }
        if block.bipartition.is_some() && s % 2 != 0 {
            return Ok(0);
        }
        let k = block.coords.len();
        let cap = s / 2;
        let caps = vec![cap; k];
        let lows = vec![0i64; k];
        let sides = block_sides(block);
        let side_targets = block.bipartition.as_ref().map(|_| (s / 2, s / 2));
        let cuts = local_cuts(block);

        let mut survivors: Vec<Vec<i64>> = Vec::new();
        enumerate_shell(
            &caps,
            &lows,
            s,
            s,
            sides.as_deref(),
            side_targets,
            &mut |y| {
                if passes_cuts(y, &cuts) {
                    survivors.push(y.to_vec());
                }
            },
        );

        let system = self.block_system(block);
        let count = survivors
            .par_iter()
            .map(|y| self.block_member(&system, y))
            .try_fold(|| 0u64, |acc, r| r.map(|m| acc + u64::from(m)))
            .try_reduce(|| 0u64, |a, b| Ok(a + b))?;
        Ok(count)
    }

    /// Incidence system of one block: rows = block coordinates, columns =
    /// block generators. No dilation budget row is needed: on the shell
    /// Σy = s every nonnegative solution automatically has
    /// total weight s/2 because each generator column sums to 2.
    fn block_system(&self, block: &ComponentBlock) -> RationalMatrix {
        let mut a = RationalMatrix::zeros(block.coords.len(), block.gens.len());
        for (col, &gi) in block.gens.iter().enumerate() {
            let gen = &self.generators[gi];
            for (row, &coord) in block.coords.iter().enumerate() {
                if gen[coord] != 0 {
                    a.set(row, col, rat(gen[coord]));
                }
            }
        }
        a
    }

    fn block_member(&self, system: &RationalMatrix, y: &[i64]) -> Result<bool, PolytopeError> {
        let b: Vec<Rat> = y.iter().map(|&v| rat(v)).collect();
        Ok(exactla::lp_feasible(system, &b)?.status == LpStatus::Feasible)
    }

    /// Convolution over blocks: split the shell 2t among the blocks in
    /// every way and multiply the per-block shell counts.
    fn convolution_count(&self, t: u32) -> Result<u64, PolytopeError> {
        let total = 2 * i64::from(t);
        let nblocks = self.blocks.len();
        fn go(
            p: &EdgePolytope,
            bi: usize,
            nblocks: usize,
            remaining: i64,
        ) -> Result<u64, PolytopeError> {
            if bi == nblocks - 1 {
                return p.block_shell_count(bi, remaining);
            }
            let mut acc = 0u64;
            for s in 0..=remaining {
                let here = p.block_shell_count(bi, s)?;
                if here == 0 {
                    continue;
                }
                acc += here * go(p, bi + 1, nblocks, remaining - s)?;
            }
            Ok(acc)
        }
        go(self, 0, nblocks, total)
    }

    /// Generic path for polytopes without edge structure: scan the integer
    /// bounding box of tP, restrict to the coordinate-sum range, and let
    /// the LP decide each candidate.
    fn generic_count(&self, t: u32) -> Result<u64, PolytopeError> {
        let (caps, lows, total_lo, total_hi) = self.generic_bounds(t, false);
        let mut survivors: Vec<Vec<i64>> = Vec::new();
        enumerate_shell(&caps, &lows, total_lo, total_hi, None, None, &mut |y| {
            survivors.push(y.to_vec())
        });
        let count = survivors
            .par_iter()
            .map(|y| self.contains(t, y))
            .try_fold(|| 0u64, |acc, r| r.map(|m| acc + u64::from(m)))
            .try_reduce(|| 0u64, |a, b| Ok(a + b))?;
        Ok(count)
    }

    /// Per-coordinate and coordinate-sum bounds for candidates of tP.
    /// With `interior` set, coordinates hit by some generator get a lower
    /// bound of 1 (every generator must carry positive weight).
    fn generic_bounds(&self, t: u32, interior: bool) -> (Vec<i64>, Vec<i64>, i64, i64) {
        let t = i64::from(t);
        let m = self.ambient_dim;
        let mut caps = Vec::with_capacity(m);
        let mut lows = Vec::with_capacity(m);
        for i in 0..m {
            let min_g = self.generators.iter().map(|g| g[i]).min().unwrap_or(0);
            let max_g = self.generators.iter().map(|g| g[i]).max().unwrap_or(0);
            caps.push(t * max_g);
            let mut lo = t * min_g;
            if interior && min_g >= 0 && max_g > 0 {
                lo = lo.max(1);
            }
            lows.push(lo);
        }
        let min_sum = self
            .generators
            .iter()
            .map(|g| g.iter().sum::<i64>())
            .min()
            .unwrap_or(0);
        let max_sum = self
            .generators
            .iter()
            .map(|g| g.iter().sum::<i64>())
            .max()
            .unwrap_or(0);
        (caps, lows, t * min_sum, t * max_sum)
    }

    /// First lattice point in the relative interior of tP in enumeration
    /// order, if any.
    pub(crate) fn find_interior_point(
        &self,
        t: u32,
    ) -> Result<Option<LatticePoint>, PolytopeError> {
        if self.ambient_dim == 0 {
            return Ok(Some(Vec::new()));
        }
        if self.blocks.is_empty() {
            let (caps, lows, total_lo, total_hi) = self.generic_bounds(t, true);
            let mut candidates: Vec<Vec<i64>> = Vec::new();
            enumerate_shell(&caps, &lows, total_lo, total_hi, None, None, &mut |y| {
                candidates.push(y.to_vec())
            });
            for y in candidates {
                if self.relint_contains(t, &y)? {
                    return Ok(Some(y));
                }
            }
            return Ok(None);
        }

        // Edge-structured: interior points have every touched coordinate
        // ≥ 1 and ≤ t, per-block bipartite balance, and satisfy the
        // stable-set cuts; untouched coordinates are 0.
        let positions: Vec<usize> = self
            .blocks
            .iter()
            .flat_map(|b| b.coords.iter().copied())
            .collect();
        let k = positions.len();
        let caps = vec![i64::from(t); k];
        let lows = vec![1i64; k];
        let total = 2 * i64::from(t);
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        enumerate_shell(&caps, &lows, total, total, None, None, &mut |y| {
            candidates.push(y.to_vec())
        });
        let pos_of_coord = |c: usize| positions.iter().position(|&p| p == c).unwrap();
        for y in candidates {
            let mut ok = true;
            for block in &self.blocks {
                if let Some((u_side, v_side)) = &block.bipartition {
                    let su: i64 = u_side.iter().map(|&c| y[pos_of_coord(c)]).sum();
                    let sv: i64 = v_side.iter().map(|&c| y[pos_of_coord(c)]).sum();
                    if su != sv {
                        ok = false;
                        break;
                    }
                }
                for (tset, nset) in &block.stable_cuts {
                    let st: i64 = tset.iter().map(|&c| y[pos_of_coord(c)]).sum();
                    let sn: i64 = nset.iter().map(|&c| y[pos_of_coord(c)]).sum();
                    if st > sn {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    break;
                }
            }
            if !ok {
                continue;
            }
            let mut x = vec![0i64; self.ambient_dim];
            for (i, &coord) in positions.iter().enumerate() {
                x[coord] = y[i];
            }
            if self.relint_contains(t, &x)? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

fn block_sides(block: &ComponentBlock) -> Option<Vec<u8>> {
    block.bipartition.as_ref().map(|(u_side, _)| {
        block
            .coords
            .iter()
            .map(|c| u8::from(!u_side.contains(c)))
            .collect()
    })
}

/// Stable-set cuts translated to local candidate positions.
fn local_cuts(block: &ComponentBlock) -> Vec<(Vec<usize>, Vec<usize>)> {
    let local = |coords: &[usize]| -> Vec<usize> {
        coords
            .iter()
            .map(|c| block.coords.binary_search(c).unwrap())
            .collect()
    };
    block
        .stable_cuts
        .iter()
        .map(|(t, nt)| (local(t), local(nt)))
        .collect()
}

fn passes_cuts(y: &[i64], cuts: &[(Vec<usize>, Vec<usize>)]) -> bool {
    cuts.iter().all(|(tset, nset)| {
        let st: i64 = tset.iter().map(|&i| y[i]).sum();
        let sn: i64 = nset.iter().map(|&i| y[i]).sum();
        st <= sn
    })
}

/// Recursively enumerates integer vectors with per-coordinate ranges
/// `lows[i]..=caps[i]`, coordinate sum within `[total_lo, total_hi]`, and
/// (optionally) fixed per-side sums for a two-coloring of the positions.
/// Deterministic lexicographic order.
fn enumerate_shell(
    caps: &[i64],
    lows: &[i64],
    total_lo: i64,
    total_hi: i64,
    sides: Option<&[u8]>,
    side_targets: Option<(i64, i64)>,
    visit: &mut impl FnMut(&[i64]),
) {
    let k = caps.len();
    // Suffix sums of caps and lows for prefix feasibility.
    let mut suffix_cap = vec![0i64; k + 1];
    let mut suffix_low = vec![0i64; k + 1];
    for i in (0..k).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + caps[i];
        suffix_low[i] = suffix_low[i + 1] + lows[i];
    }
    // Per-side suffix caps for the balanced case.
    let (mut suffix_cap_u, mut suffix_cap_v) = (vec![0i64; k + 1], vec![0i64; k + 1]);
    if let Some(s) = sides {
        for i in (0..k).rev() {
            suffix_cap_u[i] = suffix_cap_u[i + 1] + if s[i] == 0 { caps[i] } else { 0 };
            suffix_cap_v[i] = suffix_cap_v[i + 1] + if s[i] == 1 { caps[i] } else { 0 };
        }
    }

    let mut current = vec![0i64; k];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        k: usize,
        sum: i64,
        side_sums: (i64, i64),
        caps: &[i64],
        lows: &[i64],
        total_lo: i64,
        total_hi: i64,
        sides: Option<&[u8]>,
        side_targets: Option<(i64, i64)>,
        suffix_cap: &[i64],
        suffix_low: &[i64],
        suffix_cap_u: &[i64],
        suffix_cap_v: &[i64],
        current: &mut Vec<i64>,
        visit: &mut impl FnMut(&[i64]),
    ) {
        if sum + suffix_cap[i] < total_lo || sum + suffix_low[i] > total_hi {
            return;
        }
        if let (Some(_), Some((tu, tv))) = (sides, side_targets) {
            if side_sums.0 > tu
                || side_sums.1 > tv
                || side_sums.0 + suffix_cap_u[i] < tu
                || side_sums.1 + suffix_cap_v[i] < tv
            {
                return;
            }
        }
        if i == k {
            if sum >= total_lo && sum <= total_hi {
                visit(current);
            }
            return;
        }
        for v in lows[i]..=caps[i] {
            current[i] = v;
            let new_sides = match sides {
                Some(s) if s[i] == 0 => (side_sums.0 + v, side_sums.1),
                Some(_) => (side_sums.0, side_sums.1 + v),
                None => side_sums,
            };
            rec(
                i + 1,
                k,
                sum + v,
                new_sides,
                caps,
                lows,
                total_lo,
                total_hi,
                sides,
                side_targets,
                suffix_cap,
                suffix_low,
                suffix_cap_u,
                suffix_cap_v,
                current,
                visit,
            );
        }
        current[i] = 0;
    }
    rec(
        0,
        k,
        0,
        (0, 0),
        caps,
        lows,
        total_lo,
        total_hi,
        sides,
        side_targets,
        &suffix_cap,
        &suffix_low,
        &suffix_cap_u,
        &suffix_cap_v,
        &mut current,
        visit,
    );
}
