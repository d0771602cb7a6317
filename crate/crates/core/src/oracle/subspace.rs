//! Exhaustive generalized-Hamming-weight search over all `r`-dimensional
//! subcodes.
//!
//! Encoding is injective, so `r`-dimensional subcodes correspond one to one
//! with `r`-dimensional subspaces of the message space `F_q^k`. Each of
//! those has exactly one basis in reduced row echelon form: choose pivot
//! columns `p_1 < ... < p_r`, put a 1 at `(i, p_i)`, and fill every entry
//! `(i, j)` with `j > p_i`, `j` not a pivot, freely.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::matrix::{rm_generator_matrix, GeneratorMatrix};
use super::{odometer, Caps};
use crate::dims::{CodeParams, UInt};
use crate::error::{Error, Result};

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> UInt {
    if k > n {
        return UInt::from(0u32);
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceSearch {
    /// `d_r`: the smallest support over all visited subcodes.
    pub min_support: u64,
    /// How many subspaces were visited.
    pub subspaces: u64,
}

/// `d_r(RM(d, m))` by exhaustion.
pub fn min_subspace_support(params: &CodeParams, r: u64, caps: &Caps) -> Result<UInt> {
    Ok(UInt::from(search_subspaces(params, r, caps)?.min_support))
}

/// Visits every `r`-dimensional subcode and records the minimum support.
/// Pivot patterns are processed in parallel; the minimum does not depend on
/// the partition.
pub fn search_subspaces(params: &CodeParams, r: u64, caps: &Caps) -> Result<SubspaceSearch> {
    let k = params.rho().to_u64().unwrap_or(u64::MAX);
    if r < 1 || r > k {
        return Err(Error::RankOutOfRange {
            r: r.to_string(),
            rho: params.rho().to_string(),
        });
    }
    let count = gaussian_binomial(k, r, params.q());
    if count > UInt::from(caps.max_subspaces) {
        return Err(Error::CapExceeded {
            what: "subspace",
            count: count.to_string(),
            cap: caps.max_subspaces.to_string(),
        });
    }
    let g = rm_generator_matrix(params, caps)?;
    let k = g.k();
    let r = r as usize;

    let (min_support, subspaces) = (0..k)
        .combinations(r)
        .par_bridge()
        .map(|pivots| scan_pivot_pattern(&g, &pivots))
        .reduce(|| (u64::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1));

    Ok(SubspaceSearch {
        min_support,
        subspaces,
    })
}

fn scan_pivot_pattern(g: &GeneratorMatrix, pivots: &[usize]) -> (u64, u64) {
    let f = g.field();
    let q = f.order() as u8;
    let n = g.n();
    // Free columns per basis row.
    let free: Vec<Vec<usize>> = pivots
        .iter()
        .map(|&p| (p + 1..g.k()).filter(|j| !pivots.contains(j)).collect())
        .collect();
    let total_free: usize = free.iter().map(Vec::len).sum();

    let mut best = u64::MAX;
    let mut visited = 0u64;
    let mut basis = vec![vec![0u8; n]; pivots.len()];
    for assignment in odometer(q, total_free) {
        let mut values = assignment.iter();
        for (row, (&p, cols)) in basis.iter_mut().zip(pivots.iter().zip(&free)) {
            row.copy_from_slice(&g.rows()[p]);
            for &j in cols {
                let a = *values.next().expect("assignment covers free entries");
                if a == 0 {
                    continue;
                }
                for (x, &gj) in row.iter_mut().zip(&g.rows()[j]) {
                    *x = f.add(*x, f.mul(a, gj));
                }
            }
        }
        let support = (0..n)
            .filter(|&c| basis.iter().any(|row| row[c] != 0))
            .count() as u64;
        best = best.min(support);
        visited += 1;
    }
    (best, visited)
}
