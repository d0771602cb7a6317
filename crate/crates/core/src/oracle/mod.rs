//! Brute-force reference computations.
//!
//! Nothing here uses Macaulay representations: dimensions come from
//! counting exponent tuples, `e_bar` from sorting all admissible tuples,
//! and `d_r` from visiting every subcode of an explicit generator matrix.

mod field;
mod matrix;
mod subspace;

pub use field::{build_field, FieldTable, SUPPORTED_ORDERS};
pub use matrix::{rm_generator_matrix, GeneratorMatrix};
pub use subspace::{gaussian_binomial, min_subspace_support, search_subspaces, SubspaceSearch};

use crate::dims::{CodeParams, UInt};
use crate::error::{Error, Result};
use crate::ghw::MuTuple;

/// Size limits for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Tuples visited by counting or enumeration (`q^m`).
    pub max_tuples: u64,
    /// Columns of a generator matrix (`q^m`).
    pub max_points: u64,
    /// Rows of a generator matrix (`rho_q(d, m)`).
    pub max_rows: u64,
    /// Subspaces visited by the subcode search.
    pub max_subspaces: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_tuples: 100_000_000,
            max_points: 1_000_000,
            max_rows: 10_000,
            max_subspaces: 10_000_000,
        }
    }
}

/// All tuples in `{0, ..., q-1}^len`, lexicographically ascending.
pub(crate) fn odometer(q: u8, len: usize) -> impl Iterator<Item = Vec<u8>> {
    let mut next = Some(vec![0u8; len]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..len).rev() {
            if succ[i] + 1 < q {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    })
}

fn check_tuple_cap(q: u64, m: i64, caps: &Caps) -> Result<()> {
    let total = (q as u128).checked_pow(m as u32);
    if total.is_none_or(|t| t > caps.max_tuples as u128) {
        return Err(Error::CapExceeded {
            what: "tuple",
            count: UInt::from(q).pow(m as u32).to_string(),
            cap: caps.max_tuples.to_string(),
        });
    }
    Ok(())
}

/// Number of `alpha` in `{0, ..., q-1}^m` with `sum(alpha) <= d`, counted
/// one by one.
pub fn count_reduced_monomials(q: u64, d: i64, m: i64, caps: &Caps) -> Result<UInt> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    if q > u8::MAX as u64 {
        return Err(Error::UnsupportedField(q));
    }
    if m < 0 {
        return Err(Error::InvalidM { m, min: 0 });
    }
    check_tuple_cap(q, m, caps)?;
    let count = odometer(q as u8, m as usize)
        .filter(|a| a.iter().map(|&x| x as i64).sum::<i64>() <= d)
        .count();
    Ok(UInt::from(count))
}

/// Every admissible tuple, sorted in descending lexicographic order.
pub fn enumerate_tuples(params: &CodeParams, caps: &Caps) -> Result<Vec<MuTuple>> {
    let (q, d, m) = (params.q(), params.d(), params.m());
    if q > u8::MAX as u64 {
        return Err(Error::UnsupportedField(q));
    }
    check_tuple_cap(q, m, caps)?;
    let mut tuples: Vec<MuTuple> = odometer(q as u8, m as usize)
        .map(|a| a.into_iter().map(u64::from).collect::<Vec<_>>())
        .filter(|a| a.iter().sum::<u64>() <= d as u64)
        .map(|a| MuTuple::new(a, q, d).expect("filtered tuple is admissible"))
        .collect();
    tuples.sort_unstable_by(|a, b| b.cmp(a));
    Ok(tuples)
}

/// `e_bar_r` read off the r-th tuple in descending lexicographic order.
pub fn e_bar_lex(params: &CodeParams, r: u64, caps: &Caps) -> Result<UInt> {
    let tuples = enumerate_tuples(params, caps)?;
    if r < 1 || r > tuples.len() as u64 {
        return Err(Error::RankOutOfRange {
            r: r.to_string(),
            rho: tuples.len().to_string(),
        });
    }
    Ok(tuples[(r - 1) as usize].value(params.q()))
}

/// `e_bar_r` for every rank at once, from a single enumeration.
pub fn e_bar_lex_all(params: &CodeParams, caps: &Caps) -> Result<Vec<UInt>> {
    Ok(enumerate_tuples(params, caps)?
        .iter()
        .map(|t| t.value(params.q()))
        .collect())
}
