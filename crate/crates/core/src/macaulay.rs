//! d-th Macaulay representations with respect to `q`.
//!
//! Every `N >= 0` has a unique expansion `N = sum_{i=1}^{d} rho_q(i, m_i)`
//! with `-1 <= m_1 <= ... <= m_d` such that, for `1 <= i <= d - q + 1`,
//! either `m_{i+q-1} > m_i` or `m_{i+q-1} = m_i = -1`. With `q = ∞` the
//! terms become `C(m_i + i, i)` and the spacing condition disappears; this
//! is the classical Macaulay representation written with `m_i = s_i - i`.
//!
//! Coefficients are stored highest degree first, `(m_d, ..., m_1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::dims::{binomial_wide, check_prime_power, rho_unchecked, UInt};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QParam {
    Finite(u64),
    Infinity,
}

impl QParam {
    pub fn finite(q: u64) -> Result<Self> {
        check_prime_power(q)?;
        Ok(QParam::Finite(q))
    }

    /// `rho_q(i, m)` for finite `q`, `C(m + i, i)` for `q = ∞`.
    pub fn term(&self, i: i64, m: i64) -> UInt {
        match *self {
            QParam::Finite(q) => rho_unchecked(q, i, m),
            QParam::Infinity if m < 0 => UInt::zero(),
            QParam::Infinity => binomial_wide(m as i128 + i as i128, i as i128),
        }
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParam::Finite(q) => write!(f, "{q}"),
            QParam::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for QParam {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(QParam::Infinity),
            t => {
                let q: u64 = t
                    .parse()
                    .map_err(|_| format!("expected a prime power or \"inf\", got {t:?}"))?;
                QParam::finite(q).map_err(|e| e.to_string())
            }
        }
    }
}

/// A coefficient tuple `(m_d, ..., m_1)` together with the integer it
/// represents. Always satisfies the representation conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacaulayRep {
    qparam: QParam,
    coeffs: Vec<i64>,
    n: UInt,
}

impl MacaulayRep {
    /// Builds a representation from explicit coefficients, rejecting tuples
    /// that violate the ordering or spacing conditions.
    pub fn from_coeffs(coeffs: Vec<i64>, qparam: QParam) -> Result<Self> {
        let n = recompose(&coeffs, qparam)?;
        Ok(Self { qparam, coeffs, n })
    }

    pub fn qparam(&self) -> QParam {
        self.qparam
    }

    pub fn d(&self) -> usize {
        self.coeffs.len()
    }

    /// `(m_d, ..., m_1)`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn n(&self) -> &UInt {
        &self.n
    }

    /// Per-degree contributions `rho_q(i, m_i)`, highest degree first.
    pub fn terms(&self) -> Vec<UInt> {
        terms(&self.coeffs, self.qparam).collect()
    }

    /// Classical tops `s_i = m_i + i`, highest degree first.
    pub fn classical_tops(&self) -> Vec<i64> {
        let d = self.coeffs.len() as i64;
        self.coeffs
            .iter()
            .zip((1..=d).rev())
            .map(|(m, i)| m + i)
            .collect()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

fn terms(coeffs: &[i64], qparam: QParam) -> impl Iterator<Item = UInt> + '_ {
    let d = coeffs.len() as i64;
    coeffs
        .iter()
        .zip((1..=d).rev())
        .map(move |(&m, i)| qparam.term(i, m))
}

/// Upper end of the coefficient search; keeps `m + i` far from overflow.
const MAX_COEFF: i64 = i64::MAX / 4;

/// Largest `m >= -1` with `term(i, m) <= target`. `term(i, ·)` is strictly
/// increasing on `m >= -1` for `i >= 1`, so doubling brackets the answer
/// and bisection pins it.
fn bracket(qparam: QParam, i: i64, target: &UInt) -> Result<i64> {
    let mut lo = -1i64;
    let mut hi = 0i64;
    while qparam.term(i, hi) <= *target {
        if hi == MAX_COEFF {
            return Err(Error::CoefficientOverflow);
        }
        lo = hi;
        hi = (2 * hi + 1).min(MAX_COEFF);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if qparam.term(i, mid) <= *target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Greedy decomposition: for `i = d, ..., 1` pick the unique `m_i >= -1`
/// with `term(i, m_i) <= remainder < term(i, m_i + 1)`.
pub fn decompose(n: &UInt, d: i64, qparam: QParam) -> Result<MacaulayRep> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let mut rest = n.clone();
    let mut coeffs = Vec::with_capacity(d as usize);
    for i in (1..=d).rev() {
        let m = bracket(qparam, i, &rest)?;
        rest -= qparam.term(i, m);
        coeffs.push(m);
    }
    debug_assert!(rest.is_zero());
    Ok(MacaulayRep {
        qparam,
        coeffs,
        n: n.clone(),
    })
}

/// `sum_i term(i, m_i)`; rejects tuples that are not valid representations.
pub fn recompose(coeffs: &[i64], qparam: QParam) -> Result<UInt> {
    if coeffs.is_empty() || !validate(coeffs, coeffs.len() as i64, qparam)? {
        return Err(Error::InvalidRepresentation(coeffs.to_vec()));
    }
    Ok(terms(coeffs, qparam).sum())
}

/// Checks the ordering condition `-1 <= m_1 <= ... <= m_d` and, for finite
/// `q`, the spacing condition between entries `q - 1` apart.
pub fn validate(coeffs: &[i64], d: i64, qparam: QParam) -> Result<bool> {
    if d < 0 || coeffs.len() != d as usize {
        return Err(Error::LengthMismatch {
            expected: d.max(0) as usize,
            got: coeffs.len(),
        });
    }
    // Stored as (m_d, ..., m_1): ordering means nonincreasing here.
    let ordered = coeffs.windows(2).all(|w| w[0] >= w[1]) && coeffs.last().is_none_or(|&m| m >= -1);
    if !ordered {
        return Ok(false);
    }
    let QParam::Finite(q) = qparam else {
        return Ok(true);
    };
    let gap = (q - 1) as usize;
    let m_at = |i: usize| coeffs[coeffs.len() - i];
    let spaced = (1..=coeffs.len().saturating_sub(gap)).all(|i| {
        let (lower, upper) = (m_at(i), m_at(i + gap));
        upper > lower || (upper == -1 && lower == -1)
    });
    Ok(spaced)
}

/// Lexicographic comparison of coefficient tuples, which agrees with the
/// numeric order of the represented integers.
pub fn compare(a: &MacaulayRep, b: &MacaulayRep) -> Result<Ordering> {
    if a.d() != b.d() || a.qparam != b.qparam {
        return Err(Error::IncomparableReps);
    }
    Ok(a.coeffs.cmp(&b.coeffs))
}
