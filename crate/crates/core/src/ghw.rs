//! Generalized Hamming weights of `RM(d, m)`.
//!
//! For `1 <= r <= rho_q(d, m)` write `rho_q(d, m) - r` in its d-th
//! Macaulay representation with respect to `q`. Then the largest number of
//! common zeros of `r` linearly independent reduced polynomials of degree
//! `<= d` is `e_bar_r = sum_i floor(q^{m_i})`, and `d_r = q^m - e_bar_r`.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::dims::{q_pow, CodeParams, UInt};
use crate::error::{Error, Result};
use crate::macaulay::{decompose, MacaulayRep, QParam};

/// Longest hierarchy [`hierarchy`] will materialize.
pub const MAX_HIERARCHY_LEN: u64 = 10_000_000;

/// `(mu_1, ..., mu_m)` with digits in `0..q` and digit sum `<= d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuTuple {
    digits: Vec<u64>,
}

impl MuTuple {
    pub fn new(digits: Vec<u64>, q: u64, d: i64) -> Result<Self> {
        let sum: u128 = digits.iter().map(|&x| x as u128).sum();
        if digits.iter().any(|&x| x >= q) || d < 0 || sum > d as u128 {
            return Err(Error::InvalidMuTuple { digits, q, d });
        }
        Ok(Self { digits })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn m(&self) -> usize {
        self.digits.len()
    }

    /// `sum_i mu_i q^{m-i}`: the digits read as a base-`q` number.
    pub fn value(&self, q: u64) -> UInt {
        self.digits.iter().fold(UInt::zero(), |acc, &x| acc * q + x)
    }
}

impl fmt::Display for MuTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `mu_i = #{j : m_j = m - i}` for `i = 1..=m`. Coefficients equal to `-1`
/// belong to the implicit `mu_{m+1}` and are dropped.
pub fn coeffs_to_mu(rep: &MacaulayRep, m: i64) -> Result<MuTuple> {
    let QParam::Finite(q) = rep.qparam() else {
        return Err(Error::InfiniteModulus);
    };
    if m < 1 {
        return Err(Error::InvalidM { m, min: 1 });
    }
    let top = rep.coeffs().first().copied().unwrap_or(-1);
    if top >= m {
        return Err(Error::CoefficientTooLarge { top, m });
    }
    let mut digits = vec![0u64; m as usize];
    for &c in rep.coeffs().iter().filter(|&&c| c >= 0) {
        digits[(m - 1 - c) as usize] += 1;
    }
    MuTuple::new(digits, q, rep.d() as i64)
}

/// `floor(q^e)` for `e >= -1`.
pub(crate) fn floor_pow(q: u64, e: i64) -> UInt {
    if e < 0 {
        UInt::zero()
    } else {
        q_pow(q, e)
    }
}

fn check_rank(params: &CodeParams, r: &UInt) -> Result<UInt> {
    let rho = params.rho();
    if r.is_zero() || *r > rho {
        return Err(Error::RankOutOfRange {
            r: r.to_string(),
            rho: rho.to_string(),
        });
    }
    Ok(rho)
}

/// Representation of `rho_q(d, m) - r` used for rank `r`.
pub fn rank_representation(params: &CodeParams, r: impl Into<UInt>) -> Result<MacaulayRep> {
    let r = r.into();
    let rho = check_rank(params, &r)?;
    decompose(&(rho - r), params.d(), QParam::Finite(params.q()))
}

/// Maximum number of common zeros of `r` independent reduced polynomials of
/// degree `<= d` in `m` variables.
pub fn e_bar(params: &CodeParams, r: impl Into<UInt>) -> Result<UInt> {
    let rep = rank_representation(params, r)?;
    Ok(rep.coeffs().iter().map(|&e| floor_pow(params.q(), e)).sum())
}

/// The r-th generalized Hamming weight `d_r(RM(d, m)) = q^m - e_bar_r`.
pub fn ghw(params: &CodeParams, r: impl Into<UInt>) -> Result<UInt> {
    Ok(params.length() - e_bar(params, r)?)
}

/// The full weight hierarchy `(d_1, ..., d_k)`, `k = rho_q(d, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightHierarchy {
    params: CodeParams,
    weights: Vec<UInt>,
}

impl WeightHierarchy {
    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    /// `weights()[r - 1] = d_r`.
    pub fn weights(&self) -> &[UInt] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] < w[1])
    }
}

/// Computes every `d_r` independently; ranks are evaluated in parallel and
/// collected in rank order.
pub fn hierarchy(params: &CodeParams) -> Result<WeightHierarchy> {
    let rho = params.rho();
    let k = rho
        .to_u64()
        .filter(|&k| k <= MAX_HIERARCHY_LEN)
        .ok_or_else(|| Error::CapExceeded {
            what: "hierarchy length",
            count: rho.to_string(),
            cap: MAX_HIERARCHY_LEN.to_string(),
        })?;
    let weights = (1..=k)
        .into_par_iter()
        .map(|r| ghw(params, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightHierarchy {
        params: *params,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u64, d: i64, m: i64) -> CodeParams {
        CodeParams::new(q, d, m).unwrap()
    }

    fn u(v: u64) -> UInt {
        UInt::from(v)
    }

    fn rep(coeffs: &[i64], q: u64) -> MacaulayRep {
        MacaulayRep::from_coeffs(coeffs.to_vec(), QParam::Finite(q)).unwrap()
    }

    #[test]
    fn mu_from_coeffs() {
        assert_eq!(
            coeffs_to_mu(&rep(&[2, 0, 0], 4), 3).unwrap().digits(),
            [1, 0, 2]
        );
        assert_eq!(
            coeffs_to_mu(&rep(&[4, 0, -1], 2), 5).unwrap().digits(),
            [1, 0, 0, 0, 1]
        );
        assert_eq!(
            coeffs_to_mu(&rep(&[-1, -1, -1], 2), 4).unwrap().digits(),
            [0; 4]
        );
    }

    #[test]
    fn mu_rejects_large_or_infinite() {
        assert_eq!(
            coeffs_to_mu(&rep(&[4, 0, -1], 2), 4),
            Err(Error::CoefficientTooLarge { top: 4, m: 4 })
        );
        let inf = MacaulayRep::from_coeffs(vec![1, 0], QParam::Infinity).unwrap();
        assert_eq!(coeffs_to_mu(&inf, 3), Err(Error::InfiniteModulus));
    }

    #[test]
    fn mu_tuple_validation() {
        assert!(MuTuple::new(vec![3, 0, 0], 4, 3).is_ok());
        assert!(MuTuple::new(vec![4, 0, 0], 4, 3).is_err());
        assert!(MuTuple::new(vec![3, 1, 0], 4, 3).is_err());
        assert_eq!(MuTuple::new(vec![1, 0, 2], 4, 3).unwrap().value(4), u(18));
        assert_eq!(
            MuTuple::new(vec![1, 0, 2], 4, 3).unwrap().to_string(),
            "(1, 0, 2)"
        );
    }

    #[test]
    fn e_bar_examples() {
        assert_eq!(e_bar(&p(4, 3, 3), 8u32).unwrap(), u(18));
        assert_eq!(e_bar(&p(2, 3, 5), 10u32).unwrap(), u(17));
        assert_eq!(e_bar(&p(4, 3, 3), 1u32).unwrap(), u(48));
        assert_eq!(e_bar(&p(4, 3, 3), 20u32).unwrap(), u(0));
        assert_eq!(e_bar(&p(2, 3, 5), 26u32).unwrap(), u(0));
    }

    #[test]
    fn ghw_examples() {
        assert_eq!(ghw(&p(4, 3, 3), 8u32).unwrap(), u(46));
        assert_eq!(ghw(&p(2, 3, 5), 10u32).unwrap(), u(15));
        assert_eq!(ghw(&p(2, 3, 5), 26u32).unwrap(), u(32));
    }

    #[test]
    fn rank_bounds() {
        let params = p(2, 3, 5);
        for r in [0u32, 27] {
            assert_eq!(
                ghw(&params, r),
                Err(Error::RankOutOfRange {
                    r: r.to_string(),
                    rho: "26".into()
                })
            );
        }
        assert_eq!(
            Error::RankOutOfRange {
                r: "27".into(),
                rho: "26".into()
            }
            .to_string(),
            "r must be in [1, 26]"
        );
    }

    #[test]
    fn hierarchy_examples() {
        let h = hierarchy(&p(2, 2, 3)).unwrap();
        assert_eq!(h.weights(), (2..=8).map(u).collect::<Vec<_>>());
        let h = hierarchy(&p(2, 1, 3)).unwrap();
        assert_eq!(h.weights(), [u(4), u(6), u(7), u(8)]);
        let h = hierarchy(&p(4, 3, 3)).unwrap();
        assert_eq!(h.len(), 20);
        assert_eq!(h.weights()[0], u(16));
        assert_eq!(h.weights()[7], u(46));
        assert!(h.is_strictly_increasing());
    }

    #[test]
    fn big_code_first_weight() {
        // RM_5(3, 30): d_1 = (q - b) q^{m - a - 1} with a = 0, b = 3.
        let params = p(5, 3, 30);
        assert_eq!(ghw(&params, 1u32).unwrap(), u(2) * q_pow(5, 29));
        assert_eq!(ghw(&params, params.rho()).unwrap(), q_pow(5, 30));
    }
}
