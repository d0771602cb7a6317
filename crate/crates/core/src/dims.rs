//! Binomial coefficients and the dimension `rho_q(d, m)` of `RM(d, m)`.
//!
//! `rho_q(d, m)` is the number of reduced monomials (every exponent in
//! `0..q`) in `m` variables of total degree at most `d`. Three independent
//! routes are provided:
//!
//! * [`rho`]: inclusion–exclusion over the number of exponents that would
//!   exceed `q - 1`;
//! * [`rho_recursive`]: the recursion on the degree of the last variable;
//! * [`rho_binomial`]: the plain `C(m + d, d)` valid while `d <= q - 1`.
//!
//! Boundary conventions: `rho = 0` for `d < 0`, `rho = 0` for `m = -1`
//! (any `d`), and `rho = 1` for `m = 0, d >= 0`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer.
pub type UInt = BigUint;

const MAX_Q: u64 = 1 << 32;

/// Largest number of variables accepted by [`CodeParams`].
pub const MAX_M: i64 = u32::MAX as i64;

/// Validated Reed–Muller parameters: `q` a prime power, `m >= 1`,
/// `1 <= d <= m(q - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    q: u64,
    d: i64,
    m: i64,
}

impl CodeParams {
    pub fn new(q: u64, d: i64, m: i64) -> Result<Self> {
        check_prime_power(q)?;
        if m < 1 {
            return Err(Error::InvalidM { m, min: 1 });
        }
        if m > MAX_M {
            return Err(Error::MTooLarge { m, max: MAX_M });
        }
        let max = max_degree(q, m);
        if d < 1 || d > max {
            return Err(Error::InvalidD { q, d, m, max });
        }
        Ok(Self { q, d, m })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Dimension of the code.
    pub fn rho(&self) -> UInt {
        rho_unchecked(self.q, self.d, self.m)
    }

    /// Code length `q^m`.
    pub fn length(&self) -> UInt {
        q_pow(self.q, self.m)
    }

    /// Splits `d = a(q - 1) + b` with `a >= 0` and `1 <= b <= q - 1`.
    pub fn split_degree(&self) -> (i64, i64) {
        let step = (self.q - 1) as i64;
        let a = (self.d - 1) / step;
        (a, self.d - a * step)
    }
}

/// Largest meaningful degree `m(q - 1)`, saturating on absurd inputs.
pub(crate) fn max_degree(q: u64, m: i64) -> i64 {
    i64::try_from(q - 1)
        .ok()
        .and_then(|s| s.checked_mul(m))
        .unwrap_or(i64::MAX)
}

/// `q^e` for `e >= 0`.
pub(crate) fn q_pow(q: u64, e: i64) -> UInt {
    let e = u32::try_from(e).expect("exponent fits in u32");
    BigUint::from(q).pow(e)
}

/// Accepts `q = p^k` with `p` prime, `k >= 1`, `q <= 2^32`.
pub fn check_prime_power(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    if q > MAX_Q {
        return Err(Error::QTooLarge(q));
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    if rest == 1 {
        Ok(())
    } else {
        Err(Error::NotPrimePower(q))
    }
}

pub fn is_prime_power(q: u64) -> bool {
    check_prime_power(q).is_ok()
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return f;
        }
        f += 1;
    }
    n
}

fn binomial_u128(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (n - k + i) is divisible by i at every step.
        acc = acc.checked_mul(n - k + i)? / i;
    }
    Some(acc)
}

fn binomial_big(n: u128, k: u128) -> UInt {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(a, b)` over wide integers, same convention as [`binomial`].
pub(crate) fn binomial_wide(a: i128, b: i128) -> UInt {
    if b < 0 || a < b {
        return UInt::zero();
    }
    let (n, k) = (a as u128, b as u128);
    match binomial_u128(n, k) {
        Some(v) => UInt::from(v),
        None => binomial_big(n, k),
    }
}

/// `C(a, b)` with the convention `C(a, b) = 0` whenever `a < b` or `b < 0`.
pub fn binomial(a: i64, b: i64) -> UInt {
    binomial_wide(a as i128, b as i128)
}

fn binomial_small(a: i128, b: i128) -> Option<u128> {
    if b < 0 || a < b {
        return Some(0);
    }
    binomial_u128(a as u128, b as u128)
}

/// Dimension of `RM(d, m)` over `F_q`.
///
/// Evaluates `sum_{i=0}^{d} sum_{j=0}^{m} (-1)^j C(m, j) C(m - 1 + i - qj, m - 1)`.
/// The sum over `i` is collapsed with the hockey-stick identity into
/// `sum_j (-1)^j C(m, j) C(m + d - qj, m)`. The summand vanishes for
/// `d > m(q - 1)`, so the result saturates at `q^m`.
pub fn rho(q: u64, d: i64, m: i64) -> Result<UInt> {
    check_prime_power(q)?;
    if m < -1 {
        return Err(Error::InvalidM { m, min: -1 });
    }
    Ok(rho_unchecked(q, d, m))
}

pub(crate) fn rho_unchecked(q: u64, d: i64, m: i64) -> UInt {
    if d < 0 || m < 0 {
        return UInt::zero();
    }
    if m == 0 {
        return UInt::one();
    }
    let d = d.min(max_degree(q, m));
    rho_small(q, d, m).unwrap_or_else(|| rho_big(q, d, m))
}

fn rho_small(q: u64, d: i64, m: i64) -> Option<UInt> {
    let (q, d, m) = (q as i128, d as i128, m as i128);
    let mut acc: i128 = 0;
    for j in 0..=m {
        let top = m + d - q * j;
        if top < m {
            break;
        }
        let term = binomial_small(m, j)?.checked_mul(binomial_small(top, m)?)?;
        let term = i128::try_from(term).ok()?;
        acc = if j % 2 == 0 {
            acc.checked_add(term)?
        } else {
            acc.checked_sub(term)?
        };
    }
    Some(UInt::try_from(acc).expect("dimension is nonnegative"))
}

fn rho_big(q: u64, d: i64, m: i64) -> UInt {
    let (q, d, m) = (q as i128, d as i128, m as i128);
    let mut acc = BigInt::zero();
    for j in 0..=m {
        let top = m + d - q * j;
        if top < m {
            break;
        }
        let term = BigInt::from_biguint(Sign::Plus, binomial_wide(m, j) * binomial_wide(top, m));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint().expect("dimension is nonnegative")
}

/// `C(m + d, d)`, the dimension while every monomial of degree `<= d` is
/// already reduced (`0 <= d <= q - 1`).
pub fn rho_binomial(q: u64, d: i64, m: i64) -> Result<UInt> {
    check_prime_power(q)?;
    let max = (q - 1) as i64;
    if !(0..=max).contains(&d) {
        return Err(Error::BinomialOutOfDomain { d, max });
    }
    if m < -1 {
        return Err(Error::InvalidM { m, min: -1 });
    }
    if m == -1 {
        return Ok(UInt::zero());
    }
    Ok(binomial_wide(m as i128 + d as i128, d as i128))
}

/// Dimension via `rho_q(d, m) = sum_{i=0}^{min(d, q-1)} rho_q(d - i, m - 1)`,
/// built bottom-up from the `m = 0` row. Runs in `O(d * m * q)` additions.
pub fn rho_recursive(q: u64, d: i64, m: i64) -> Result<UInt> {
    check_prime_power(q)?;
    if m < -1 {
        return Err(Error::InvalidM { m, min: -1 });
    }
    if d < 0 || m == -1 {
        return Ok(UInt::zero());
    }
    let width = d as usize + 1;
    let span = (q - 1).min(d as u64) as usize;
    let mut row = vec![UInt::one(); width];
    for _ in 0..m {
        let next = (0..width)
            .map(|top| {
                (0..=span.min(top))
                    .map(|i| &row[top - i])
                    .fold(UInt::zero(), |acc, v| acc + v)
            })
            .collect();
        row = next;
    }
    Ok(row.pop().expect("row is nonempty"))
}
