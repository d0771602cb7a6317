//! Lookup-table arithmetic for the small fields `F_q`, `q <= 16`.
//!
//! Element `a` is the polynomial `sum_i a_i x^i` over `F_p` where the `a_i`
//! are the base-`p` digits of `a` (lowest digit first). Prime fields are
//! plain integers mod `p`. Extension fields reduce modulo:
//!
//! | q  | modulus        |
//! |----|----------------|
//! | 4  | x^2 + x + 1    |
//! | 8  | x^3 + x + 1    |
//! | 9  | x^2 + 1        |
//! | 16 | x^4 + x + 1    |

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// `(p, modulus coefficients lowest degree first)`.
fn model(q: u64) -> Option<(u8, &'static [u8])> {
    Some(match q {
        2 | 3 | 5 | 7 | 11 | 13 => (q as u8, &[0, 1]),
        4 => (2, &[1, 1, 1]),
        8 => (2, &[1, 1, 0, 1]),
        9 => (3, &[1, 0, 1]),
        16 => (2, &[1, 1, 0, 0, 1]),
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: usize,
    p: u8,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
}

/// Builds and exhaustively checks the field of order `q`.
pub fn build_field(q: u64) -> Result<FieldTable> {
    let (p, modulus) = model(q).ok_or(Error::UnsupportedField(q))?;
    let field = FieldTable::from_model(q as usize, p, modulus);
    if let Err(msg) = field.check_axioms() {
        panic!("GF({q}) tables are not a field: {msg}");
    }
    Ok(field)
}

impl FieldTable {
    fn from_model(q: usize, p: u8, modulus: &[u8]) -> Self {
        let k = modulus.len() - 1;
        let digits = |a: usize| -> Vec<u8> {
            let mut v = vec![0u8; k];
            let mut a = a;
            for slot in v.iter_mut() {
                *slot = (a % p as usize) as u8;
                a /= p as usize;
            }
            v
        };
        let index = |v: &[u8]| -> u8 {
            v.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize) as u8
        };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = index(&sum);

                let mut prod = vec![0u8; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] =
                            ((prod[i + j] as u16 + *x as u16 * *y as u16) % p as u16) as u8;
                    }
                }
                // Reduce: the modulus is monic, so x^t = -(lower terms) x^{t-k}.
                for t in (k..prod.len()).rev() {
                    let c = prod[t];
                    if c == 0 {
                        continue;
                    }
                    prod[t] = 0;
                    for (s, &mc) in modulus[..k].iter().enumerate() {
                        let sub = (c as u16 * mc as u16) % p as u16;
                        let cur = prod[t - k + s] as u16;
                        prod[t - k + s] = ((cur + p as u16 - sub) % p as u16) as u8;
                    }
                }
                mul[a * q + b] = index(&prod[..k]);
            }
        }
        Self {
            q,
            p,
            modulus: modulus.to_vec(),
            add,
            mul,
        }
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    /// Coefficients of the reduction polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q as u8).find(|&b| self.mul(a, b) == 1)
    }

    pub fn pow(&self, a: u8, e: u64) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// Exhaustive check of the field axioms on the tables.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let q = self.q as u8;
        let elems = || 0..q;
        for a in elems() {
            if self.add(a, 0) != a {
                return Err(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, 1) != a {
                return Err(format!("{a} * 1 != {a}"));
            }
            if !elems().any(|b| self.add(a, b) == 0) {
                return Err(format!("{a} has no additive inverse"));
            }
            if a != 0 && self.inv(a).is_none() {
                return Err(format!("{a} has no multiplicative inverse"));
            }
            for b in elems() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("{a}, {b} do not commute"));
                }
                for c in elems() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at {a}, {b}, {c}"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at {a}, {b}, {c}"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("not distributive at {a}, {b}, {c}"));
                    }
                }
            }
        }
        Ok(())
    }
}
