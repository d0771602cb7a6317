//! Dimensions and generalized Hamming weights of q-ary Reed–Muller codes.
//!
//! The weight hierarchy of `RM(d, m)` over `F_q` is computed from the
//! d-th Macaulay representation with respect to `q` of `rho_q(d, m) - r`:
//! if `rho_q(d, m) - r = sum_i rho_q(i, m_i)` then the maximal number of
//! common zeros of `r` independent reduced polynomials is
//! `sum_i floor(q^{m_i})`, and `d_r = q^m` minus that number.
//!
//! * [`dims`]: binomials and the dimension `rho_q(d, m)` by three routes.
//! * [`macaulay`]: greedy decomposition, recomposition, validation, ordering.
//! * [`ghw`]: `e_bar`, `d_r`, and full weight hierarchies.
//! * [`oracle`]: brute-force reference computations (lex enumeration,
//!   monomial counting, exhaustive subspace search over small fields).
//! * [`cli`]: the command-line front end used by the `rmghw` binary.

pub mod cli;
pub mod dims;
pub mod error;
pub mod ghw;
pub mod macaulay;
pub mod oracle;

pub use dims::{binomial, rho, rho_binomial, rho_recursive, CodeParams, UInt};
pub use error::{Error, Result};
pub use ghw::{coeffs_to_mu, e_bar, ghw, hierarchy, MuTuple, WeightHierarchy};
pub use macaulay::{compare, decompose, recompose, validate, MacaulayRep, QParam};
