use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must be a prime power (got {0})")]
    NotPrimePower(u64),

    #[error("q = {0} exceeds the supported maximum 2^32")]
    QTooLarge(u64),

    #[error("m must be >= {min} (got {m})")]
    InvalidM { m: i64, min: i64 },

    #[error("m = {m} exceeds the supported maximum {max}")]
    MTooLarge { m: i64, max: i64 },

    #[error("a representation coefficient does not fit in 64 bits")]
    CoefficientOverflow,

    #[error("d must be in [1, {max}] for q = {q}, m = {m} (got {d})")]
    InvalidD { q: u64, d: i64, m: i64, max: i64 },

    #[error("d must be in [0, {max}] for the binomial dimension formula (got {d})")]
    BinomialOutOfDomain { d: i64, max: i64 },

    #[error("d must be >= 1 (got {0})")]
    InvalidDegree(i64),

    #[error("r must be in [1, {rho}]")]
    RankOutOfRange { r: String, rho: String },

    #[error("coefficient tuple has length {got}, expected d = {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("coefficient tuple {0:?} violates the representation conditions")]
    InvalidRepresentation(Vec<i64>),

    #[error("cannot compare representations with different degree or modulus")]
    IncomparableReps,

    #[error("representation needs a finite q")]
    InfiniteModulus,

    #[error("leading coefficient {top} is too large for m = {m}")]
    CoefficientTooLarge { top: i64, m: i64 },

    #[error("{what} count {count} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        count: String,
        cap: String,
    },

    #[error("no field model for q = {0} (supported: 2, 3, 4, 5, 7, 8, 9, 11, 13, 16)")]
    UnsupportedField(u64),

    #[error("invalid tuple {digits:?} for q = {q}, d = {d}")]
    InvalidMuTuple { digits: Vec<u64>, q: u64, d: i64 },
}
