use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exhaustive enumerator was asked for a size above its guard.
    #[error("{what}: n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("not a subdiagonal sequence: entry {value} at position {position} must be < {position}")]
    NotSubdiagonal { position: usize, value: usize },

    #[error("not a permutation of 1..{len}: {values:?}")]
    NotAPermutation { len: usize, values: Vec<usize> },

    #[error("parts must be positive, found {0}")]
    ZeroPart(usize),

    #[error("divisor sum is undefined at 0")]
    DivisorSumOfZero,

    #[error("series with constant term {0} has no integer inverse")]
    NonUnitConstant(String),

    #[error("cannot substitute a series with nonzero constant term {0}")]
    NonZeroConstant(String),

    #[error("Knuth-Netto formula is only valid for k <= n (n = {n}, k = {k})")]
    KnuthNettoRange { n: usize, k: usize },

    /// An input violates the documented precondition of a map.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computed quantity contradicts an identity that must hold.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}
