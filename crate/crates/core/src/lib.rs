//! Generating functions for permutations of `[n]` with `n - i` inversions.
//!
//! The crate has exact power-series arithmetic ([`series`]), the number
//! families involved ([`numbers`]), the combinatorial objects ([`perm`],
//! [`compositions`]) and executable versions of the bijections that prove
//! the identities ([`bijections`]). [`verify`] bundles the checks into
//! reports.

pub mod bijections;
pub mod compositions;
pub mod error;
pub mod notation;
pub mod numbers;
pub mod perm;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use series::IntegerSeries;
