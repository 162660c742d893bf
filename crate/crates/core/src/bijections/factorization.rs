//! Factoring permutations with few inversions into a prefix `σ` and a
//! suffix `τ` from the Catalan set.
//!
//! For `π` of length `n` with `n - i - 1` inversions, `σ` is the longest
//! prefix whose inversion count is `|σ| - i`. The prefix is always a
//! permutation of `[|σ|]`, so `τ` (renumbered) lies in `𝒞_{n-|σ|}` and
//! there are no inversions between the two parts.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factorization {
    pub sigma: Permutation,
    /// The suffix renumbered to `1..=|τ|`.
    pub tau: Permutation,
}

impl Factorization {
    /// `σ` followed by `τ` shifted by `|σ|`.
    pub fn recombine(&self) -> Permutation {
        self.sigma.direct_sum(&self.tau)
    }
}

impl fmt::Display for Factorization {
    /// `σ | τ` with `τ` in its original letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shifted: Vec<usize> = self.tau.values().iter().map(|v| v + self.sigma.len()).collect();
        write!(
            f,
            "{} | {}",
            self.sigma,
            crate::notation::format_sequence(&shifted)
        )
    }
}

/// Splits `p ∈ S_n^{n-i-1}` at its longest prefix with `|prefix| - i`
/// inversions.
pub fn factor_few_inversions(p: &Permutation, i: usize) -> Result<Factorization> {
    let n = p.len();
    let inv = p.inversions();
    if inv + i + 1 != n {
        return Err(Error::Precondition(format!(
            "{p} has {inv} inversions; the factorization with i = {i} needs {}",
            n as i64 - i as i64 - 1
        )));
    }
    // cumulative[k-1] = inversions of the length-k prefix.
    let cumulative = p.cumulative_inversion_table();
    let k = (0..=n)
        .rev()
        .find(|&k| {
            let prefix_inv = if k == 0 { 0 } else { cumulative[k - 1] };
            prefix_inv + i == k
        })
        .ok_or_else(|| {
            Error::IdentityViolation(format!("{p} has no prefix with |prefix| - {i} inversions"))
        })?;

    let (head, tail) = p.values().split_at(k);
    let sigma = Permutation::new(head.to_vec()).map_err(|_| {
        Error::IdentityViolation(format!(
            "prefix {} of {p} is not a permutation of 1..={k}",
            crate::notation::format_sequence(head)
        ))
    })?;
    let tau = Permutation::from_vec_unchecked(tail.iter().map(|v| v - k).collect());
    if !tau.is_catalan_member() {
        return Err(Error::IdentityViolation(format!(
            "suffix of {p} after {sigma} is not in the Catalan set"
        )));
    }
    Ok(Factorization { sigma, tau })
}
