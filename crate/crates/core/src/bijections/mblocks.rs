//! Factoring compositions with even `lir` into blocks from `ℳ`: blocks
//! `μ_1 < μ_2 ≥ μ_3 ≥ ... ≥ μ_k` with `k ≥ 2`.

use crate::compositions::{enumerate_compositions_bounded, Composition};
use crate::error::{Error, Result};

/// Whether `parts` is an ascent followed by a weakly decreasing run.
pub fn is_m_block(parts: &[usize]) -> bool {
    parts.len() >= 2 && parts[0] < parts[1] && parts[1..].windows(2).all(|w| w[0] >= w[1])
}

/// `ℳ_n`, in lexicographic order.
pub fn enumerate_m_blocks(n: usize) -> Result<Vec<Composition>> {
    Ok(enumerate_compositions_bounded(n, crate::compositions::PARTITION_BOUND)?
        .into_iter()
        .filter(|c| is_m_block(c.parts()))
        .collect())
}

/// Every way to write `parts` as a concatenation of blocks, as lists of
/// block lengths.
pub fn all_block_factorizations(parts: &[usize]) -> Vec<Vec<usize>> {
    if parts.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for len in (2..=parts.len()).rev() {
        if !is_m_block(&parts[..len]) {
            continue;
        }
        for mut rest in all_block_factorizations(&parts[len..]) {
            rest.insert(0, len);
            out.push(rest);
        }
    }
    out
}

/// Splits `mu` into its blocks, taking at each step the longest block
/// prefix whose remainder still factors.
pub fn m_block_factorization(mu: &Composition) -> Result<Vec<Composition>> {
    if mu.lir() % 2 != 0 {
        return Err(Error::Precondition(format!(
            "{mu} has odd lir {} and is not a fixed point of φ",
            mu.lir()
        )));
    }
    let lengths = all_block_factorizations(mu.parts())
        .into_iter()
        .next()
        .ok_or_else(|| Error::IdentityViolation(format!("{mu} has no block factorization")))?;
    let mut blocks = Vec::with_capacity(lengths.len());
    let mut start = 0;
    for len in lengths {
        blocks.push(Composition::from_vec_unchecked(mu.parts()[start..start + len].to_vec()));
        start += len;
    }
    Ok(blocks)
}
