//! Permutations, inversion tables and direct sums.
//!
//! Positions are 1-indexed in every doc comment and contract; storage is a
//! plain `Vec` so position `k` lives at index `k - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default size guard for the permutation enumerators (9! = 362 880 items).
pub const PERMUTATION_BOUND: usize = 9;

/// A rearrangement of `1..=n`. The empty permutation is a valid value.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation { len: n, values });
            }
            seen[v - 1] = true;
        }
        Ok(Self(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self(values)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of pairs `i < j` with `p_i > p_j`.
    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Entry `i` counts the earlier letters larger than `p_i`.
    pub fn inversion_table(&self) -> SubdiagonalSequence {
        let v = &self.0;
        let entries = (0..v.len())
            .map(|i| v[..i].iter().filter(|&&a| a > v[i]).count())
            .collect();
        SubdiagonalSequence(entries)
    }

    /// Partial sums of the inversion table; entry `k` is the number of
    /// inversions inside the length-`k` prefix.
    ///
    /// The result is weakly increasing but in general not subdiagonal.
    pub fn cumulative_inversion_table(&self) -> Vec<usize> {
        self.inversion_table()
            .entries()
            .iter()
            .scan(0, |acc, &b| {
                *acc += b;
                Some(*acc)
            })
            .collect()
    }

    /// Rebuilds the permutation whose inversion table is `table`.
    pub fn from_inversion_table(table: &SubdiagonalSequence) -> Self {
        // Insert letters from the back: the letter at position i is the
        // (b_i + 1)-th largest among those not yet used by later positions.
        let n = table.len();
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut values = vec![0; n];
        for i in (0..n).rev() {
            let b = table.0[i];
            // remaining has i + 1 elements sorted increasingly.
            values[i] = remaining.remove(remaining.len() - 1 - b);
        }
        Self(values)
    }

    /// `self ⊕ other`: `other` shifted up by `|self|` and appended.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut values = self.0.clone();
        values.extend(other.0.iter().map(|v| v + shift));
        Self(values)
    }

    /// Splits into indecomposable blocks, each renumbered to start at 1.
    pub fn components(&self) -> Vec<Permutation> {
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut max_seen = 0;
        for (i, &v) in self.0.iter().enumerate() {
            max_seen = max_seen.max(v);
            // The prefix ending at i is a permutation of 1..=i+1 exactly
            // when its maximum equals its length.
            if max_seen == i + 1 {
                let block = self.0[start..=i].iter().map(|v| v - start).collect();
                blocks.push(Self(block));
                start = i + 1;
            }
        }
        blocks
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Whether every nonempty prefix of length `k` has fewer than `k`
    /// inversions and the whole permutation has `n - 1` of them. The empty
    /// permutation belongs to the set by convention.
    pub fn is_catalan_member(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let cumulative = self.cumulative_inversion_table();
        cumulative[self.len() - 1] == self.len() - 1
            && cumulative.iter().enumerate().all(|(i, &c)| c < i + 1)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_sequence(&self.0))
    }
}

/// A sequence whose `k`-th entry is smaller than `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SubdiagonalSequence(Vec<usize>);

impl SubdiagonalSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some((i, &value)) = entries.iter().enumerate().find(|&(i, &b)| b > i) {
            return Err(Error::NotSubdiagonal {
                position: i + 1,
                value,
            });
        }
        Ok(Self(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(entries.iter().enumerate().all(|(i, &b)| b <= i));
        Self(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for SubdiagonalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_sequence(&self.0))
    }
}

fn guard(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { what, n, bound })
    } else {
        Ok(())
    }
}

/// Steps `values` to its lexicographic successor; false when it was the last.
fn next_permutation(values: &mut [usize]) -> bool {
    let Some(i) = values.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = values.iter().rposition(|&v| v > values[i]).unwrap();
    values.swap(i, j);
    values[i + 1..].reverse();
    true
}

/// Every permutation of `[n]`, in lexicographic order.
pub fn all_permutations(n: usize, bound: usize) -> Result<Vec<Permutation>> {
    guard("all_permutations", n, bound)?;
    let mut values: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(values.clone())];
    while next_permutation(&mut values) {
        out.push(Permutation(values.clone()));
    }
    Ok(out)
}

/// Brute-force listing of the permutations of `[n]` with exactly `k`
/// inversions, in lexicographic order.
pub fn enumerate_with_inversions(n: usize, k: usize) -> Result<Vec<Permutation>> {
    enumerate_with_inversions_bounded(n, k, PERMUTATION_BOUND)
}

pub fn enumerate_with_inversions_bounded(
    n: usize,
    k: usize,
    bound: usize,
) -> Result<Vec<Permutation>> {
    guard("enumerate_with_inversions", n, bound)?;
    let mut values: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let p = Permutation(values.clone());
        if p.inversions() == k {
            out.push(p);
        }
        if !next_permutation(&mut values) {
            break;
        }
    }
    Ok(out)
}

/// The permutations of `[n]` with `n - 1` inversions whose every nonempty
/// prefix of length `k` has fewer than `k` inversions.
pub fn enumerate_catalan_set(n: usize) -> Result<Vec<Permutation>> {
    enumerate_catalan_set_bounded(n, PERMUTATION_BOUND)
}

pub fn enumerate_catalan_set_bounded(n: usize, bound: usize) -> Result<Vec<Permutation>> {
    guard("enumerate_catalan_set", n, bound)?;
    if n == 0 {
        return Ok(vec![Permutation::empty()]);
    }
    Ok(enumerate_with_inversions_bounded(n, n - 1, bound)?
        .into_iter()
        .filter(Permutation::is_catalan_member)
        .collect())
}

/// All subdiagonal sequences of length `len` with entry sum `sum`, in
/// lexicographic order.
pub fn subdiagonal_sequences_with_sum(len: usize, sum: usize) -> Vec<SubdiagonalSequence> {
    fn go(
        pos: usize,
        len: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<SubdiagonalSequence>,
    ) {
        if pos == len {
            if left == 0 {
                out.push(SubdiagonalSequence(current.clone()));
            }
            return;
        }
        // Positions pos..len can absorb at most sum_{i=pos}^{len-1} i.
        let capacity = (pos..len).sum::<usize>();
        if left > capacity {
            return;
        }
        for b in 0..=pos.min(left) {
            current.push(b);
            go(pos + 1, len, left - b, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, len, sum, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every subdiagonal sequence of length `len`, in lexicographic order.
pub fn subdiagonal_sequences(len: usize) -> Vec<SubdiagonalSequence> {
    let mut out = vec![SubdiagonalSequence(Vec::new())];
    for pos in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..=pos).map(move |b| {
                    let mut next = s.0.clone();
                    next.push(b);
                    SubdiagonalSequence(next)
                })
            })
            .collect();
    }
    out
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(v: Permutation) -> Self {
        v.0
    }
}

impl TryFrom<Vec<usize>> for SubdiagonalSequence {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<SubdiagonalSequence> for Vec<usize> {
    fn from(v: SubdiagonalSequence) -> Self {
        v.0
    }
}
