//! Integer partitions and compositions, the run statistics `lir`, `cut` and
//! `dmax`, and the arithmetic functions `p(n)` and `σ(n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::notation::format_sequence;

/// Default size guard for the partition and composition enumerators.
pub const PARTITION_BOUND: usize = 14;

fn check_positive(parts: &[usize]) -> Result<()> {
    match parts.iter().find(|&&p| p == 0) {
        Some(&p) => Err(Error::ZeroPart(p)),
        None => Ok(()),
    }
}

/// An integer partition, stored with its parts weakly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts given in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        check_positive(&parts)?;
        parts.sort_unstable();
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Parts in weakly increasing order.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Parts in weakly decreasing order, the listing used when a partition
    /// is written in front of a composition.
    pub fn decreasing(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// The weakly decreasing listing as a composition.
    pub fn to_composition(&self) -> Composition {
        Composition(self.decreasing())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sequence(&self.decreasing()))
    }
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        check_positive(&parts)?;
        Ok(Self(parts))
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// `prefix` followed by `self`.
    pub fn prepend(&self, prefix: &[usize]) -> Composition {
        let mut parts = prefix.to_vec();
        parts.extend_from_slice(&self.0);
        Composition(parts)
    }

    /// Length of the leftmost strictly increasing run.
    pub fn lir(&self) -> usize {
        lir(&self.0)
    }

    pub fn cut(&self) -> CutResult {
        cut(self)
    }

    pub fn dmax(&self) -> i64 {
        dmax(&self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_sequence(&self.0))
    }
}

/// A composition split into its longest weakly decreasing prefix and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub head: Partition,
    pub tail: Composition,
}

pub fn lir(parts: &[usize]) -> usize {
    if parts.is_empty() {
        return 0;
    }
    1 + parts.windows(2).take_while(|w| w[0] < w[1]).count()
}

pub fn cut(m: &Composition) -> CutResult {
    let parts = m.parts();
    let head_len = if parts.is_empty() {
        0
    } else {
        1 + parts.windows(2).take_while(|w| w[0] >= w[1]).count()
    };
    CutResult {
        head: Partition(parts[..head_len].iter().rev().copied().collect()),
        tail: Composition(parts[head_len..].to_vec()),
    }
}

/// `max { m_j - j + 1 : 2 <= j <= |m| }`, or 0 when `|m| <= 1`.
pub fn dmax(parts: &[usize]) -> i64 {
    if parts.len() <= 1 {
        return 0;
    }
    parts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| m as i64 - i as i64)
        .max()
        .unwrap()
}

/// The relation `(l, m) ⊩ n`: `l` has distinct parts, its largest part is
/// below `dmax(m)`, and the first part of `m` is at most `dmax(m)`.
pub fn is_good_pair(l: &Partition, m: &Composition) -> bool {
    let d = m.dmax();
    l.has_distinct_parts()
        && l.largest().map_or(true, |a| (a as i64) < d)
        && m.first().map_or(true, |a| (a as i64) <= d)
}

/// `p(0), ..., p(n_max)` by Euler's pentagonal recurrence.
pub fn partition_counts(n_max: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    p.push(BigInt::one());
    for n in 1..=n_max {
        let mut total = BigInt::zero();
        for j in 1.. {
            let u = j * (3 * j - 1) / 2;
            if u > n {
                break;
            }
            let u_conj = j * (3 * j + 1) / 2;
            let mut term = p[n - u].clone();
            if u_conj <= n {
                term += &p[n - u_conj];
            }
            if j % 2 == 1 {
                total += term;
            } else {
                total -= term;
            }
        }
        p.push(total);
    }
    p
}

pub fn partition_count(n: usize) -> BigInt {
    partition_counts(n).pop().unwrap()
}

/// Sum of the positive divisors of `n`.
pub fn divisor_sum(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::DivisorSumOfZero);
    }
    let mut total = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += d;
            if d * d != n {
                total += n / d;
            }
        }
        d += 1;
    }
    Ok(total)
}

fn guard(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { what, n, bound })
    } else {
        Ok(())
    }
}

/// Partitions of `n`, each a weakly increasing list, in lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_bounded(n, PARTITION_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Vec<Partition>> {
    guard("enumerate_partitions", n, bound)?;
    Ok(partitions_with(n, false))
}

/// Partitions of `n` into distinct parts, in lexicographic order of the
/// increasing listing.
pub fn enumerate_distinct_partitions(n: usize) -> Result<Vec<Partition>> {
    guard("enumerate_distinct_partitions", n, PARTITION_BOUND)?;
    Ok(partitions_with(n, true))
}

fn partitions_with(n: usize, distinct: bool) -> Vec<Partition> {
    fn go(min: usize, left: usize, distinct: bool, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in min..=left {
            // The remaining parts are all >= part, so at least part must fit.
            let rest = left - part;
            if rest != 0 && rest < part + usize::from(distinct) {
                continue;
            }
            cur.push(part);
            go(part + usize::from(distinct), rest, distinct, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, distinct, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` in lexicographic order.
pub fn enumerate_compositions(n: usize) -> Result<Vec<Composition>> {
    enumerate_compositions_bounded(n, PARTITION_BOUND)
}

pub fn enumerate_compositions_bounded(n: usize, bound: usize) -> Result<Vec<Composition>> {
    guard("enumerate_compositions", n, bound)?;
    fn go(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for part in 1..=left {
            cur.push(part);
            go(left - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    Ok(out)
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(v: Partition) -> Self {
        v.0
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(v: Composition) -> Self {
        v.0
    }
}
