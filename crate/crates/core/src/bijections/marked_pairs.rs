//! Marked subdiagonal sequences `(S, β) ∈ T_n`, the involution `ψ` and the
//! bijection `θ` from its fixed points onto good pairs.
//!
//! `(S, β) ∈ T_{n,k}` when `β` is subdiagonal of length `n - k` with entry
//! sum `n - k` and `S ⊆ [n - k]` has `k` elements. The sign is `(-1)^|S|`.
//! Inside this module a pair is handled as a list of `(value, marked)`
//! entries so that insertions and deletions carry marks along.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bijections::good_pairs::GoodPair;
use crate::compositions::{Composition, Partition};
use crate::error::{Error, Result};
use crate::perm::{subdiagonal_sequences_with_sum, SubdiagonalSequence};

/// Size guard for [`enumerate_marked_pairs`].
pub const MARKED_PAIR_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::notation::MarkedPairJson", into = "crate::notation::MarkedPairJson")]
pub struct MarkedPair {
    marks: BTreeSet<usize>,
    beta: SubdiagonalSequence,
}

impl MarkedPair {
    pub fn new(marks: impl IntoIterator<Item = usize>, beta: SubdiagonalSequence) -> Result<Self> {
        let marks: BTreeSet<usize> = marks.into_iter().collect();
        if beta.sum() != beta.len() {
            return Err(Error::Precondition(format!(
                "β = {beta} has sum {} but length {}",
                beta.sum(),
                beta.len()
            )));
        }
        if let Some(&bad) = marks.iter().find(|&&i| i == 0 || i > beta.len()) {
            return Err(Error::Precondition(format!(
                "mark {bad} lies outside 1..={}",
                beta.len()
            )));
        }
        Ok(Self { marks, beta })
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn beta(&self) -> &SubdiagonalSequence {
        &self.beta
    }

    /// `n = |β| + |S|`.
    pub fn weight(&self) -> usize {
        self.beta.len() + self.marks.len()
    }

    pub fn sign(&self) -> i64 {
        if self.marks.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn entries(&self) -> Vec<Entry> {
        self.beta
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &value)| Entry {
                value,
                marked: self.marks.contains(&(i + 1)),
            })
            .collect()
    }

    fn from_entries(entries: &[Entry]) -> Self {
        let marks = entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.marked)
            .map(|(i, _)| i + 1)
            .collect();
        let beta = SubdiagonalSequence::from_vec_unchecked(entries.iter().map(|e| e.value).collect());
        Self { marks, beta }
    }
}

impl fmt::Display for MarkedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marks.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}};{}", marks.join(","), self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Entry {
    value: usize,
    marked: bool,
}

/// `T_n`, sorted.
pub fn enumerate_marked_pairs(n: usize) -> Result<Vec<MarkedPair>> {
    if n > MARKED_PAIR_BOUND {
        return Err(Error::BoundExceeded {
            what: "enumerate_marked_pairs",
            n,
            bound: MARKED_PAIR_BOUND,
        });
    }
    let mut out = Vec::new();
    for k in 0..=n {
        let len = n - k;
        if k > len {
            break;
        }
        let betas = subdiagonal_sequences_with_sum(len, len);
        let mark_sets = subsets(len, k);
        for beta in &betas {
            for marks in &mark_sets {
                out.push(MarkedPair {
                    marks: marks.iter().copied().collect(),
                    beta: beta.clone(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The `k`-element subsets of `1..=n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Which rule of `ψ` fires, and at which (1-indexed) position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiCase {
    /// Marked entry, no 0-ascent to its right: split into `0, β_i + 1`.
    SplitMarked,
    /// Marked non-diagonal entry left of a 0-ascent: bump it, append a 0.
    BumpMarked,
    /// Unmarked 0-ascent bigram with no diagonal index beyond: merge.
    MergeAscent,
    /// Unmarked positive entry left of a 0-ascent, trailing 0: lower it.
    LowerUnmarked,
}

struct View<'a> {
    e: &'a [Entry],
}

impl View<'_> {
    fn len(&self) -> usize {
        self.e.len()
    }
    fn value(&self, i: usize) -> usize {
        self.e[i - 1].value
    }
    fn marked(&self, i: usize) -> bool {
        self.e[i - 1].marked
    }
    fn is_zero_ascent(&self, i: usize) -> bool {
        i < self.len() && self.value(i) == 0 && self.value(i + 1) > 0
    }
    fn is_diagonal(&self, i: usize) -> bool {
        self.value(i) == i - 1
    }
    fn zero_ascent_after(&self, i: usize) -> bool {
        (i + 1..=self.len()).any(|j| self.is_zero_ascent(j))
    }
    fn diagonal_after(&self, i: usize) -> bool {
        (i + 1..=self.len()).any(|j| self.is_diagonal(j))
    }

    fn cases_at(&self, i: usize) -> Vec<PsiCase> {
        let r = self.len();
        let mut cases = Vec::new();
        if self.marked(i) && !self.zero_ascent_after(i) {
            cases.push(PsiCase::SplitMarked);
        }
        if self.marked(i) && !self.is_diagonal(i) && self.zero_ascent_after(i) {
            cases.push(PsiCase::BumpMarked);
        }
        if i < r
            && !self.marked(i)
            && !self.marked(i + 1)
            && self.is_zero_ascent(i)
            && !self.diagonal_after(i + 1)
        {
            cases.push(PsiCase::MergeAscent);
        }
        if !self.marked(i) && self.value(i) != 0 && self.value(r) == 0 && self.zero_ascent_after(i) {
            cases.push(PsiCase::LowerUnmarked);
        }
        cases
    }
}

/// The first applicable rule when scanning positions from the right, or
/// `None` at a fixed point.
///
/// Panics if two rules apply at the same position; they are mutually
/// exclusive.
pub fn psi_case(p: &MarkedPair) -> Option<(PsiCase, usize)> {
    let entries = p.entries();
    let view = View { e: &entries };
    (1..=view.len()).rev().find_map(|i| {
        let cases = view.cases_at(i);
        assert!(cases.len() <= 1, "ψ cases {cases:?} overlap at index {i} of {p}");
        cases.first().map(|&c| (c, i))
    })
}

/// The sign-reversing involution `ψ` on `T_n`.
pub fn psi(p: &MarkedPair) -> MarkedPair {
    let Some((case, i)) = psi_case(p) else {
        return p.clone();
    };
    let mut e = p.entries();
    let at = i - 1;
    match case {
        PsiCase::SplitMarked => {
            let value = e[at].value;
            e.splice(
                at..=at,
                [
                    Entry { value: 0, marked: false },
                    Entry { value: value + 1, marked: false },
                ],
            );
        }
        PsiCase::BumpMarked => {
            e[at] = Entry { value: e[at].value + 1, marked: false };
            e.push(Entry { value: 0, marked: false });
        }
        PsiCase::MergeAscent => {
            let next = e[at + 1].value;
            e.splice(at..=at + 1, [Entry { value: next - 1, marked: true }]);
        }
        PsiCase::LowerUnmarked => {
            e[at] = Entry { value: e[at].value - 1, marked: true };
            e.pop();
        }
    }
    MarkedPair::from_entries(&e)
}

/// Lengths of the `σ τ ζ` split of a nonempty fixed point: `σ` runs up to
/// and including the rightmost 0-ascent, `τ` is the following run of
/// positive entries and `ζ` the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedPointSplit {
    pub sigma: usize,
    pub tau: usize,
    pub zeta: usize,
}

pub fn fixed_point_split(p: &MarkedPair) -> Result<FixedPointSplit> {
    if psi_case(p).is_some() {
        return Err(Error::Precondition(format!("{p} is not a fixed point of ψ")));
    }
    let entries = p.entries();
    let view = View { e: &entries };
    let r = view.len();
    if r == 0 {
        return Ok(FixedPointSplit { sigma: 0, tau: 0, zeta: 0 });
    }
    let sigma = (1..r)
        .rev()
        .find(|&i| view.is_zero_ascent(i))
        .ok_or_else(|| Error::IdentityViolation(format!("fixed point {p} has no 0-ascent")))?;
    let tau = (sigma + 1..=r).take_while(|&i| view.value(i) > 0).count();
    let zeta = r - sigma - tau;

    // Shape of a fixed point: σ holds only marked diagonal entries and
    // unmarked zeros, ending in an unmarked zero; τ and ζ are unmarked; ζ is
    // all zeros; τ contains a diagonal entry.
    let sigma_ok = (1..=sigma).all(|i| {
        if view.marked(i) {
            view.is_diagonal(i)
        } else {
            view.value(i) == 0
        }
    }) && !view.marked(sigma);
    let rest_ok = (sigma + 1..=r).all(|i| !view.marked(i))
        && (sigma + tau + 1..=r).all(|i| view.value(i) == 0)
        && (sigma + 1..=sigma + tau).any(|i| view.is_diagonal(i));
    if !sigma_ok || !rest_ok {
        return Err(Error::IdentityViolation(format!(
            "fixed point {p} does not factor as σ τ ζ"
        )));
    }
    Ok(FixedPointSplit { sigma, tau, zeta })
}

/// `θ`: a fixed point of `ψ` to the good pair (marks of `σ`, `τ`).
pub fn theta(p: &MarkedPair) -> Result<GoodPair> {
    let split = fixed_point_split(p)?;
    let lambda = Partition::new(p.marks.iter().copied().collect())?;
    let tau = &p.beta.entries()[split.sigma..split.sigma + split.tau];
    let mu = Composition::new(tau.to_vec())?;
    GoodPair::new(lambda, mu).map_err(|e| {
        Error::IdentityViolation(format!("θ({p}) is not a good pair: {e}"))
    })
}

/// `θ⁻¹`: `σ` of length `dmax(μ)` with marked diagonal entries at the parts
/// of `λ`, then `μ`, then enough zeros to make the length `n - |λ|`.
pub fn theta_inverse(g: &GoodPair) -> Result<MarkedPair> {
    let lambda = g.lambda();
    let mu = g.mu();
    let sigma_len = usize::try_from(mu.dmax()).expect("good pairs have dmax ≥ 0");
    let len = g.weight() - lambda.len();
    let zeta = len
        .checked_sub(sigma_len + mu.len())
        .ok_or_else(|| Error::IdentityViolation(format!("θ⁻¹({g}) has negative padding")))?;

    let mut beta = Vec::with_capacity(len);
    for i in 1..=sigma_len {
        beta.push(if lambda.parts().contains(&i) { i - 1 } else { 0 });
    }
    beta.extend_from_slice(mu.parts());
    beta.resize(len, 0);
    let beta = SubdiagonalSequence::new(beta)
        .map_err(|e| Error::IdentityViolation(format!("θ⁻¹({g}): {e}")))?;
    debug_assert_eq!(beta.len() - sigma_len - mu.len(), zeta);
    MarkedPair::new(lambda.parts().iter().copied(), beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_good_pair, parse_marked_pair};

    fn mp(s: &str) -> MarkedPair {
        parse_marked_pair(s).unwrap()
    }

    #[test]
    fn psi_worked_examples() {
        assert_eq!(psi_case(&mp("{1,3};0103")), Some((PsiCase::SplitMarked, 3)));
        assert_eq!(psi(&mp("{1,3};0103")), mp("{1};01013"));

        assert_eq!(psi_case(&mp("{2,3};0010150")), Some((PsiCase::BumpMarked, 3)));
        assert_eq!(psi(&mp("{2,3};0010150")), mp("{2};00201500"));

        assert_eq!(psi_case(&mp("{1};002040")), Some((PsiCase::MergeAscent, 4)));
        assert_eq!(psi(&mp("{1};002040")), mp("{1,4};00230"));

        assert_eq!(psi_case(&mp("{3};0120250000")), Some((PsiCase::LowerUnmarked, 2)));
        assert_eq!(psi(&mp("{3};0120250000")), mp("{2,3};002025000"));

        assert_eq!(psi(&mp("{1,3};0020152000")), mp("{1,3};0020152000"));
    }

    #[test]
    fn psi_examples_are_undone() {
        for s in ["{1,3};0103", "{2,3};0010150", "{1};002040", "{3};0120250000"] {
            assert_eq!(psi(&psi(&mp(s))), mp(s), "{s}");
        }
    }

    #[test]
    fn small_t_sets() {
        assert!(enumerate_marked_pairs(1).unwrap().is_empty());
        assert!(enumerate_marked_pairs(2).unwrap().is_empty());
        assert_eq!(enumerate_marked_pairs(0).unwrap(), vec![mp("{};")]);
        let t3: Vec<String> = enumerate_marked_pairs(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(t3, ["{};012"]);
        let mut t4: Vec<String> = enumerate_marked_pairs(4).unwrap().iter().map(ToString::to_string).collect();
        let mut listed: Vec<String> = [
            "{};0121", "{};0112", "{};0103", "{};0022", "{};0013", "{1};012", "{2};012", "{3};012",
        ]
        .map(String::from)
        .to_vec();
        t4.sort();
        listed.sort();
        assert_eq!(t4, listed);
    }

    #[test]
    fn theta_examples() {
        let g = theta(&mp("{};0121")).unwrap();
        assert_eq!(g, parse_good_pair(";121").unwrap());
        let g = theta(&mp("{1,3};0020152000")).unwrap();
        assert_eq!(g, parse_good_pair("13;152").unwrap());
        assert_eq!(theta_inverse(&g).unwrap(), mp("{1,3};0020152000"));
        let split = fixed_point_split(&mp("{1,3};0020152000")).unwrap();
        assert_eq!(split, FixedPointSplit { sigma: 4, tau: 3, zeta: 3 });
    }

    #[test]
    fn theta_rejects_non_fixed_points() {
        assert!(matches!(theta(&mp("{1,3};0103")), Err(Error::Precondition(_))));
    }

    #[test]
    fn constructor_validates() {
        let beta = SubdiagonalSequence::new(vec![0, 1, 2]).unwrap();
        assert!(MarkedPair::new([4], beta.clone()).is_err());
        assert!(MarkedPair::new([0], beta.clone()).is_err());
        assert!(MarkedPair::new([], SubdiagonalSequence::new(vec![0, 1]).unwrap()).is_err());
        assert_eq!(MarkedPair::new([2], beta).unwrap().weight(), 4);
    }

    #[test]
    fn subset_listing() {
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
    }
}
