//! Signed tuples `(λ¹, ..., λᵏ; μ)` of nonempty partitions followed by a
//! composition, and the sign-reversing involution `φ` on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compositions::{
    enumerate_compositions_bounded, enumerate_partitions_bounded, Composition, Partition,
};
use crate::error::{Error, Result};

/// Size guard for [`enumerate_signed_tuples`] and [`phi_fixed_points`].
pub const SIGNED_TUPLE_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::notation::SignedTupleJson", into = "crate::notation::SignedTupleJson")]
pub struct SignedTuple {
    partitions: Vec<Partition>,
    tail: Composition,
}

impl SignedTuple {
    pub fn new(partitions: Vec<Partition>, tail: Composition) -> Result<Self> {
        if let Some(i) = partitions.iter().position(Partition::is_empty) {
            return Err(Error::Precondition(format!(
                "partition {} of a signed tuple is empty",
                i + 1
            )));
        }
        Ok(Self { partitions, tail })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn tail(&self) -> &Composition {
        &self.tail
    }

    /// `(-1)^k` for `k` listed partitions.
    pub fn sign(&self) -> i64 {
        if self.partitions.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn weight(&self) -> usize {
        self.partitions.iter().map(Partition::weight).sum::<usize>() + self.tail.weight()
    }
}

impl fmt::Display for SignedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lists: Vec<String> = self.partitions.iter().map(ToString::to_string).collect();
        write!(f, "{};{}", lists.join(","), self.tail)
    }
}

/// Every element of `ℛ_n`: for each tail size `m`, the ordered lists of
/// nonempty partitions of total `n - m` paired with each composition of `m`.
pub fn enumerate_signed_tuples(n: usize) -> Result<Vec<SignedTuple>> {
    if n > SIGNED_TUPLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "enumerate_signed_tuples",
            n,
            bound: SIGNED_TUPLE_BOUND,
        });
    }
    let partitions: Vec<Vec<Partition>> = (0..=n)
        .map(|k| enumerate_partitions_bounded(k, n).expect("within bound"))
        .collect();
    let compositions: Vec<Vec<Composition>> = (0..=n)
        .map(|k| enumerate_compositions_bounded(k, n).expect("within bound"))
        .collect();

    // lists[w] holds every ordered list of nonempty partitions of total w.
    let mut lists: Vec<Vec<Vec<Partition>>> = vec![vec![Vec::new()]];
    for w in 1..=n {
        let mut here = Vec::new();
        for first in 1..=w {
            for lambda in &partitions[first] {
                for rest in &lists[w - first] {
                    let mut list = vec![lambda.clone()];
                    list.extend(rest.iter().cloned());
                    here.push(list);
                }
            }
        }
        lists.push(here);
    }

    let mut out = Vec::new();
    for m in 0..=n {
        for list in &lists[n - m] {
            for mu in &compositions[m] {
                out.push(SignedTuple {
                    partitions: list.clone(),
                    tail: mu.clone(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The involution `φ`.
///
/// With `lir(μ)` even the last partition (if any) moves onto the front of
/// `μ`. With `lir(μ)` odd and `cut(μ) = (ρx, μ')`, either all of `ρx` becomes
/// a new last partition (`lir(μ')` even) or only `ρ` does and `x` stays in
/// front of `μ'`.
pub fn phi(t: &SignedTuple) -> SignedTuple {
    let mu = &t.tail;
    let mut partitions = t.partitions.clone();
    if mu.lir() % 2 == 0 {
        let Some(last) = partitions.pop() else {
            return t.clone();
        };
        let tail = mu.prepend(&last.decreasing());
        return SignedTuple { partitions, tail };
    }
    let cut = mu.cut();
    let rest = &cut.tail;
    if rest.lir() % 2 == 0 {
        partitions.push(cut.head);
        SignedTuple {
            partitions,
            tail: rest.clone(),
        }
    } else {
        // ρ is nonempty here: a one-part head forces lir(μ') even.
        let head = cut.head.decreasing();
        let (x, rho) = head.split_last().expect("lir(μ) odd implies μ nonempty");
        debug_assert!(!rho.is_empty());
        partitions.push(Partition::new(rho.to_vec()).expect("parts are positive"));
        SignedTuple {
            partitions,
            tail: rest.prepend(&[*x]),
        }
    }
}

pub fn is_phi_fixed_point(t: &SignedTuple) -> bool {
    t.partitions.is_empty() && t.tail.lir() % 2 == 0
}

/// `Fix_n(φ)`: the compositions of `n` with even `lir`, in lexicographic order.
pub fn phi_fixed_points(n: usize) -> Result<Vec<Composition>> {
    if n > SIGNED_TUPLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "phi_fixed_points",
            n,
            bound: SIGNED_TUPLE_BOUND,
        });
    }
    Ok(enumerate_compositions_bounded(n, SIGNED_TUPLE_BOUND)?
        .into_iter()
        .filter(|mu| mu.lir() % 2 == 0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_signed_tuple;

    fn t(s: &str) -> SignedTuple {
        parse_signed_tuple(s).unwrap()
    }

    #[test]
    fn phi_worked_examples() {
        assert_eq!(phi(&t("6211;")), t(";6211"));
        assert_eq!(phi(&t("11,62;243352")), t("11;62243352"));
        assert_eq!(phi(&t("11,62;643452")), t("11,62,643;452"));
        assert_eq!(phi(&t("11,62;643425")), t("11,62,64;3425"));
        assert_eq!(phi(&t(";3644")), t(";3644"));
    }

    #[test]
    fn phi_examples_are_undone() {
        for s in ["6211;", "11,62;243352", "11,62;643452", "11,62;643425", ";3644"] {
            assert_eq!(phi(&phi(&t(s))), t(s), "{s}");
        }
    }

    #[test]
    fn r3_listing() {
        let all = enumerate_signed_tuples(3).unwrap();
        assert_eq!(all.len(), 17);
        let negative: Vec<_> = all.iter().filter(|x| x.sign() < 0).collect();
        assert_eq!(negative.len(), 8);
        let mut listed: Vec<String> = [
            "1;11", "1;2", "1,1,1;", "11;1", "111;", "21;", "2;1", "3;", ";111", ";12", ";21",
            ";3", "1,1;1", "1,11;", "1,2;", "11,1;", "2,1;",
        ]
        .iter()
        .map(|s| t(s).to_string())
        .collect();
        listed.sort();
        let mut got: Vec<String> = all.iter().map(ToString::to_string).collect();
        got.sort();
        assert_eq!(got, listed);
    }

    #[test]
    fn empty_tuple() {
        let zero = enumerate_signed_tuples(0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].sign(), 1);
        assert!(is_phi_fixed_point(&zero[0]));
    }

    #[test]
    fn signed_sums_follow_r() {
        let expected = [1, 0, 0, 1, 2, 5, 9, 19, 37];
        for (n, &want) in expected.iter().enumerate() {
            let sum: i64 = enumerate_signed_tuples(n).unwrap().iter().map(SignedTuple::sign).sum();
            assert_eq!(sum, want, "n = {n}");
        }
    }

    #[test]
    fn fixed_point_listing() {
        let three: Vec<String> = phi_fixed_points(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(three, ["12"]);
        assert_eq!(phi_fixed_points(0).unwrap(), vec![Composition::empty()]);
        assert!(phi_fixed_points(13).is_err());
        assert!(enumerate_signed_tuples(13).is_err());
    }

    #[test]
    fn rejects_empty_partitions() {
        assert!(SignedTuple::new(vec![Partition::empty()], Composition::empty()).is_err());
    }
}
