//! Good pairs `(λ, μ) ⊩ n` and their equivalence classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compositions::{
    enumerate_compositions_bounded, is_good_pair, lir, Composition, Partition, PARTITION_BOUND,
};
use crate::error::{Error, Result};
use crate::notation::format_sequence;

/// A distinct-part partition `λ` (listed increasingly) and a composition `μ`
/// with `max λ < dmax(μ)` and `μ_1 ≤ dmax(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::notation::GoodPairJson", into = "crate::notation::GoodPairJson")]
pub struct GoodPair {
    lambda: Partition,
    mu: Composition,
}

impl GoodPair {
    pub fn new(lambda: Partition, mu: Composition) -> Result<Self> {
        if !is_good_pair(&lambda, &mu) {
            return Err(Error::Precondition(format!(
                "({}, {mu}) is not a good pair",
                format_sequence(lambda.parts())
            )));
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn weight(&self) -> usize {
        self.lambda.weight() + self.mu.weight()
    }

    pub fn sign(&self) -> i64 {
        if self.lambda.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The class representative `(ε, λμ)`, obtained by moving every part of
    /// `λ` onto the front of `μ`.
    pub fn representative(&self) -> Composition {
        self.mu.prepend(self.lambda.parts())
    }
}

impl fmt::Display for GoodPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.lambda.is_empty() {
            f.write_str(&format_sequence(self.lambda.parts()))?;
        }
        write!(f, ";{}", self.mu)
    }
}

/// Every good pair of weight `n`, sorted.
pub fn enumerate_good_pairs(n: usize) -> Result<Vec<GoodPair>> {
    if n > PARTITION_BOUND {
        return Err(Error::BoundExceeded {
            what: "enumerate_good_pairs",
            n,
            bound: PARTITION_BOUND,
        });
    }
    let mut out = Vec::new();
    for a in 0..=n {
        let lambdas = crate::compositions::enumerate_distinct_partitions(a)?;
        let mus = enumerate_compositions_bounded(n - a, PARTITION_BOUND)?;
        for lambda in &lambdas {
            for mu in &mus {
                if is_good_pair(lambda, mu) {
                    out.push(GoodPair {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The equivalence class of a representative `(ε, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLadder {
    /// Largest `k` with `(μ_1..μ_k, μ_{k+1}..) ⊩ n`.
    pub ell: usize,
    /// The members for `k = 0..=ell`, in that order.
    pub class: Vec<GoodPair>,
}

impl ClassLadder {
    /// `Σ (-1)^k` over the class: 1 when `ell` is even, 0 otherwise.
    pub fn signed_sum(&self) -> i64 {
        self.class.iter().map(GoodPair::sign).sum()
    }
}

fn split_at(mu: &Composition, k: usize) -> Option<GoodPair> {
    let (head, tail) = mu.parts().split_at(k);
    if !head.windows(2).all(|w| w[0] < w[1]) {
        return None;
    }
    let lambda = Partition::new(head.to_vec()).ok()?;
    let rest = Composition::new(tail.to_vec()).ok()?;
    is_good_pair(&lambda, &rest).then_some(GoodPair { lambda, mu: rest })
}

/// The ladder of splits `(μ_1..μ_k, μ_{k+1}..)` of a representative.
///
/// Fails if `(ε, μ)` is not a good pair, or if the valid splits are not
/// an initial range of `k`.
pub fn class_ladder(mu: &Composition) -> Result<ClassLadder> {
    if !is_good_pair(&Partition::empty(), mu) {
        return Err(Error::Precondition(format!("(ε, {mu}) is not a good pair")));
    }
    let valid: Vec<Option<GoodPair>> = (0..=mu.len()).map(|k| split_at(mu, k)).collect();
    let ell = valid.iter().rposition(Option::is_some).expect("k = 0 is valid");
    let class: Vec<GoodPair> = valid[..=ell].iter().cloned().collect::<Option<_>>().ok_or_else(|| {
        Error::IdentityViolation(format!("valid splits of {mu} are not downward closed"))
    })?;
    Ok(ClassLadder { ell, class })
}

/// Whether `ell` and `lir(μ)` agree in parity and `ell ∈ {lir, lir - 2}`.
pub fn ladder_matches_lir(mu: &Composition, ladder: &ClassLadder) -> bool {
    let s = lir(mu.parts());
    ladder.ell == s || ladder.ell + 2 == s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_composition, parse_good_pair};

    fn listing(n: usize) -> Vec<String> {
        enumerate_good_pairs(n).unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_listings() {
        assert_eq!(listing(0), [";ε"]);
        assert!(listing(1).is_empty() && listing(2).is_empty());
        assert_eq!(listing(3), [";12"]);
        assert_eq!(listing(4), [";121", ";13"]);
        let mut five = listing(5);
        five.sort();
        let mut want: Vec<String> = [";113", ";1211", ";122", ";131", ";14", ";23", "1;13"]
            .map(String::from)
            .to_vec();
        want.sort();
        assert_eq!(five, want);
        let sum: i64 = enumerate_good_pairs(5).unwrap().iter().map(GoodPair::sign).sum();
        assert_eq!(sum, 5);
    }

    #[test]
    fn larger_example() {
        let g = parse_good_pair("134;161121").unwrap();
        assert_eq!(g.weight(), 20);
        assert_eq!(g.sign(), -1);
    }

    #[test]
    fn ladders() {
        let ladder = class_ladder(&parse_composition("113").unwrap()).unwrap();
        assert_eq!(ladder.ell, 1);
        let class: Vec<String> = ladder.class.iter().map(ToString::to_string).collect();
        assert_eq!(class, [";113", "1;13"]);
        assert_eq!(ladder.signed_sum(), 0);

        let ladder = class_ladder(&parse_composition("1131").unwrap()).unwrap();
        let class: Vec<String> = ladder.class.iter().map(ToString::to_string).collect();
        assert_eq!(class, [";1131", "1;131"]);

        let ladder = class_ladder(&parse_composition("121").unwrap()).unwrap();
        assert_eq!((ladder.ell, ladder.signed_sum()), (0, 1));

        assert!(class_ladder(&parse_composition("3241261").unwrap()).is_err());
    }

    #[test]
    fn six_has_three_pairs_of_size_two() {
        let reps: Vec<_> = enumerate_good_pairs(6)
            .unwrap()
            .into_iter()
            .filter(|g| g.lambda().is_empty())
            .collect();
        let mut doubles: Vec<String> = reps
            .iter()
            .map(|g| class_ladder(g.mu()).unwrap())
            .filter(|l| l.class.len() > 1)
            .map(|l| l.class.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        doubles.sort();
        assert_eq!(doubles, [";1131 1;131", ";114 1;14", ";123 1;23"]);
    }
}
