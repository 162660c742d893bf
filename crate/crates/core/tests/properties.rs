//! Randomized checks of the stated invariants at sizes past the exhaustive
//! bounds.

use mahonian::bijections::{
    enumerate_marked_pairs, factor_few_inversions, phi, psi, psi_case, theta, theta_inverse,
    GoodPair, SignedTuple,
};
use mahonian::compositions::{cut, dmax, lir, Composition, Partition};
use mahonian::numbers::mahonian_table;
use mahonian::perm::{Permutation, SubdiagonalSequence};
use num_bigint::BigInt;
use proptest::prelude::*;

fn subdiagonal(max_len: usize) -> impl Strategy<Value = SubdiagonalSequence> {
    (0..=max_len)
        .prop_flat_map(|len| {
            (0..len)
                .map(|k| (any::<bool>(), 0..=k))
                .collect::<Vec<_>>()
        })
        .prop_map(|entries| {
            // Zero out about half the entries so few-inversion permutations are common.
            let v = entries.into_iter().map(|(keep, b)| if keep { b } else { 0 }).collect();
            SubdiagonalSequence::new(v).unwrap()
        })
}

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    subdiagonal(max_len).prop_map(|b| Permutation::from_inversion_table(&b))
}

fn composition(max_len: usize, max_part: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Partition::new(v).unwrap())
}

fn signed_tuple() -> impl Strategy<Value = SignedTuple> {
    (prop::collection::vec(partition(4, 12), 0..4), composition(8, 12))
        .prop_map(|(ps, mu)| SignedTuple::new(ps, mu).unwrap())
}

proptest! {
    #[test]
    fn inversion_table_round_trip(b in subdiagonal(14)) {
        let p = Permutation::from_inversion_table(&b);
        prop_assert_eq!(p.inversion_table(), b.clone());
        prop_assert_eq!(p.inversions(), b.sum());
        let cumulative = p.cumulative_inversion_table();
        prop_assert_eq!(cumulative.last().copied().unwrap_or(0), b.sum());
    }

    #[test]
    fn components_rebuild_the_permutation(p in permutation(14)) {
        let comps = p.components();
        prop_assert_eq!(comps.len(), p.component_count());
        let rebuilt = comps.iter().fold(Permutation::empty(), |acc, c| acc.direct_sum(c));
        prop_assert_eq!(rebuilt, p.clone());
        // Lemma CJS.
        prop_assert!(p.inversions() + comps.len() >= p.len());
    }

    #[test]
    fn decomposition_lemma(p in permutation(14)) {
        let comps = p.components();
        prop_assume!(comps.len() >= 2);
        let beta = comps[1..].iter().fold(Permutation::empty(), |acc, c| acc.direct_sum(c));
        let d = p.inversions() as i64 - p.len() as i64;
        prop_assert!(beta.inversions() as i64 <= beta.len() as i64 + d + 1);
    }

    #[test]
    fn factorization_recombines(p in permutation(13)) {
        prop_assume!(!p.is_empty() && p.inversions() < p.len());
        let i = p.len() - 1 - p.inversions();
        let f = factor_few_inversions(&p, i).unwrap();
        prop_assert_eq!(f.recombine(), p);
        prop_assert_eq!(f.sigma.inversions() + i, f.sigma.len());
        prop_assert!(f.tau.is_catalan_member());
    }

    #[test]
    fn cut_splits_the_composition(mu in composition(12, 15)) {
        let c = cut(&mu);
        prop_assert_eq!(c.tail.prepend(&c.head.decreasing()), mu.clone());
        prop_assert!(lir(mu.parts()) <= mu.len());
        prop_assert!(dmax(mu.parts()) <= mu.parts().iter().copied().max().unwrap_or(0) as i64);
    }

    #[test]
    fn split_lemma(lambda in partition(5, 12), mu in composition(8, 12)) {
        prop_assume!(mu.lir() % 2 == 0);
        let dec = lambda.decreasing();
        let joined = mu.prepend(&dec);
        prop_assert_eq!(joined.lir() % 2, 1);
        let got = cut(&joined);
        let a = *dec.last().unwrap();
        match mu.first() {
            None => prop_assert_eq!(got.head, lambda),
            Some(b) if a < b => {
                prop_assert_eq!(got.head, lambda);
                prop_assert_eq!(got.tail, mu);
            }
            Some(b) => {
                let mut h = dec.clone();
                h.push(b);
                prop_assert_eq!(got.head.decreasing(), h);
                prop_assert_eq!(got.tail.parts(), &mu.parts()[1..]);
            }
        }
    }

    #[test]
    fn phi_is_a_sign_reversing_involution(t in signed_tuple()) {
        let image = phi(&t);
        prop_assert_eq!(phi(&image), t.clone());
        prop_assert_eq!(image.weight(), t.weight());
        let fixed = t.partitions().is_empty() && t.tail().lir() % 2 == 0;
        prop_assert_eq!(fixed, image == t);
        if !fixed {
            prop_assert_eq!(image.sign(), -t.sign());
        }
    }

    #[test]
    fn theta_inverse_round_trip(lambda in prop::collection::btree_set(1usize..8, 0..4), mu in composition(8, 9)) {
        let lambda = Partition::new(lambda.into_iter().collect()).unwrap();
        let Ok(g) = GoodPair::new(lambda, mu) else { return Ok(()) };
        let p = theta_inverse(&g).unwrap();
        prop_assert!(psi_case(&p).is_none(), "{} is not fixed by psi", p);
        prop_assert_eq!(p.weight(), g.weight());
        prop_assert_eq!(p.sign(), g.sign());
        prop_assert_eq!(theta(&p).unwrap(), g);
    }
}

#[test]
fn psi_on_sampled_pairs_of_size_eleven() {
    // T_11 is too large to sweep in every test run; take every 7th element.
    let pairs = enumerate_marked_pairs(11).unwrap();
    for p in pairs.iter().step_by(7) {
        let image = psi(p);
        assert_eq!(psi(&image), *p);
        assert_eq!(image.weight(), 11);
        if image != *p {
            assert_eq!(image.sign(), -p.sign());
        }
    }
}

#[test]
fn mahonian_rows_are_palindromes_summing_to_factorials() {
    let t = mahonian_table(20);
    let mut factorial = BigInt::from(1);
    for n in 0..=20 {
        if n > 0 {
            factorial *= n;
        }
        let row = t.row(n);
        assert!(row.iter().eq(row.iter().rev()), "row {n}");
        assert_eq!(row.iter().sum::<BigInt>(), factorial, "row {n}");
    }
}
