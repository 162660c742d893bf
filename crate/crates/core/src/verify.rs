//! Check suites over the identities and bijections, collected into a
//! [`VerificationReport`].
//!
//! Every check that fails records a witness: the first coefficient index or
//! the first enumerated element at which the identity breaks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bijections::{
    class_ladder, enumerate_good_pairs, enumerate_m_blocks, enumerate_marked_pairs,
    enumerate_signed_tuples, factor_few_inversions, is_m_block, m_block_factorization, phi,
    phi_fixed_points, psi, psi_case, theta, theta_inverse, GoodPair,
};
use crate::bijections::good_pairs::ladder_matches_lir;
use crate::bijections::signed_tuples::is_phi_fixed_point;
use crate::compositions::{
    cut, enumerate_compositions, enumerate_partitions, lir, Composition, Partition,
};
use crate::error::{Error, Result};
use crate::numbers::{
    catalan_number, cycle_type_formula, first_mismatch, knuth_netto, log_derivative_mismatch,
    m_coefficient_formula, m_series, mahonian_table, pointed_structure_mismatch, r_series,
    subdiagonal_series, x_catalan, RMethod, SubdiagonalMethod,
};
use crate::perm::{all_permutations, enumerate_catalan_set, enumerate_with_inversions, Permutation};
use crate::series::IntegerSeries;

/// Bounds used by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Truncation order for the series identities.
    pub order: usize,
    /// Largest `n` for the exhaustive checks.
    pub n: usize,
    /// Truncation order for comparing the constructions of `R`.
    pub r_order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            order: 40,
            n: 8,
            r_order: 200,
        }
    }
}

pub const ORDER_ENV: &str = "MAHONIAN_ORDER";
pub const BOUND_ENV: &str = "MAHONIAN_BOUND";
pub const R_ORDER_ENV: &str = "MAHONIAN_R_ORDER";

impl Bounds {
    /// The defaults, overridden by `MAHONIAN_ORDER`, `MAHONIAN_BOUND` and
    /// `MAHONIAN_R_ORDER` where set.
    pub fn from_env() -> Result<Self> {
        let mut b = Self::default();
        for (var, slot) in [
            (ORDER_ENV, &mut b.order),
            (BOUND_ENV, &mut b.n),
            (R_ORDER_ENV, &mut b.r_order),
        ] {
            if let Ok(value) = std::env::var(var) {
                *slot = value
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("{var}={value:?}: {e}")))?;
            }
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The identity being checked.
    pub statement: String,
    pub parameters: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub bounds: Bounds,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "{tag} {} ({}): {}", c.name, c.parameters, c.statement)?;
            if let Some(w) = &c.witness {
                writeln!(f, "     witness: {w}")?;
            }
        }
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    SeriesIdentities,
    Involutions,
    Factorization,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Self::All,
        Self::SeriesIdentities,
        Self::Involutions,
        Self::Factorization,
        Self::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::All => "all",
            Self::SeriesIdentities => "series-identities",
            Self::Involutions => "involutions",
            Self::Factorization => "factorization",
            Self::Counts => "counts",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            Error::Parse(format!(
                "unknown suite {s:?} (all, series-identities, involutions, factorization, counts)"
            ))
        })
    }
}

type Witnessed = std::result::Result<(), String>;

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn series_eq(expected: &IntegerSeries, actual: &IntegerSeries, from: usize, to: usize) -> Witnessed {
    match first_mismatch(expected, actual, from, to) {
        Some(m) => Err(m.to_string()),
        None => Ok(()),
    }
}

#[derive(Default)]
struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    fn run(&mut self, name: &str, statement: &str, parameters: String, f: impl FnOnce() -> Witnessed) {
        let outcome = f();
        self.checks.push(Check {
            name: name.to_string(),
            statement: statement.to_string(),
            parameters,
            status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
            witness: outcome.err(),
        });
    }
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> VerificationReport {
    let mut runner = Runner::default();
    match suite {
        Suite::All => {
            series_identities(&mut runner, bounds);
            involutions(&mut runner, bounds);
            factorization(&mut runner, bounds);
            counts(&mut runner, bounds);
        }
        Suite::SeriesIdentities => series_identities(&mut runner, bounds),
        Suite::Involutions => involutions(&mut runner, bounds),
        Suite::Factorization => factorization(&mut runner, bounds),
        Suite::Counts => counts(&mut runner, bounds),
    }
    let passed = runner.checks.iter().filter(|c| c.status == Status::Pass).count();
    let total = runner.checks.len();
    VerificationReport {
        suite: suite.name().to_string(),
        bounds: *bounds,
        checks: runner.checks,
        summary: Summary {
            total,
            passed,
            failed: total - passed,
        },
    }
}

fn series_identities(r: &mut Runner, b: &Bounds) {
    let order = b.order;
    let p = format!("order={order}");
    let xc = x_catalan(order);
    let s = |i| subdiagonal_series(i, order, SubdiagonalMethod::DiagonalOfDp);

    r.run("si-recursion", "S_{i+1} = x C(x) S_i for i <= 5", p.clone(), || {
        for i in 0..=5 {
            series_eq(&s(i + 1), &(&xc * &s(i)), 0, order).map_err(|w| format!("i={i}, {w}"))?;
        }
        Ok(())
    });

    r.run(
        "si-methods-agree",
        "the three constructions of S_i agree for i <= 5",
        p.clone(),
        || {
            for i in 0..=5 {
                let reference = s(i);
                for m in SubdiagonalMethod::ALL {
                    series_eq(&reference, &subdiagonal_series(i, order, m), 0, order)
                        .map_err(|w| format!("i={i}, method {}: {w}", m.name()))?;
                }
            }
            Ok(())
        },
    );

    let rs = r_series(order, RMethod::Product).expect("product route cannot fail");
    r.run("s0-at-x-minus-x2", "S_0(x - x^2) = R(x)", p.clone(), || {
        let inner = &IntegerSeries::x(order) - &IntegerSeries::monomial(1, 2, order);
        series_eq(&rs, &lib(s(0).compose(&inner))?, 0, order)
    });
    r.run("r-at-xc", "R(x C(x)) = S_0(x)", p.clone(), || {
        series_eq(&s(0), &lib(rs.compose(&xc))?, 0, order)
    });

    let ro = b.r_order;
    r.run(
        "r-methods-agree",
        "Comp/Par = 1/(1 - M) = divisor recursion",
        format!("order={ro}"),
        || {
            let reference = lib(r_series(ro, RMethod::Product))?;
            for m in RMethod::ALL {
                series_eq(&reference, &lib(r_series(ro, m))?, 0, ro)
                    .map_err(|w| format!("method {}: {w}", m.name()))?;
            }
            Ok(())
        },
    );
    r.run(
        "r-initial-coefficients",
        "R = 1 + x^3 + 2x^4 + 5x^5 + 9x^6 + 19x^7 + 37x^8 + 74x^9 + ...",
        "order=9".into(),
        || {
            let want = IntegerSeries::from_coefficients([1, 0, 0, 1, 2, 5, 9, 19, 37, 74], 9);
            series_eq(&want, &lib(r_series(9, RMethod::Product))?, 0, 9)
        },
    );
    r.run(
        "m-coefficients",
        "[x^n] M = p(0) + ... + p(n-1) - p(n)",
        format!("order={ro}"),
        || {
            let m = m_series(ro);
            let formula = IntegerSeries::from_coefficients(
                (0..=ro).map(|n| if n == 0 { BigInt::from(0) } else { m_coefficient_formula(n) }),
                ro,
            );
            series_eq(&formula, &m, 0, ro)
        },
    );
    r.run(
        "log-derivative",
        "[x^n] x R'/R = 2^n - sigma(n) - 1",
        p.clone(),
        || log_derivative_mismatch(order).map_or(Ok(()), |m| Err(m.to_string())),
    );
    r.run(
        "pointed-structure",
        "[x^n] x M'/(1 - M) = 2^n - sigma(n) - 1",
        p.clone(),
        || pointed_structure_mismatch(order).map_or(Ok(()), |m| Err(m.to_string())),
    );
    let cycle_max = order.min(15);
    r.run(
        "cycle-type-formula",
        "[x^n] R = sum over cycle types of prod f(l_i) / z_l",
        format!("n<={cycle_max}"),
        || {
            for n in 0..=cycle_max {
                let v = lib(cycle_type_formula(n))?;
                if &v != rs.coeff(n) {
                    return Err(format!("n={n}: formula {v}, series {}", rs.coeff(n)));
                }
            }
            Ok(())
        },
    );
    r.run(
        "knuth-netto",
        "pentagonal binomial sum equals I_n(k) for k <= n",
        format!("n<={order}"),
        || {
            let table = mahonian_table(order);
            for n in 0..=order {
                for k in 0..=n {
                    let v = lib(knuth_netto(n, k))?;
                    if v != table.get(n, k) {
                        return Err(format!("I_{n}({k}): formula {v}, table {}", table.get(n, k)));
                    }
                }
            }
            Ok(())
        },
    );
}

fn involutions(r: &mut Runner, b: &Bounds) {
    let n = b.n;
    let p = format!("n<={n}");
    let rs = r_series(n, RMethod::Product).expect("product route cannot fail");

    r.run(
        "phi-involution",
        "phi is a weight-preserving, sign-reversing involution on R_n fixing exactly (;mu) with lir(mu) even",
        p.clone(),
        || {
            for m in 0..=n {
                for t in lib(enumerate_signed_tuples(m))? {
                    let image = phi(&t);
                    let fixed = t.partitions().is_empty() && t.tail().lir() % 2 == 0;
                    if phi(&image) != t {
                        return Err(format!("phi(phi({t})) = {}", phi(&image)));
                    }
                    if image.weight() != t.weight() {
                        return Err(format!("phi({t}) = {image} changes weight"));
                    }
                    if fixed != (image == t) || fixed != is_phi_fixed_point(&t) {
                        return Err(format!("{t}: fixed-point characterization fails"));
                    }
                    if !fixed && image.sign() == t.sign() {
                        return Err(format!("phi({t}) = {image} keeps the sign"));
                    }
                }
            }
            Ok(())
        },
    );
    r.run(
        "phi-signed-sum",
        "sum of signs over R_n = |Fix_n(phi)| = [x^n] R",
        p.clone(),
        || {
            for m in 0..=n {
                let sum: i64 = lib(enumerate_signed_tuples(m))?.iter().map(|t| t.sign()).sum();
                let fixed = lib(phi_fixed_points(m))?.len();
                if BigInt::from(sum) != *rs.coeff(m) || BigInt::from(fixed) != *rs.coeff(m) {
                    return Err(format!(
                        "n={m}: signed sum {sum}, fixed points {fixed}, [x^n]R = {}",
                        rs.coeff(m)
                    ));
                }
            }
            Ok(())
        },
    );
    r.run(
        "psi-involution",
        "psi is a weight-preserving, sign-reversing involution on T_n",
        p.clone(),
        || {
            for m in 0..=n {
                for x in lib(enumerate_marked_pairs(m))? {
                    let image = psi(&x);
                    if psi(&image) != x {
                        return Err(format!("psi(psi({x})) = {}", psi(&image)));
                    }
                    if image.weight() != x.weight() {
                        return Err(format!("psi({x}) = {image} changes weight"));
                    }
                    let fixed = psi_case(&x).is_none();
                    if fixed != (image == x) || (!fixed && image.sign() == x.sign()) {
                        return Err(format!("psi({x}) = {image} breaks sign reversal"));
                    }
                }
            }
            Ok(())
        },
    );
    r.run(
        "theta-bijection",
        "theta is a sign-preserving bijection Fix(psi) -> good pairs with dmax(mu) = |sigma|",
        p.clone(),
        || {
            for m in 0..=n {
                let mut images = BTreeSet::new();
                for x in lib(enumerate_marked_pairs(m))? {
                    if psi_case(&x).is_some() {
                        continue;
                    }
                    let g = lib(theta(&x))?;
                    if g.sign() != x.sign() || g.weight() != m {
                        return Err(format!("theta({x}) = {g} changes sign or weight"));
                    }
                    let back = lib(theta_inverse(&g))?;
                    if back != x {
                        return Err(format!("theta^-1(theta({x})) = {back}"));
                    }
                    let split = lib(crate::bijections::fixed_point_split(&x))?;
                    if g.mu().dmax() != split.sigma as i64 {
                        return Err(format!("{x}: dmax({}) != |sigma| = {}", g.mu(), split.sigma));
                    }
                    if !images.insert(g.clone()) {
                        return Err(format!("theta is not injective at {g}"));
                    }
                }
                let all: BTreeSet<GoodPair> = lib(enumerate_good_pairs(m))?.into_iter().collect();
                if let Some(missed) = all.difference(&images).next() {
                    return Err(format!("good pair {missed} has no preimage"));
                }
            }
            Ok(())
        },
    );
    r.run(
        "signed-sum-chain",
        "sum over T_n = sum over good pairs = |{mu : lir(mu) even}| = [x^n] R",
        p.clone(),
        || {
            for m in 0..=n {
                let t: i64 = lib(enumerate_marked_pairs(m))?.iter().map(|x| x.sign()).sum();
                let g: i64 = lib(enumerate_good_pairs(m))?.iter().map(GoodPair::sign).sum();
                let even = lib(enumerate_compositions(m))?
                    .iter()
                    .filter(|c| c.lir() % 2 == 0)
                    .count() as i64;
                let want = rs.coeff(m);
                if [t, g, even].iter().any(|v| BigInt::from(*v) != *want) {
                    return Err(format!(
                        "n={m}: T {t}, good pairs {g}, even lir {even}, [x^n]R = {want}"
                    ));
                }
            }
            Ok(())
        },
    );
    r.run(
        "class-ladders",
        "classes of good pairs are ladders with ell in {lir, lir - 2}, signed sum 1 iff ell even",
        p.clone(),
        || {
            for m in 0..=n {
                let pairs = lib(enumerate_good_pairs(m))?;
                let mut covered = BTreeSet::new();
                for rep in pairs.iter().filter(|g| g.lambda().is_empty()) {
                    let ladder = lib(class_ladder(rep.mu()))?;
                    if !ladder_matches_lir(rep.mu(), &ladder) {
                        return Err(format!("{rep}: ell = {}, lir = {}", ladder.ell, rep.mu().lir()));
                    }
                    let want = i64::from(ladder.ell % 2 == 0);
                    if ladder.signed_sum() != want {
                        return Err(format!("{rep}: class signed sum {}", ladder.signed_sum()));
                    }
                    for g in ladder.class {
                        if g.representative() != *rep.mu() || !covered.insert(g.clone()) {
                            return Err(format!("{g} lies in more than one class"));
                        }
                    }
                }
                if covered.len() != pairs.len() {
                    return Err(format!("n={m}: classes cover {} of {} pairs", covered.len(), pairs.len()));
                }
            }
            Ok(())
        },
    );
}

/// `∪_k S_k^{k-i} × 𝒞_{n-k}`. The suffix carries `|τ| - 1` inversions, so
/// it is never empty.
fn factored_side(n: usize, i: usize) -> Result<BTreeSet<(Permutation, Permutation)>> {
    let mut out = BTreeSet::new();
    for k in 0..n {
        let Some(inv) = k.checked_sub(i) else { continue };
        let sigmas = enumerate_with_inversions(k, inv)?;
        let taus = enumerate_catalan_set(n - k)?;
        for s in &sigmas {
            for t in &taus {
                out.insert((s.clone(), t.clone()));
            }
        }
    }
    Ok(out)
}

fn factorization(r: &mut Runner, b: &Bounds) {
    let n = b.n;
    for i in 0..=2 {
        r.run(
            "prefix-factorization",
            "pi -> (sigma, tau) is a bijection S_n^{n-i-1} -> union of S_k^{k-i} x C_{n-k}",
            format!("n<={n}, i={i}"),
            || {
                for m in i + 1..=n {
                    let mut images = BTreeSet::new();
                    for pi in lib(enumerate_with_inversions(m, m - i - 1))? {
                        let f = lib(factor_few_inversions(&pi, i))?;
                        if f.recombine() != pi {
                            return Err(format!("{pi} factors as {f}, which recombines differently"));
                        }
                        if !images.insert((f.sigma, f.tau)) {
                            return Err(format!("{pi}: factorization is not injective"));
                        }
                    }
                    let target = lib(factored_side(m, i))?;
                    if images != target {
                        let missed = target.difference(&images).next();
                        return Err(match missed {
                            Some((s, t)) => format!("n={m}: ({s}, {t}) has no preimage"),
                            None => format!("n={m}: image leaves the target set"),
                        });
                    }
                }
                Ok(())
            },
        );
    }
    r.run("catalan-set-count", "|C_n| = C_{n-1}", format!("n<={n}"), || {
        for m in 1..=n {
            let count = lib(enumerate_catalan_set(m))?.len();
            if BigInt::from(count) != catalan_number(m - 1) {
                return Err(format!("n={m}: |C_n| = {count}, C_(n-1) = {}", catalan_number(m - 1)));
            }
        }
        Ok(())
    });
    r.run(
        "s1-minus-s0",
        "|S_n^{n-1}| = sum over k < n of |S_k^k| |C_{n-k}|",
        format!("n<={n}"),
        || {
            for m in 1..=n {
                let left = lib(enumerate_with_inversions(m, m - 1))?.len();
                let right: u64 = (0..m)
                    .map(|k| {
                        let s = enumerate_with_inversions(k, k)?.len() as u64;
                        Ok(s * enumerate_catalan_set(m - k)?.len() as u64)
                    })
                    .sum::<Result<u64>>()
                    .map_err(|e: Error| e.to_string())?;
                if left as u64 != right {
                    return Err(format!("n={m}: {left} vs {right}"));
                }
            }
            Ok(())
        },
    );
}

/// Number of weakly increasing subdiagonal sequences of length `len`.
fn weakly_increasing_subdiagonal(len: usize) -> u64 {
    fn go(pos: usize, len: usize, prev: usize) -> u64 {
        if pos > len {
            return 1;
        }
        (prev..pos).map(|v| go(pos + 1, len, v)).sum()
    }
    go(1, len, 0)
}

fn counts(r: &mut Runner, b: &Bounds) {
    let n = b.n;
    let p = format!("n<={n}");
    let rs = r_series(n.max(12), RMethod::Product).expect("product route cannot fail");

    r.run(
        "mahonian-oracle",
        "I_n(k) from the DP equals brute-force inversion counts",
        p.clone(),
        || {
            let table = mahonian_table(n);
            for m in 0..=n {
                let mut row = vec![0u64; m * m.saturating_sub(1) / 2 + 1];
                for pi in lib(all_permutations(m, crate::perm::PERMUTATION_BOUND))? {
                    row[pi.inversions()] += 1;
                }
                for (k, &c) in row.iter().enumerate() {
                    if BigInt::from(c) != table.get(m, k) {
                        return Err(format!("I_{m}({k}): brute force {c}, DP {}", table.get(m, k)));
                    }
                }
            }
            Ok(())
        },
    );
    r.run("lemma-cjs", "inv(pi) + comp(pi) >= |pi|", p.clone(), || {
        for m in 0..=n {
            for pi in lib(all_permutations(m, crate::perm::PERMUTATION_BOUND))? {
                if pi.inversions() + pi.component_count() < m {
                    return Err(pi.to_string());
                }
            }
        }
        Ok(())
    });
    r.run(
        "lemma-decomp",
        "pi = alpha + beta decomposable with inv(pi) <= |pi| + d implies inv(beta) <= |beta| + d + 1",
        p.clone(),
        || {
            for m in 0..=n {
                for pi in lib(all_permutations(m, crate::perm::PERMUTATION_BOUND))? {
                    let comps = pi.components();
                    if comps.len() < 2 {
                        continue;
                    }
                    let beta = comps[1..]
                        .iter()
                        .fold(Permutation::empty(), |acc, c| acc.direct_sum(c));
                    // The bound for the smallest admissible d implies all others.
                    let d = pi.inversions() as i64 - m as i64;
                    if beta.inversions() as i64 > beta.len() as i64 + d + 1 {
                        return Err(format!("{pi} with beta = {beta}"));
                    }
                }
            }
            Ok(())
        },
    );
    r.run(
        "lemma-inv-catalan",
        "weakly increasing subdiagonal sequences of length n number C_n",
        "n<=12".into(),
        || {
            for len in 0..=12 {
                let count = weakly_increasing_subdiagonal(len);
                if BigInt::from(count) != catalan_number(len) {
                    return Err(format!("length {len}: {count}"));
                }
            }
            Ok(())
        },
    );
    let split_max = n.min(10);
    r.run(
        "lemma-split",
        "lir(mu) even and lambda nonempty imply lir(lambda mu) odd, with cut(lambda mu) as stated",
        format!("total<={split_max}"),
        || {
            for total in 1..=split_max {
                for a in 1..=total {
                    for lambda in lib(enumerate_partitions(a))? {
                        for mu in lib(enumerate_compositions(total - a))? {
                            if mu.lir() % 2 != 0 {
                                continue;
                            }
                            lemma_split_case(&lambda, &mu)?;
                        }
                    }
                }
            }
            Ok(())
        },
    );
    r.run(
        "signed-sums",
        "signed sums over T_n and good pairs, and |Fix_n(phi)|, equal [x^n] R",
        p.clone(),
        || {
            for m in 0..=n {
                let t: i64 = lib(enumerate_marked_pairs(m))?.iter().map(|x| x.sign()).sum();
                let g: i64 = lib(enumerate_good_pairs(m))?.iter().map(GoodPair::sign).sum();
                let f = lib(phi_fixed_points(m))?.len() as i64;
                let want = rs.coeff(m);
                for (what, v) in [("T_n", t), ("good pairs", g), ("Fix_n(phi)", f)] {
                    if BigInt::from(v) != *want {
                        return Err(format!("n={m}: {what} gives {v}, [x^n]R = {want}"));
                    }
                }
            }
            Ok(())
        },
    );
    r.run(
        "m-blocks",
        "|M_n| = [x^n] M, and every mu with lir(mu) even factors uniquely into blocks",
        "n<=12".into(),
        || {
            let m = m_series(12);
            for k in 0..=12 {
                let blocks = lib(enumerate_m_blocks(k))?;
                if BigInt::from(blocks.len()) != *m.coeff(k) {
                    return Err(format!("n={k}: {} blocks, [x^n]M = {}", blocks.len(), m.coeff(k)));
                }
                for mu in lib(enumerate_compositions(k))? {
                    if mu.lir() % 2 != 0 {
                        continue;
                    }
                    let factors = crate::bijections::mblocks::all_block_factorizations(mu.parts());
                    if factors.len() != 1 {
                        return Err(format!("{mu} has {} block factorizations", factors.len()));
                    }
                    let blocks = lib(m_block_factorization(&mu))?;
                    let joined: Vec<usize> =
                        blocks.iter().flat_map(|c| c.parts().iter().copied()).collect();
                    if joined != mu.parts() || !blocks.iter().all(|c| is_m_block(c.parts())) {
                        return Err(format!("{mu}: bad blocks"));
                    }
                }
            }
            Ok(())
        },
    );
}

fn lemma_split_case(lambda: &Partition, mu: &Composition) -> Witnessed {
    let dec = lambda.decreasing();
    let joined = mu.prepend(&dec);
    let show = || format!("lambda = {lambda}, mu = {mu}");
    if lir(joined.parts()) % 2 != 1 {
        return Err(format!("{}: lir(lambda mu) = {}", show(), joined.lir()));
    }
    let a = *dec.last().expect("lambda is nonempty");
    let got = cut(&joined);
    let (head, tail): (Vec<usize>, &[usize]) = match mu.first() {
        None => (dec.clone(), &[]),
        Some(b) => {
            let c = cut(mu);
            // lir(mu) even forces the decreasing prefix of mu to be mu_1 alone.
            if c.head.len() != 1 {
                return Err(format!("{}: cut(mu) head {} is not a single part", show(), c.head));
            }
            if a < b {
                (dec.clone(), mu.parts())
            } else {
                let mut h = dec.clone();
                h.push(b);
                (h, &mu.parts()[1..])
            }
        }
    };
    if got.head.decreasing() != head || got.tail.parts() != tail {
        return Err(format!("{}: cut(lambda mu) = ({}, {})", show(), got.head, got.tail));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            order: 20,
            n: 6,
            r_order: 40,
        }
    }

    #[test]
    fn every_suite_passes_at_small_bounds() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &small());
            assert!(report.all_passed(), "{report}");
            assert_eq!(report.summary.total, report.checks.len());
        }
    }

    #[test]
    fn failures_carry_witnesses() {
        let mut r = Runner::default();
        r.run("broken", "1 = 2", String::new(), || Err("coefficient 0".into()));
        r.run("fine", "1 = 1", String::new(), || Ok(()));
        assert_eq!(r.checks[0].status, Status::Fail);
        assert_eq!(r.checks[0].witness.as_deref(), Some("coefficient 0"));
        assert!(r.checks[1].witness.is_none());
    }

    #[test]
    fn report_json_round_trip() {
        let report = run_suite(Suite::Counts, &small());
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<VerificationReport>(&json).unwrap(), report);
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
