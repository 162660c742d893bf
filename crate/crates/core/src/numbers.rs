//! Mahonian numbers and the generating functions built from them.
//!
//! `I_n(k)` counts permutations of `[n]` with `k` inversions. The series
//! `S_i(x) = Σ_n I_n(n - i) x^n` are its subdiagonals; each is computed here
//! by three independent routes so the routes can be checked against one
//! another. The same goes for `R(x)`, the series with
//! `S_0(x) = R(x C(x))`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::compositions::{divisor_sum, enumerate_partitions_bounded, partition_counts};
use crate::error::{Error, Result};
use crate::series::IntegerSeries;

/// Rows `I_n(0..=n(n-1)/2)` for `n = 0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MahonianTable {
    rows: Vec<Vec<BigInt>>,
}

impl MahonianTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// `I_n(k)`, which is zero for `k` past `n(n-1)/2`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }
}

/// Expands `(1)(1 + x)(1 + x + x^2)...(1 + ... + x^(n-1))` row by row.
pub fn mahonian_table(n_max: usize) -> MahonianTable {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let len = n * (n - 1) / 2 + 1;
        // Row n at k sums row n-1 over the window [k - n + 1, k].
        let mut prefix = Vec::with_capacity(prev.len() + 1);
        prefix.push(BigInt::zero());
        for v in prev {
            let next = prefix.last().unwrap() + v;
            prefix.push(next);
        }
        let row = (0..len)
            .map(|k| {
                let hi = (k + 1).min(prev.len());
                let lo = (k + 1).saturating_sub(n);
                &prefix[hi] - &prefix[lo.min(hi)]
            })
            .collect();
        rows.push(row);
    }
    MahonianTable { rows }
}

/// A pentagonal index `j ≥ 1` with `u_j = j(3j-1)/2` and `u'_j = j(3j+1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PentagonalIndex(pub u64);

impl PentagonalIndex {
    pub fn pentagonal(self) -> u64 {
        self.0 * (3 * self.0 - 1) / 2
    }

    pub fn conjugate(self) -> u64 {
        self.0 * (3 * self.0 + 1) / 2
    }
}

/// `binom(top, bottom)` for any integer `top`, zero when `bottom < 0`.
pub fn binomial(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..bottom {
        num *= BigInt::from(top - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// One binomial term `sign · binom(top, bottom)` of the Knuth-Netto sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTerm {
    pub negative: bool,
    pub top: i64,
    pub bottom: i64,
}

impl BinomialTerm {
    pub fn value(&self) -> BigInt {
        let v = binomial(self.top, self.bottom);
        if self.negative {
            -v
        } else {
            v
        }
    }
}

impl fmt::Display for BinomialTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "+" };
        write!(f, "{sign} binom({}, {})", self.top, self.bottom)
    }
}

/// The nonvanishing terms of the Knuth-Netto formula for `I_n(k)`, in the
/// order: leading term, then for each `j` the `u_j + j` term followed by
/// the `u_j` term.
pub fn knuth_netto_terms(n: usize, k: usize) -> Result<Vec<BinomialTerm>> {
    if k > n {
        return Err(Error::KnuthNettoRange { n, k });
    }
    let (n, k) = (n as i64, k as i64);
    let mut terms = vec![BinomialTerm {
        negative: false,
        top: n + k - 1,
        bottom: k,
    }];
    for j in 1.. {
        let u = PentagonalIndex(j as u64).pentagonal() as i64;
        if k - u < 0 {
            break;
        }
        let negative = j % 2 == 1;
        if k - u - j >= 0 {
            terms.push(BinomialTerm {
                negative,
                top: n + k - u - j - 1,
                bottom: k - u - j,
            });
        }
        terms.push(BinomialTerm {
            negative,
            top: n + k - u - 1,
            bottom: k - u,
        });
    }
    Ok(terms)
}

/// `I_n(k)` in closed form; valid for `k ≤ n` only.
pub fn knuth_netto(n: usize, k: usize) -> Result<BigInt> {
    Ok(knuth_netto_terms(n, k)?.iter().map(BinomialTerm::value).sum())
}

pub fn catalan_number(n: usize) -> BigInt {
    let n = n as i64;
    let (q, r) = binomial(2 * n, n).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// `C(x)` from `C_{n+1} = Σ_{i=0}^n C_i C_{n-i}`.
pub fn catalan_series(order: usize) -> IntegerSeries {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for n in 0..order {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    IntegerSeries::from_coefficients(c, order)
}

/// `x C(x)`, the substitution linking consecutive subdiagonals.
pub fn x_catalan(order: usize) -> IntegerSeries {
    catalan_series(order).shift_up(1)
}

/// `Par(x) = Π_k 1/(1 - x^k)`.
pub fn par_series(order: usize) -> IntegerSeries {
    IntegerSeries::product_family(order, order, |k| IntegerSeries::geometric(k, order))
}

/// `Π_k (1 - x^k)`.
pub fn euler_product(order: usize) -> IntegerSeries {
    IntegerSeries::product_family(order, order, |k| {
        &IntegerSeries::one(order) - &IntegerSeries::monomial(1, k, order)
    })
}

/// `Comp(x) = (1 - x)/(1 - 2x)`.
pub fn comp_series(order: usize) -> IntegerSeries {
    let numerator = IntegerSeries::from_coefficients([1, -1], order);
    let denominator = IntegerSeries::from_coefficients([1, -2], order);
    &numerator * &denominator.inverse().expect("unit constant term")
}

/// `M(x) = 1 + (x/(1 - x) - 1) Par(x)`.
pub fn m_series(order: usize) -> IntegerSeries {
    let x_over = IntegerSeries::geometric(1, order).shift_up(1);
    let factor = &x_over - &IntegerSeries::one(order);
    &IntegerSeries::one(order) + &(&factor * &par_series(order))
}

/// `p(0) + ... + p(n-1) - p(n)` from the pentagonal recurrence.
pub fn m_coefficient_formula(n: usize) -> BigInt {
    let p = partition_counts(n);
    let below: BigInt = p[..n].iter().sum();
    below - &p[n]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubdiagonalMethod {
    /// Read `I_n(n - i)` off the Mahonian table.
    DiagonalOfDp,
    /// `(x C(x))^i S_0(x)` with `S_0` read off the table.
    CatalanShift,
    /// `(x C(x))^i R(x C(x))`.
    ViaR,
}

impl SubdiagonalMethod {
    pub const ALL: [SubdiagonalMethod; 3] = [Self::DiagonalOfDp, Self::CatalanShift, Self::ViaR];

    pub fn name(self) -> &'static str {
        match self {
            Self::DiagonalOfDp => "dp",
            Self::CatalanShift => "catalan-shift",
            Self::ViaR => "via-r",
        }
    }
}

impl FromStr for SubdiagonalMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown S_i method {s:?} (dp, catalan-shift, via-r)")))
    }
}

fn diagonal(table: &MahonianTable, i: usize, order: usize) -> IntegerSeries {
    IntegerSeries::from_coefficients(
        (0..=order).map(|n| if n < i { BigInt::zero() } else { table.get(n, n - i) }),
        order,
    )
}

fn power(base: &IntegerSeries, exp: usize) -> IntegerSeries {
    (0..exp).fold(IntegerSeries::one(base.order()), |acc, _| &acc * base)
}

pub fn subdiagonal_series(i: usize, order: usize, method: SubdiagonalMethod) -> IntegerSeries {
    match method {
        SubdiagonalMethod::DiagonalOfDp => diagonal(&mahonian_table(order), i, order),
        SubdiagonalMethod::CatalanShift => {
            let s0 = diagonal(&mahonian_table(order), 0, order);
            &power(&x_catalan(order), i) * &s0
        }
        SubdiagonalMethod::ViaR => {
            let xc = x_catalan(order);
            let r = r_series(order, RMethod::Product).expect("product route cannot fail");
            let s0 = r.compose(&xc).expect("x C(x) has no constant term");
            &power(&xc, i) * &s0
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RMethod {
    /// `Comp(x) / Par(x)`.
    Product,
    /// `1 / (1 - M(x))`.
    InverseOfOneMinusM,
    /// `r_n = (1/n) Σ_k r_{n-k} (2^k - σ(k) - 1)`.
    DivisorRecursion,
}

impl RMethod {
    pub const ALL: [RMethod; 3] = [Self::Product, Self::InverseOfOneMinusM, Self::DivisorRecursion];

    pub fn name(self) -> &'static str {
        match self {
            Self::Product => "product",
            Self::InverseOfOneMinusM => "inverse-one-minus-m",
            Self::DivisorRecursion => "divisor-recursion",
        }
    }
}

impl FromStr for RMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
            Error::Parse(format!(
                "unknown R method {s:?} (product, inverse-one-minus-m, divisor-recursion)"
            ))
        })
    }
}

/// `2^n - σ(n) - 1`.
pub fn pointed_count(n: usize) -> BigInt {
    assert!(n >= 1, "pointed_count is defined for n >= 1");
    let sigma = divisor_sum(n as u64).expect("n >= 1");
    (BigInt::one() << n) - BigInt::from(sigma) - 1
}

/// `Σ_{n=1}^{order} (2^n - σ(n) - 1) x^n`.
pub fn pointed_series(order: usize) -> IntegerSeries {
    IntegerSeries::from_coefficients(
        (0..=order).map(|n| if n == 0 { BigInt::zero() } else { pointed_count(n) }),
        order,
    )
}

pub fn r_series(order: usize, method: RMethod) -> Result<IntegerSeries> {
    match method {
        RMethod::Product => Ok(&comp_series(order) * &par_series(order).inverse()?),
        RMethod::InverseOfOneMinusM => (&IntegerSeries::one(order) - &m_series(order)).inverse(),
        RMethod::DivisorRecursion => {
            let f: Vec<BigInt> = (0..=order)
                .map(|k| if k == 0 { BigInt::zero() } else { pointed_count(k) })
                .collect();
            let mut r = vec![BigInt::one()];
            for n in 1..=order {
                let total: BigInt = (1..=n).map(|k| &r[n - k] * &f[k]).sum();
                let (q, rem) = total.div_rem(&BigInt::from(n));
                if !rem.is_zero() {
                    return Err(Error::IdentityViolation(format!(
                        "divisor recursion: {n} does not divide {total}"
                    )));
                }
                r.push(q);
            }
            Ok(IntegerSeries::from_coefficients(r, order))
        }
    }
}

/// Lambert series `Σ_{k ≥ 1} a_k x^k / (1 - x^k)`.
pub fn lambert_series(order: usize, a: impl Fn(usize) -> BigInt) -> IntegerSeries {
    let mut out = IntegerSeries::zero(order);
    for k in 1..=order {
        // x^k / (1 - x^k)
        let term = IntegerSeries::geometric(k, order).shift_up(k);
        out = &out + &term.scale(&a(k));
    }
    out
}

/// First coefficient index at which two series differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub index: usize,
    pub expected: BigInt,
    pub actual: BigInt,
}

impl fmt::Display for CoefficientMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient {}: expected {}, got {}",
            self.index, self.expected, self.actual
        )
    }
}

/// Compares coefficients `from..=to` of two series.
pub fn first_mismatch(
    expected: &IntegerSeries,
    actual: &IntegerSeries,
    from: usize,
    to: usize,
) -> Option<CoefficientMismatch> {
    (from..=to).find_map(|n| {
        let (e, a) = (expected.coeff(n), actual.coeff(n));
        (e != a).then(|| CoefficientMismatch {
            index: n,
            expected: e.clone(),
            actual: a.clone(),
        })
    })
}

/// Checks `[x^n] x R'(x) / R(x) = 2^n - σ(n) - 1` for `1 ≤ n ≤ order`,
/// with `σ` taken from the Lambert series `Σ k x^k/(1 - x^k)` and checked
/// against the direct divisor sum.
pub fn log_derivative_mismatch(order: usize) -> Option<CoefficientMismatch> {
    let sigma = lambert_series(order, BigInt::from);
    let direct = IntegerSeries::from_coefficients(
        (0..=order).map(|n| if n == 0 { 0 } else { divisor_sum(n as u64).unwrap() }),
        order,
    );
    if let Some(m) = first_mismatch(&direct, &sigma, 1, order) {
        return Some(m);
    }
    // 2^n - 1 - σ(n) assembled from the Lambert coefficients.
    let expected = IntegerSeries::from_coefficients(
        (0..=order).map(|n| {
            if n == 0 {
                BigInt::zero()
            } else {
                (BigInt::one() << n) - 1 - sigma.coeff(n)
            }
        }),
        order,
    );
    let r = r_series(order, RMethod::Product).expect("product route cannot fail");
    let actual = &r.pointing() * &r.inverse().expect("R has constant term 1");
    first_mismatch(&expected, &actual, 1, order)
}

pub fn log_derivative_check(order: usize) -> bool {
    log_derivative_mismatch(order).is_none()
}

/// Checks `[x^n] x M'(x) / (1 - M(x)) = 2^n - σ(n) - 1` for `1 ≤ n ≤ order`.
pub fn pointed_structure_mismatch(order: usize) -> Option<CoefficientMismatch> {
    let m = m_series(order);
    let one_minus = &IntegerSeries::one(order) - &m;
    let actual = &m.pointing() * &one_minus.inverse().expect("M has constant term 0");
    first_mismatch(&pointed_series(order), &actual, 1, order)
}

pub fn pointed_structure_check(order: usize) -> bool {
    pointed_structure_mismatch(order).is_none()
}

/// Largest `n` accepted by [`cycle_type_formula`].
pub const CYCLE_TYPE_BOUND: usize = 30;

/// `r_n` as the average over `Sym(n)` of `Π_{cycles ℓ} (2^ℓ - σ(ℓ) - 1)`,
/// grouped by cycle type: `Σ_λ Π_i f(λ_i) / z_λ`.
pub fn cycle_type_formula(n: usize) -> Result<BigInt> {
    let partitions = enumerate_partitions_bounded(n, CYCLE_TYPE_BOUND)?;
    let f: Vec<BigInt> = (0..=n)
        .map(|l| if l == 0 { BigInt::zero() } else { pointed_count(l) })
        .collect();
    let mut total = BigRational::zero();
    for lambda in &partitions {
        let numerator: BigInt = lambda.parts().iter().map(|&l| f[l].clone()).product();
        // z_λ = Π_ℓ ℓ^{m_ℓ} m_ℓ!
        let mut z = BigInt::one();
        let parts = lambda.parts();
        let mut i = 0;
        while i < parts.len() {
            let l = parts[i];
            let mult = parts[i..].iter().take_while(|&&p| p == l).count();
            z *= BigInt::from(l).pow(mult as u32);
            z *= (1..=mult).map(BigInt::from).product::<BigInt>();
            i += mult;
        }
        total += BigRational::new(numerator, z);
    }
    if !total.is_integer() {
        return Err(Error::IdentityViolation(format!(
            "cycle type formula at n = {n} is not integral: {total}"
        )));
    }
    Ok(total.to_integer())
}
