//! Truncated formal power series with exact integer coefficients.
//!
//! A series of order `N` is known modulo `x^(N+1)` and always stores exactly
//! `N + 1` coefficients. Binary operations truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSeries {
    coefficients: Vec<BigInt>,
}

impl IntegerSeries {
    /// Takes `coefficients` as `c_0..=c_order`, padding with zeros or
    /// dropping terms past `order`.
    pub fn from_coefficients<T: Into<BigInt>>(
        coefficients: impl IntoIterator<Item = T>,
        order: usize,
    ) -> Self {
        let mut coefficients: Vec<BigInt> = coefficients
            .into_iter()
            .take(order + 1)
            .map(Into::into)
            .collect();
        coefficients.resize(order + 1, BigInt::zero());
        Self { coefficients }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coefficients: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(1, 1, order)
    }

    /// `coefficient · x^degree`, which is zero when `degree > order`.
    pub fn monomial(coefficient: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coefficients[degree] = coefficient.into();
        }
        s
    }

    /// `1 / (1 - x^step)`, that is `1 + x^step + x^(2 step) + ...`.
    pub fn geometric(step: usize, order: usize) -> Self {
        assert!(step > 0, "geometric series needs a positive step");
        let mut s = Self::zero(order);
        for i in (0..=order).step_by(step) {
            s.coefficients[i] = BigInt::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.coefficients
    }

    /// Coefficient of `x^n`; panics past the truncation order, where the
    /// coefficient is unknown.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.order(),
            "coefficient {n} is beyond truncation order {}",
            self.order()
        );
        &self.coefficients[n]
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coefficients[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot raise the order");
        Self {
            coefficients: self.coefficients[..=order].to_vec(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `x^k`, dropping terms that leave the window.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in k..=order {
            out.coefficients[i] = self.coefficients[i - k].clone();
        }
        out
    }

    /// `1 / self`; needs a constant term of `±1` so the result stays integral.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let a = &self.coefficients[k];
                if !a.is_zero() {
                    acc += a * &inv[n - k];
                }
            }
            // c0 is its own inverse.
            inv.push(-(acc * c0));
        }
        Ok(Self { coefficients: inv })
    }

    /// `self ∘ inner`, by Horner's rule in the truncated ring.
    pub fn compose(&self, inner: &IntegerSeries) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonZeroConstant(inner.constant_term().to_string()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coefficients[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coefficients[0] += c;
        }
        Ok(acc)
    }

    /// `d/dx`; the order drops by one (an order-0 series stays order 0).
    pub fn derivative(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0);
        }
        Self {
            coefficients: (1..=order)
                .map(|n| &self.coefficients[n] * BigInt::from(n))
                .collect(),
        }
    }

    /// `x · d/dx`: coefficient `n` is multiplied by `n`.
    pub fn pointing(&self) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .enumerate()
                .map(|(n, c)| c * BigInt::from(n))
                .collect(),
        }
    }

    /// `Π_{k=1}^{k_max} factor(k)`, truncated to `order`.
    pub fn product_family(
        order: usize,
        k_max: usize,
        factor: impl Fn(usize) -> IntegerSeries,
    ) -> Self {
        (1..=k_max).fold(Self::one(order), |acc, k| &acc * &factor(k))
    }
}

impl Add for &IntegerSeries {
    type Output = IntegerSeries;

    fn add(self, rhs: &IntegerSeries) -> IntegerSeries {
        let order = self.order().min(rhs.order());
        IntegerSeries {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] + &rhs.coefficients[i])
                .collect(),
        }
    }
}

impl Sub for &IntegerSeries {
    type Output = IntegerSeries;

    fn sub(self, rhs: &IntegerSeries) -> IntegerSeries {
        let order = self.order().min(rhs.order());
        IntegerSeries {
            coefficients: (0..=order)
                .map(|i| &self.coefficients[i] - &rhs.coefficients[i])
                .collect(),
        }
    }
}

impl Mul for &IntegerSeries {
    type Output = IntegerSeries;

    fn mul(self, rhs: &IntegerSeries) -> IntegerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coefficients[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntegerSeries { coefficients: out }
    }
}

impl Neg for &IntegerSeries {
    type Output = IntegerSeries;

    fn neg(self) -> IntegerSeries {
        IntegerSeries {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntegerSeries {
            type Output = IntegerSeries;
            fn $method(self, rhs: IntegerSeries) -> IntegerSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntegerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (n, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match (n, c.abs().is_one()) {
                (0, _) => c.abs().to_string(),
                (1, true) => "x".to_string(),
                (1, false) => format!("{}x", c.abs()),
                (_, true) => format!("x^{n}"),
                (_, false) => format!("{}x^{n}", c.abs()),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, term));
        }
        let mut out = String::new();
        for (i, (sign, term)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => out.push('-'),
                (0, _) => {}
                (_, s) => {
                    out.push(' ');
                    out.push_str(s);
                    out.push(' ');
                }
            }
            out.push_str(term);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} + O(x^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coefficients: Vec<String>,
}

impl Serialize for IntegerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coefficients: self.coefficients.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntegerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coefficients.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coefficients.len()
            )));
        }
        let coefficients = raw
            .coefficients
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Self { coefficients })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(coeffs: &[i64], order: usize) -> IntegerSeries {
        IntegerSeries::from_coefficients(coeffs.iter().copied(), order)
    }

    fn ints(series: &IntegerSeries) -> Vec<i64> {
        series
            .coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&s(&[1, 1], 5) * &s(&[1, -1], 5), s(&[1, 0, -1], 5));
        assert_eq!((&s(&[1, 2, 3], 2) + &s(&[1], 6)).order(), 2);
        assert_eq!(ints(&(&s(&[5, 1], 3) - &s(&[2, 1, 1], 3))), vec![3, 0, -1, 0]);
    }

    #[test]
    fn inverses() {
        assert_eq!(ints(&s(&[1, -1], 6).inverse().unwrap()), vec![1; 7]);
        assert_eq!(ints(&s(&[-1], 3).inverse().unwrap()), vec![-1, 0, 0, 0]);
        assert_eq!(s(&[2, 1], 4).inverse(), Err(Error::NonUnitConstant("2".into())));
        // Comp(x) = (1 - x) / (1 - 2x)
        let comp = &s(&[1, -1], 6) * &s(&[1, -2], 6).inverse().unwrap();
        assert_eq!(ints(&comp), vec![1, 1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn composition() {
        let f = s(&[3, 1, 4, 1, 5], 4);
        assert_eq!(f.compose(&IntegerSeries::x(4)).unwrap(), f);
        assert!(f.compose(&s(&[1, 1], 4)).is_err());
        // 1/(1-x) ∘ 2x = 1/(1-2x)
        let geo = IntegerSeries::geometric(1, 5);
        assert_eq!(ints(&geo.compose(&s(&[0, 2], 5)).unwrap()), vec![1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn derivatives() {
        assert_eq!(ints(&s(&[1, 1, 1], 2).pointing()), vec![0, 1, 2]);
        assert_eq!(ints(&s(&[7], 3).derivative()), vec![0, 0, 0]);
        let d = s(&[1, 2, 3, 4], 3).derivative();
        assert_eq!((d.order(), ints(&d)), (2, vec![2, 6, 12]));
    }

    #[test]
    fn product_families() {
        let euler = IntegerSeries::product_family(7, 7, |k| {
            &IntegerSeries::one(7) - &IntegerSeries::monomial(1, k, 7)
        });
        assert_eq!(ints(&euler), vec![1, -1, -1, 0, 0, 1, 0, 1]);
        let par = IntegerSeries::product_family(6, 6, |k| IntegerSeries::geometric(k, 6));
        assert_eq!(ints(&par), vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(par.inverse().unwrap(), euler.truncate(6));
        assert_eq!(IntegerSeries::product_family(4, 0, |_| unreachable!()), IntegerSeries::one(4));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(s(&[1, -1, 0, 2], 3).to_string(), "1 - x + 2x^3 + O(x^4)");
        let big = s(&[0, 1], 2).scale(&BigInt::from(10).pow(30));
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, r#"{"order":2,"coefficients":["0","1000000000000000000000000000000","0"]}"#);
        assert_eq!(serde_json::from_str::<IntegerSeries>(&json).unwrap(), big);
        assert!(serde_json::from_str::<IntegerSeries>(r#"{"order":2,"coefficients":["1"]}"#).is_err());
    }

    fn small_series() -> impl Strategy<Value = IntegerSeries> {
        (0usize..8).prop_flat_map(|order| {
            prop::collection::vec(-20i64..20, order + 1)
                .prop_map(move |c| IntegerSeries::from_coefficients(c, order))
        })
    }

    fn no_constant() -> impl Strategy<Value = IntegerSeries> {
        small_series().prop_map(|mut s| {
            s.coefficients[0] = BigInt::zero();
            s
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn inverse_is_two_sided(mut a in small_series(), sign in prop::bool::ANY) {
            a.coefficients[0] = BigInt::from(if sign { 1 } else { -1 });
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, IntegerSeries::one(a.order()));
        }

        #[test]
        fn compose_respects_products(f in small_series(), g in small_series(), h in no_constant()) {
            let lhs = (&f * &g).compose(&h).unwrap();
            let rhs = &f.compose(&h).unwrap() * &g.compose(&h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pointing_obeys_leibniz(f in small_series(), g in small_series()) {
            let lhs = (&f * &g).pointing();
            let rhs = &(&f.pointing() * &g) + &(&f * &g.pointing());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn json_round_trip(a in small_series()) {
            let json = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<IntegerSeries>(&json).unwrap(), a);
        }
    }
}
