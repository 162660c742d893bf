//! Python bindings: series, permutations, the bijection domains and the
//! verification suites.
//!
//! Elements are built from compact notation (`"11,62;643452"`) or from the
//! JSON form; results come back as objects with a compact `str()`.

use mahonian::bijections as bij;
use mahonian::numbers::{self, RMethod, SubdiagonalMethod};
use mahonian::{notation, verify, Error, IntegerSeries};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

create_exception!(mahonian, MahonianError, PyValueError);
create_exception!(mahonian, PreconditionError, MahonianError);
create_exception!(mahonian, BoundExceededError, MahonianError);
create_exception!(mahonian, IdentityViolationError, MahonianError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::BoundExceeded { .. } => BoundExceededError::new_err(msg),
        Error::IdentityViolation(_) => IdentityViolationError::new_err(msg),
        Error::Parse(_) => MahonianError::new_err(msg),
        _ => PreconditionError::new_err(msg),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for mahonian::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

fn json_of<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values always serialize")
}

/// A truncated power series with integer coefficients.
#[pyclass(name = "Series", module = "mahonian", frozen, from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PySeries(IntegerSeries);

#[pymethods]
impl PySeries {
    #[new]
    fn new(coefficients: Vec<BigInt>, order: usize) -> Self {
        Self(IntegerSeries::from_coefficients(coefficients, order))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn coefficients(&self) -> Vec<BigInt> {
        self.0.coefficients().to_vec()
    }

    fn __getitem__(&self, n: usize) -> PyResult<BigInt> {
        if n > self.0.order() {
            return Err(pyo3::exceptions::PyIndexError::new_err(format!(
                "coefficient {n} is past the truncation order {}",
                self.0.order()
            )));
        }
        Ok(self.0.coeff(n).clone())
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn inverse(&self) -> PyResult<Self> {
        self.0.inverse().py().map(Self)
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    fn compose(&self, inner: &Self) -> PyResult<Self> {
        self.0.compose(&inner.0).py().map(Self)
    }

    fn derivative(&self) -> Self {
        Self(self.0.derivative())
    }

    /// `x f'(x)`.
    fn pointing(&self) -> Self {
        Self(self.0.pointing())
    }

    fn truncate(&self, order: usize) -> Self {
        Self(self.0.truncate(order))
    }

    fn to_json(&self) -> String {
        json_of(&self.0)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s)
            .map(Self)
            .map_err(|e| MahonianError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.0)
    }
}

#[pyclass(name = "Permutation", module = "mahonian", frozen, from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPermutation(mahonian::perm::Permutation);

#[pymethods]
impl PyPermutation {
    /// From a list of values or a compact string such as `"4213675"`.
    #[new]
    fn new(values: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = values.extract::<String>() {
            return notation::parse_permutation(&s).py().map(Self);
        }
        let v: Vec<usize> = values
            .extract()
            .map_err(|_| PyTypeError::new_err("expected a string or a list of integers"))?;
        mahonian::perm::Permutation::new(v).py().map(Self)
    }

    #[getter]
    fn values(&self) -> Vec<usize> {
        self.0.values().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn inversions(&self) -> usize {
        self.0.inversions()
    }

    fn inversion_table(&self) -> Vec<usize> {
        self.0.inversion_table().entries().to_vec()
    }

    fn cumulative_inversion_table(&self) -> Vec<usize> {
        self.0.cumulative_inversion_table()
    }

    fn components(&self) -> Vec<Self> {
        self.0.components().into_iter().map(Self).collect()
    }

    fn direct_sum(&self, other: &Self) -> Self {
        Self(self.0.direct_sum(&other.0))
    }

    fn is_catalan_member(&self) -> bool {
        self.0.is_catalan_member()
    }

    /// `(sigma, tau)` for a permutation of length n with n - i - 1
    /// inversions.
    #[pyo3(signature = (i = 0))]
    fn factor(&self, i: usize) -> PyResult<(Self, Self)> {
        let f = bij::factor_few_inversions(&self.0, i).py()?;
        Ok((Self(f.sigma), Self(f.tau)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }
}

/// An element `(λ¹, ..., λᵏ; μ)` of `ℛ_n`.
#[pyclass(name = "SignedTuple", module = "mahonian", frozen, from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PySignedTuple(bij::SignedTuple);

#[pymethods]
impl PySignedTuple {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        notation::parse_signed_tuple(s).py().map(Self)
    }

    #[getter]
    fn sign(&self) -> i64 {
        self.0.sign()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn phi(&self) -> Self {
        Self(bij::phi(&self.0))
    }

    fn to_json(&self) -> String {
        json_of(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedTuple('{}')", self.0)
    }
}

/// An element `(S, β)` of `T_n`.
#[pyclass(name = "MarkedPair", module = "mahonian", frozen, from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyMarkedPair(bij::MarkedPair);

#[pymethods]
impl PyMarkedPair {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        notation::parse_marked_pair(s).py().map(Self)
    }

    #[getter]
    fn marks(&self) -> Vec<usize> {
        self.0.marks().iter().copied().collect()
    }

    #[getter]
    fn beta(&self) -> Vec<usize> {
        self.0.beta().entries().to_vec()
    }

    #[getter]
    fn sign(&self) -> i64 {
        self.0.sign()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn psi(&self) -> Self {
        Self(bij::psi(&self.0))
    }

    fn is_psi_fixed(&self) -> bool {
        bij::psi_case(&self.0).is_none()
    }

    fn theta(&self) -> PyResult<PyGoodPair> {
        bij::theta(&self.0).py().map(PyGoodPair)
    }

    fn to_json(&self) -> String {
        json_of(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("MarkedPair('{}')", self.0)
    }
}

/// A good pair `(λ, μ) ⊩ n`.
#[pyclass(name = "GoodPair", module = "mahonian", frozen, from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGoodPair(bij::GoodPair);

#[pymethods]
impl PyGoodPair {
    #[new]
    fn new(s: &str) -> PyResult<Self> {
        notation::parse_good_pair(s).py().map(Self)
    }

    #[getter]
    fn lam(&self) -> Vec<usize> {
        self.0.lambda().parts().to_vec()
    }

    #[getter]
    fn mu(&self) -> Vec<usize> {
        self.0.mu().parts().to_vec()
    }

    #[getter]
    fn sign(&self) -> i64 {
        self.0.sign()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn theta_inverse(&self) -> PyResult<PyMarkedPair> {
        bij::theta_inverse(&self.0).py().map(PyMarkedPair)
    }

    fn to_json(&self) -> String {
        json_of(&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GoodPair('{}')", self.0)
    }
}

/// Rows `0..=n_max` of the Mahonian triangle.
#[pyfunction]
fn mahonian_table(n_max: usize) -> Vec<Vec<BigInt>> {
    numbers::mahonian_table(n_max).rows().to_vec()
}

#[pyfunction]
fn knuth_netto(n: usize, k: usize) -> PyResult<BigInt> {
    numbers::knuth_netto(n, k).py()
}

/// `S_i` to the given order. Methods: `dp`, `catalan-shift`, `via-r`.
#[pyfunction]
#[pyo3(signature = (i, order, method = "dp"))]
fn subdiagonal_series(i: usize, order: usize, method: &str) -> PyResult<PySeries> {
    let m: SubdiagonalMethod = method.parse().py()?;
    Ok(PySeries(numbers::subdiagonal_series(i, order, m)))
}

/// `R` to the given order. Methods: `product`, `inverse-one-minus-m`,
/// `divisor-recursion`.
#[pyfunction]
#[pyo3(signature = (order, method = "product"))]
fn r_series(order: usize, method: &str) -> PyResult<PySeries> {
    let m: RMethod = method.parse().py()?;
    numbers::r_series(order, m).py().map(PySeries)
}

#[pyfunction]
fn m_series(order: usize) -> PySeries {
    PySeries(numbers::m_series(order))
}

#[pyfunction]
fn catalan_series(order: usize) -> PySeries {
    PySeries(numbers::catalan_series(order))
}

#[pyfunction]
fn cycle_type_formula(n: usize) -> PyResult<BigInt> {
    numbers::cycle_type_formula(n).py()
}

/// Splits a composition with even `lir` into its blocks.
#[pyfunction]
fn m_blocks(mu: &str) -> PyResult<Vec<Vec<usize>>> {
    let mu = notation::parse_composition(mu).py()?;
    let blocks = bij::m_block_factorization(&mu).py()?;
    Ok(blocks.into_iter().map(|b| b.into_parts()).collect())
}

#[pyfunction]
fn enumerate_catalan_set(n: usize) -> PyResult<Vec<PyPermutation>> {
    Ok(mahonian::perm::enumerate_catalan_set(n)
        .py()?
        .into_iter()
        .map(PyPermutation)
        .collect())
}

#[pyfunction]
fn enumerate_signed_tuples(n: usize) -> PyResult<Vec<PySignedTuple>> {
    Ok(bij::enumerate_signed_tuples(n).py()?.into_iter().map(PySignedTuple).collect())
}

#[pyfunction]
fn enumerate_marked_pairs(n: usize) -> PyResult<Vec<PyMarkedPair>> {
    Ok(bij::enumerate_marked_pairs(n).py()?.into_iter().map(PyMarkedPair).collect())
}

#[pyfunction]
fn enumerate_good_pairs(n: usize) -> PyResult<Vec<PyGoodPair>> {
    Ok(bij::enumerate_good_pairs(n).py()?.into_iter().map(PyGoodPair).collect())
}

/// Runs a verification suite and returns the report as a JSON string.
#[pyfunction]
#[pyo3(signature = (suite = "all", order = None, n = None, r_order = None))]
fn verify_json(
    suite: &str,
    order: Option<usize>,
    n: Option<usize>,
    r_order: Option<usize>,
) -> PyResult<String> {
    let suite: verify::Suite = suite.parse().py()?;
    let d = verify::Bounds::default();
    let bounds = verify::Bounds {
        order: order.unwrap_or(d.order),
        n: n.unwrap_or(d.n),
        r_order: r_order.unwrap_or(d.r_order),
    };
    Ok(json_of(&verify::run_suite(suite, &bounds)))
}

#[pymodule]
#[pyo3(name = "mahonian")]
fn mahonian_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("MahonianError", py.get_type::<MahonianError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("BoundExceededError", py.get_type::<BoundExceededError>())?;
    m.add("IdentityViolationError", py.get_type::<IdentityViolationError>())?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PySignedTuple>()?;
    m.add_class::<PyMarkedPair>()?;
    m.add_class::<PyGoodPair>()?;
    m.add_function(wrap_pyfunction!(mahonian_table, m)?)?;
    m.add_function(wrap_pyfunction!(knuth_netto, m)?)?;
    m.add_function(wrap_pyfunction!(subdiagonal_series, m)?)?;
    m.add_function(wrap_pyfunction!(r_series, m)?)?;
    m.add_function(wrap_pyfunction!(m_series, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_series, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_type_formula, m)?)?;
    m.add_function(wrap_pyfunction!(m_blocks, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_catalan_set, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_signed_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_marked_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_good_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}
