//! Python module `rademacher`.

use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use rademacher::arith::{self, Rational};
use rademacher::asymptotics;
use rademacher::coeffs::{self, Algorithm};
use rademacher::{CoeffKey, Error};

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } | Error::NoConvergence(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn algorithm(name: &str) -> PyResult<Algorithm> {
    name.parse().map_err(err)
}

/// Element of the cyclotomic field `Q(zeta_k)` in the power basis.
#[pyclass(name = "CycloElement", module = "rademacher", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCyclo(rademacher::CycloElement);

#[pymethods]
impl PyCyclo {
    #[staticmethod]
    fn zeta(k: u32, e: i64) -> Self {
        PyCyclo(rademacher::CycloElement::zeta_pow(k, e))
    }

    #[staticmethod]
    fn one(k: u32) -> Self {
        PyCyclo(rademacher::CycloElement::one(k))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyCyclo).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn conductor(&self) -> u32 {
        self.0.conductor()
    }

    /// Power-basis coefficients as `Fraction`s.
    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fractions(py, self.0.coeffs())
    }

    /// The value as a `Fraction`, or `None` when irrational.
    fn to_fraction<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        self.0.to_rational().map(|r| fraction(py, &r)).transpose()
    }

    #[pyo3(signature = (h = 1))]
    fn embed(&self, h: i64) -> PyResult<Complex64> {
        self.0.embed(h).map_err(err)
    }

    fn invert(&self) -> PyResult<Self> {
        self.0.invert().map(PyCyclo).map_err(err)
    }

    fn trace<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.trace())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __add__(&self, o: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_add(&o.0).map(PyCyclo).map_err(err)
    }

    fn __sub__(&self, o: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_sub(&o.0).map(PyCyclo).map_err(err)
    }

    fn __mul__(&self, o: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_mul(&o.0).map(PyCyclo).map_err(err)
    }

    fn __truediv__(&self, o: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.try_div(&o.0).map(PyCyclo).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("CycloElement(k={}, {})", self.0.conductor(), self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
fn bernoulli_number(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &arith::bernoulli_number(n))
}

/// Coefficients of `B_n(x)`, constant term first.
#[pyfunction]
fn bernoulli_poly(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyList>> {
    fractions(py, arith::bernoulli_poly(n).coeffs())
}

#[pyfunction]
fn stirling1(n: usize, m: usize) -> BigInt {
    arith::stirling1(n, m).into()
}

#[pyfunction]
fn stirling2(n: usize, m: usize) -> BigInt {
    arith::stirling2(n, m).into()
}

/// `C_{hkl}(N)` by the named algorithm.
#[pyfunction]
#[pyo3(signature = (h, k, l, n, algo = "direct"))]
fn coeff(h: u32, k: u32, l: u32, n: u32, algo: &str) -> PyResult<PyCyclo> {
    let key = CoeffKey::new(h, k, l, n).map_err(err)?;
    let v = match algorithm(algo)? {
        Algorithm::Direct => coeffs::c_direct(&key),
        Algorithm::Recursive => coeffs::c_recursive(&key),
        Algorithm::Sz => coeffs::c_sz(&key),
        Algorithm::Andrews => coeffs::c_andrews(&key),
        Algorithm::LogSeries => coeffs::c_log_series(&key),
    };
    v.map(PyCyclo).map_err(err)
}

/// Every coefficient for `N`, keyed by `(h, k, l)`.
#[pyfunction]
#[pyo3(signature = (n, algo = "recursive"))]
fn decompose<'py>(py: Python<'py>, n: u32, algo: &str) -> PyResult<Bound<'py, PyDict>> {
    let t = coeffs::decompose(n, algorithm(algo)?).map_err(err)?;
    let d = PyDict::new(py);
    for (key, v) in t.entries() {
        d.set_item((key.h, key.k, key.l), PyCyclo(v.clone()))?;
    }
    Ok(d)
}

/// Partitions of `n` into at most `N` parts.
#[pyfunction]
fn partitions(n_parts: u32, n: u64) -> BigInt {
    coeffs::p_oracle(n_parts, n).into()
}

/// Partitions of `n` into at most `N` parts, rebuilt from the decomposition.
#[pyfunction]
fn partitions_from_decomposition(py: Python<'_>, n_parts: u32, n: u64) -> PyResult<Bound<'_, PyAny>> {
    let t = coeffs::decompose(n_parts, Algorithm::Recursive).map_err(err)?;
    fraction(py, &coeffs::p_from_decomposition(&t, n).map_err(err)?)
}

#[pyfunction]
fn wave(py: Python<'_>, k: u32, n_parts: u32, n: i64) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &coeffs::wave(k, n_parts, n).map_err(err)?)
}

#[pyfunction]
fn sz_polynomial(py: Python<'_>, r: u32) -> PyResult<Bound<'_, PyList>> {
    fractions(py, coeffs::sz_polynomial(r).coeffs())
}

#[pyfunction]
fn dilog(z: Complex64) -> Complex64 {
    asymptotics::dilog(z)
}

/// The root `w0` and the derived constants.
#[pyfunction]
fn constants(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let c = asymptotics::find_w0().map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("w0", c.w0)?;
    d.set_item("z0", c.z0)?;
    for (name, v) in [
        ("U", c.u),
        ("V", c.v),
        ("alpha", c.alpha),
        ("beta", c.beta),
        ("alpha1", c.alpha1),
        ("beta1", c.beta1),
        ("alpha2", c.alpha2),
        ("beta2", c.beta2),
    ] {
        d.set_item(name, v)?;
    }
    Ok(d)
}

#[pyfunction]
fn main_term_011(n: u32) -> PyResult<f64> {
    asymptotics::main_term_011(n).map_err(err)
}

#[pyfunction]
fn main_term_121(n: u32) -> PyResult<f64> {
    asymptotics::main_term_121(n).map_err(err)
}

#[pymodule]
#[pyo3(name = "rademacher")]
fn rademacher_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyclo>()?;
    m.add_function(wrap_pyfunction!(bernoulli_number, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli_poly, m)?)?;
    m.add_function(wrap_pyfunction!(stirling1, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(coeff, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_from_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(wave, m)?)?;
    m.add_function(wrap_pyfunction!(sz_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(dilog, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(main_term_011, m)?)?;
    m.add_function(wrap_pyfunction!(main_term_121, m)?)?;
    Ok(())
}
