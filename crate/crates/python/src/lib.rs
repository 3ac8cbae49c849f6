//! Python bindings: closed forms, their evaluation, quadrature and the
//! verification suites.

use pyo3::exceptions::{PyArithmeticError, PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use mellin_core::closed_form::{self as cf, BasisSymbol, IntegralSpec};
use mellin_core::lfunc;
use mellin_core::quad;
use mellin_core::verify::{self, CellRange, IdentityFamily};
use mellin_core::{MellinError, Rational};

fn py_err(e: MellinError) -> PyErr {
    match e {
        MellinError::PrecisionUnreachable { .. } => PyArithmeticError::new_err(e.to_string()),
        MellinError::UnknownFamily(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_canonical_string(),))
}

fn parse_symbol(name: &str, index: Option<u32>) -> PyResult<BasisSymbol> {
    let need = |i: Option<u32>| i.ok_or_else(|| PyValueError::new_err(format!("symbol `{name}` needs an index")));
    Ok(match name {
        "one" => BasisSymbol::One,
        "ln_pi" => BasisSymbol::LnPi,
        "ln2" => BasisSymbol::Ln2,
        "zeta_prime_ratio" => BasisSymbol::ZetaPrimeRatio(need(index)?),
        "beta_prime_ratio" => BasisSymbol::BetaPrimeRatio(need(index)?),
        "eta_prime_neg" => BasisSymbol::EtaPrimeNeg(need(index)?),
        "beta_prime_neg" => BasisSymbol::BetaPrimeNeg(need(index)?),
        _ => return Err(PyValueError::new_err(format!("unknown basis symbol `{name}`"))),
    })
}

fn symbol_index(sym: BasisSymbol) -> Option<u32> {
    match sym {
        BasisSymbol::ZetaPrimeRatio(i)
        | BasisSymbol::BetaPrimeRatio(i)
        | BasisSymbol::EtaPrimeNeg(i)
        | BasisSymbol::BetaPrimeNeg(i) => Some(i),
        _ => None,
    }
}

/// Exact rational combination of basis constants.
#[pyclass(name = "ClosedForm", module = "arctanh_mellin", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyClosedForm {
    inner: cf::ClosedForm,
}

#[pymethods]
impl PyClosedForm {
    /// List of `(symbol, index or None, Fraction)` in canonical order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(String, Option<u32>, Bound<'py, PyAny>)>> {
        self.inner
            .terms()
            .map(|(s, c)| Ok((s.name().to_string(), symbol_index(*s), fraction(py, c)?)))
            .collect()
    }

    #[pyo3(signature = (symbol, index=None))]
    fn coeff<'py>(&self, py: Python<'py>, symbol: &str, index: Option<u32>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.coeff(parse_symbol(symbol, index)?))
    }

    fn to_latex(&self) -> String {
        self.inner.to_latex()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        cf::ClosedForm::from_json(text).map(|inner| PyClosedForm { inner }).map_err(py_err)
    }

    /// Decimal string correct to `prec` digits.
    #[pyo3(signature = (prec=30))]
    fn evaluate(&self, prec: u32) -> PyResult<String> {
        lfunc::eval_closed_form(&self.inner, prec).map(|v| v.to_string()).map_err(py_err)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyClosedForm { inner: self.inner.add(&other.inner) }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyClosedForm { inner: self.inner.sub(&other.inner) }
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ClosedForm({})", self.inner)
    }
}

fn spec(family: &str, q: usize, n: usize) -> PyResult<IntegralSpec> {
    Ok(match family {
        "log-odd" | "log_odd" => IntegralSpec::LogOddCosh { q, n },
        "log-even" | "log_even" => IntegralSpec::LogEvenCosh { q, n },
        "sinh-over-z" | "sinh_over_z" => IntegralSpec::SinhOverZ { q, big_n: n },
        _ => return Err(PyValueError::new_err(format!("unknown family `{family}` (log-odd, log-even, sinh-over-z)"))),
    })
}

/// Closed form of `log-odd` (cosh^{2n+1}), `log-even` (cosh^{2n}) or
/// `sinh-over-z` (cosh^n) with parameters `q`, `n`.
#[pyfunction]
fn closed_form(family: &str, q: usize, n: usize) -> PyResult<PyClosedForm> {
    spec(family, q, n)?.closed_form().map(|inner| PyClosedForm { inner }).map_err(py_err)
}

/// Φ_which(2n+1) over the negative-argument basis, or over the
/// positive-argument basis when `positive` is true.
#[pyfunction]
#[pyo3(signature = (which, n, positive=false))]
fn phi_odd(which: u8, n: usize, positive: bool) -> PyResult<PyClosedForm> {
    let r = if positive { cf::phi_odd_via_sinh_over_z(which, n) } else { cf::phi_odd_closed_form(which, n) };
    r.map(|inner| PyClosedForm { inner }).map_err(py_err)
}

/// `(value, error_estimate)` of the integral by double-exponential quadrature.
#[pyfunction]
#[pyo3(signature = (family, q, n, prec=30))]
fn quad_integral(family: &str, q: usize, n: usize, prec: u32) -> PyResult<(String, f64)> {
    let r = quad::quad_integral(&spec(family, q, n)?, prec).map_err(py_err)?;
    Ok((r.value.to_string(), r.error_estimate.to_f64()))
}

/// `(value, error_estimate)` of Φ_which(s) for real `s > 1`.
#[pyfunction]
#[pyo3(signature = (which, s, prec=30))]
fn quad_phi(which: u8, s: f64, prec: u32) -> PyResult<(String, f64)> {
    let r = quad::quad_phi(which, s, prec).map_err(py_err)?;
    Ok((r.value.to_string(), r.error_estimate.to_f64()))
}

/// C₁ or C₂ by quadrature.
#[pyfunction]
#[pyo3(signature = (which, prec=30))]
fn c_constant(which: u8, prec: u32) -> PyResult<String> {
    quad::quad_c_constant(which, prec).map(|r| r.value.to_string()).map_err(py_err)
}

/// Run a suite and return its report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, lo=None, hi=None, prec=30))]
fn run_suite<'py>(
    py: Python<'py>,
    suite: &str,
    lo: Option<usize>,
    hi: Option<usize>,
    prec: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let family: IdentityFamily = suite.parse().map_err(py_err)?;
    let range = match (lo, hi) {
        (Some(a), Some(b)) if a <= b => Some(CellRange::new(a, b)),
        (None, None) => None,
        _ => return Err(PyValueError::new_err("give both lo and hi with lo <= hi, or neither")),
    };
    let report = py.detach(|| verify::run_identity(family, range, prec)).map_err(py_err)?;
    py.import("json")?.getattr("loads")?.call1((report.to_json(),))
}

/// Names accepted by `run_suite`.
#[pyfunction]
fn suites() -> Vec<&'static str> {
    IdentityFamily::ALL.iter().map(|f| f.name()).collect()
}

/// True when every worked closed form and printed constant is reproduced.
#[pyfunction]
fn reproduce(py: Python<'_>) -> bool {
    py.detach(verify::reproduce_worked_examples).all_passed()
}

/// Decimal strings of π, ln 2, ln π, Euler's γ, C₁ and C₂.
#[pyfunction]
#[pyo3(signature = (prec=30))]
fn constants<'py>(py: Python<'py>, prec: u32) -> PyResult<Bound<'py, PyDict>> {
    use mellin_core::reference::{c1_closed_form, c2_closed_form};
    let d = PyDict::new(py);
    d.set_item("pi", lfunc::pi(prec).map_err(py_err)?.to_string())?;
    d.set_item("ln2", lfunc::ln2(prec).map_err(py_err)?.to_string())?;
    d.set_item("ln_pi", lfunc::ln_pi(prec).map_err(py_err)?.to_string())?;
    d.set_item("euler_gamma", lfunc::euler_gamma(prec).map_err(py_err)?.to_string())?;
    d.set_item("C1", lfunc::eval_closed_form(&c1_closed_form(), prec).map_err(py_err)?.to_string())?;
    d.set_item("C2", lfunc::eval_closed_form(&c2_closed_form(), prec).map_err(py_err)?.to_string())?;
    Ok(d)
}

#[pyfunction]
fn bernoulli<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &mellin_core::exact::bernoulli(n))
}

/// Taylor coefficient `c_{k,n}` of `(x/sinh x)^{2n+1}`.
#[pyfunction]
fn c_coeff<'py>(py: Python<'py>, k: i64, n: usize) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &mellin_core::series::c_coeff(k, n))
}

/// Taylor coefficient `d_{k,n}` of `(x/sinh x)^{2n}`.
#[pyfunction]
fn d_coeff<'py>(py: Python<'py>, k: i64, n: usize) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &mellin_core::series::d_coeff(k, n))
}

#[pymodule]
fn arctanh_mellin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyClosedForm>()?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(phi_odd, m)?)?;
    m.add_function(wrap_pyfunction!(quad_integral, m)?)?;
    m.add_function(wrap_pyfunction!(quad_phi, m)?)?;
    m.add_function(wrap_pyfunction!(c_constant, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(c_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(d_coeff, m)?)?;
    Ok(())
}
