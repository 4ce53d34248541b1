//! Python bindings: rings, monomial ideals, subquotients and the document-driven
//! commands of the `vnum` CLI.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use vnum_core::ass::{ass_oracle, default_oracle_bound};
use vnum_core::io::{parse_input, run_command, CliError, Command, Settings};
use vnum_core::kernel::parse_monomial;
use vnum_core::lab::{fit_eventual_linear, min_linear_combine, verify_golden};
use vnum_core::vnumber::{gamma_end_check, v_oracle, PrimeTarget};
use vnum_core::{ass, v, AssSet, ExtInt, GradedRing, Monomial, MonomialIdeal, Subquotient};

fn err(e: vnum_core::Error) -> PyErr {
    PyValueError::new_err(format!("[{}] {e}", e.code()))
}

fn cli_err(e: CliError) -> PyErr {
    PyValueError::new_err(format!("[{}] {e}", e.code()))
}

/// `±∞` become float infinities, finite values stay ints.
fn ext(py: Python<'_>, x: ExtInt) -> PyResult<Py<PyAny>> {
    Ok(match x {
        ExtInt::Finite(v) => v.into_pyobject(py)?.into_any().unbind(),
        ExtInt::PosInf => f64::INFINITY.into_pyobject(py)?.into_any().unbind(),
        ExtInt::NegInf => f64::NEG_INFINITY.into_pyobject(py)?.into_any().unbind(),
    })
}

fn prime_lists(set: &AssSet, ring: &GradedRing) -> Vec<Vec<String>> {
    set.iter().map(|p| p.var_names(ring)).collect()
}

#[pyclass(frozen, skip_from_py_object, name = "Ring")]
#[derive(Clone)]
struct PyRing(Arc<GradedRing>);

#[pymethods]
impl PyRing {
    #[new]
    #[pyo3(signature = (vars, weights=None))]
    fn new(vars: Vec<String>, weights: Option<Vec<u32>>) -> PyResult<Self> {
        let weights = weights.unwrap_or_else(|| vec![1; vars.len()]);
        GradedRing::new(vars, weights).map(PyRing).map_err(err)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.names().to_vec()
    }

    #[getter]
    fn weights(&self) -> Vec<u32> {
        self.0.weights().to_vec()
    }

    /// Weighted degree of a monomial string such as `"X^2*Y"`.
    fn degree(&self, monomial: &str) -> PyResult<i64> {
        Ok(self.0.degree(&self.parse(monomial)?))
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?}, weights={:?})", self.0.names(), self.0.weights())
    }
}

impl PyRing {
    fn parse(&self, text: &str) -> PyResult<Monomial> {
        parse_monomial(&self.0, text).map_err(|e| PyValueError::new_err(format!("{text:?}: {e}")))
    }
}

#[pyclass(frozen, skip_from_py_object, eq, name = "Ideal")]
#[derive(Clone, PartialEq)]
struct PyIdeal(MonomialIdeal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(ring: &PyRing, gens: Vec<String>) -> PyResult<Self> {
        let gens = gens.iter().map(|g| ring.parse(g)).collect::<PyResult<Vec<_>>>()?;
        MonomialIdeal::new(ring.0.clone(), gens).map(PyIdeal).map_err(err)
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    /// Minimal generators in canonical order.
    #[getter]
    fn gens(&self) -> Vec<String> {
        let ring = self.0.ring();
        self.0.gens().iter().map(|g| ring.format(g)).collect()
    }

    fn contains(&self, monomial: &str) -> PyResult<bool> {
        Ok(self.0.contains(&self.ring().parse(monomial)?))
    }

    fn is_subset_of(&self, other: &PyIdeal) -> bool {
        self.0.is_subset_of(&other.0)
    }

    fn __add__(&self, other: &PyIdeal) -> PyIdeal {
        PyIdeal(self.0.sum(&other.0))
    }

    fn __mul__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.product(&other.0).map(PyIdeal).map_err(err)
    }

    fn __pow__(&self, n: u32, _modulo: Option<Py<PyAny>>) -> PyResult<PyIdeal> {
        self.0.power(n).map(PyIdeal).map_err(err)
    }

    fn intersect(&self, other: &PyIdeal) -> PyIdeal {
        PyIdeal(self.0.intersect(&other.0))
    }

    /// `(self : other)`.
    fn colon(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.colon_ideal(&other.0).map(PyIdeal).map_err(err)
    }

    fn colon_monomial(&self, monomial: &str) -> PyResult<PyIdeal> {
        Ok(PyIdeal(self.0.colon_monomial(&self.ring().parse(monomial)?)))
    }

    /// `(self : other^∞)`.
    fn saturate(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        self.0.saturate(&other.0).map(PyIdeal).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.0)
    }
}

/// The graded module `A/B(shift)`.
#[pyclass(frozen, skip_from_py_object, name = "Quotient")]
#[derive(Clone)]
struct PyQuotient(Subquotient);

#[pymethods]
impl PyQuotient {
    #[new]
    #[pyo3(signature = (num, den, shift=0))]
    fn new(num: &PyIdeal, den: &PyIdeal, shift: i64) -> PyResult<Self> {
        Subquotient::new(num.0.clone(), den.0.clone(), shift)
            .map(PyQuotient)
            .map_err(err)
    }

    #[getter]
    fn num(&self) -> PyIdeal {
        PyIdeal(self.0.num().clone())
    }

    #[getter]
    fn den(&self) -> PyIdeal {
        PyIdeal(self.0.den().clone())
    }

    #[getter]
    fn shift(&self) -> i64 {
        self.0.shift()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_artinian(&self) -> bool {
        self.0.is_artinian()
    }

    fn indeg(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        ext(py, self.0.indeg())
    }

    fn end(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        ext(py, self.0.end_artinian().map_err(err)?)
    }

    fn twist(&self, h: i64) -> PyQuotient {
        PyQuotient(self.0.twist(h))
    }

    /// Associated primes as sorted lists of variable names.
    fn ass(&self) -> Vec<Vec<String>> {
        prime_lists(&ass(&self.0), self.0.ring())
    }

    #[pyo3(signature = (degree_bound=None))]
    fn ass_oracle(&self, degree_bound: Option<i64>) -> Vec<Vec<String>> {
        let bound = degree_bound.unwrap_or_else(|| default_oracle_bound(&self.0));
        prime_lists(&ass_oracle(&self.0, bound), self.0.ring())
    }

    /// `{"v": ..., "per_prime": {"X,Y": ...}, "witness": {"X,Y": "..."}}`
    fn v<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let ring = self.0.ring();
        let report = v(&self.0).map_err(err)?;
        let per = PyDict::new(py);
        for (p, d) in &report.per_prime {
            per.set_item(p.label(ring), d)?;
        }
        let wit = PyDict::new(py);
        for (p, w) in &report.witnesses {
            wit.set_item(p.label(ring), ring.format(w))?;
        }
        let out = PyDict::new(py);
        out.set_item("v", ext(py, report.overall)?)?;
        out.set_item("per_prime", per)?;
        out.set_item("witness", wit)?;
        Ok(out)
    }

    /// Least degree of a monomial witness found by enumeration, or `None`.
    #[pyo3(signature = (degree_bound=None))]
    fn v_oracle(&self, degree_bound: Option<i64>) -> Option<i64> {
        let bound = degree_bound.unwrap_or_else(|| default_oracle_bound(&self.0));
        v_oracle(&self.0, &PrimeTarget::Any, bound).degree()
    }

    /// `(v_m, end(Γ_m), v_m <= end)` for the maximal homogeneous ideal `m`.
    fn gamma_end_check(&self, py: Python<'_>) -> PyResult<(i64, Py<PyAny>, bool)> {
        let r = gamma_end_check(&self.0).map_err(err)?;
        Ok((r.v_max, ext(py, r.end_gamma)?, r.holds))
    }

    fn __repr__(&self) -> String {
        format!("Quotient({} / {}, shift={})", self.0.num(), self.0.den(), self.0.shift())
    }
}

/// Runs a CLI command on a JSON problem document and returns the JSON result
/// as Python objects.
#[pyfunction]
#[pyo3(signature = (command, document=None, n_max=None, window=None, s_max=None, degree_bound=None))]
fn run<'py>(
    py: Python<'py>,
    command: &str,
    document: Option<&str>,
    n_max: Option<u32>,
    window: Option<usize>,
    s_max: Option<u32>,
    degree_bound: Option<i64>,
) -> PyResult<Bound<'py, PyAny>> {
    let cmd: Command = command.parse().map_err(PyValueError::new_err)?;
    let doc = document
        .map(parse_input)
        .transpose()
        .map_err(|e| PyValueError::new_err(format!("[parse-error] {e}")))?;
    let settings = Settings {
        n_max,
        window,
        s_max,
        degree_bound,
        ..Settings::default()
    }
    .merged_with(doc.as_ref());
    let out = run_command(doc.as_ref(), cmd, &settings).map_err(cli_err)?;
    let text = serde_json::to_string(&out.json).expect("values serialize");
    py.import("json")?.call_method1("loads", (text,))
}

/// `(passed, failed)` counts of the built-in reference checks.
#[pyfunction]
fn golden() -> PyResult<(usize, usize)> {
    let checks = verify_golden().map_err(err)?;
    let passed = checks.iter().filter(|c| c.passed).count();
    Ok((passed, checks.len() - passed))
}

/// Eventual form `(a, b)` of `n ↦ min(a_i n + b_i)`.
#[pyfunction]
fn min_linear(laws: Vec<(i64, i64)>) -> PyResult<(i64, i64)> {
    min_linear_combine(&laws).map_err(err)
}

/// `(slope, intercept, start_n, stabilized)` of the exact linear tail.
#[pyfunction]
#[pyo3(signature = (values, first_n=0, window=3))]
fn fit_linear(values: Vec<i64>, first_n: i64, window: usize) -> (i64, i64, i64, bool) {
    let values: Vec<ExtInt> = values.into_iter().map(ExtInt::Finite).collect();
    let law = fit_eventual_linear(&values, first_n, window);
    (law.slope, law.intercept, law.start_n, law.stabilized)
}

#[pymodule]
fn vnum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyQuotient>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(golden, m)?)?;
    m.add_function(wrap_pyfunction!(min_linear, m)?)?;
    m.add_function(wrap_pyfunction!(fit_linear, m)?)?;
    Ok(())
}
