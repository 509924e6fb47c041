//! Python bindings. Coefficients cross the boundary as `fractions.Fraction`,
//! partitions and exponent vectors as tuples.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use smirnov_core::enumerators::{
    brute_e_expansion, closed_form, f_expansion as core_f_expansion, powersum_form,
    powersum_top_coefficient as core_top, q_eulerian_with, root_of_unity as core_root, run_suite, QEulerian,
    QStatistic, Suite, VerifyConfig,
};
use smirnov_core::exact_algebra::{eval_at_root_of_unity, LaurentPoly, QtPoly, Rational};
use smirnov_core::symfun::{
    change_basis, e_positivity_report, expand_in_variables, is_e_unimodal, is_t_palindromic, Basis,
    MonomialTable, Partition, SymFun,
};
use smirnov_core::{combinatorics::brute_enumerator, Error, Variant};

const MAX_BRUTE: usize = 8;
const MAX_CLOSED: usize = 12;

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn in_range(param: &str, value: usize, lo: usize, hi: usize) -> PyResult<()> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(PyValueError::new_err(format!(
            "invalid {param}: {value} is outside {lo}..={hi}"
        )))
    }
}

fn variant(tag: &str) -> PyResult<Variant> {
    tag.parse().map_err(value_error)
}

fn q_eulerian_kind(tag: &str) -> PyResult<QEulerian> {
    tag.parse().map_err(value_error)
}

fn basis(symbol: &str) -> PyResult<Basis> {
    Basis::from_symbol(symbol)
        .ok_or_else(|| PyValueError::new_err(format!("unknown basis '{symbol}'; use e, h, p or m")))
}

fn tuple_of<'py, T: IntoPyObject<'py> + Copy>(py: Python<'py>, items: &[T]) -> PyResult<Bound<'py, PyTuple>> {
    PyTuple::new(py, items.iter().copied())
}

fn table_to_dict<'py>(py: Python<'py>, table: &MonomialTable) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for (exps, c) in table.terms() {
        out.set_item(tuple_of(py, exps)?, Poly(c.clone()))?;
    }
    Ok(out)
}

/// A Laurent polynomial in `t` with rational coefficients.
#[pyclass(module = "smirnov", name = "Poly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Poly(LaurentPoly);

#[pymethods]
impl Poly {
    /// Build from `{exponent: coefficient}`; coefficients may be ints or Fractions.
    #[new]
    #[pyo3(signature = (coefficients = None))]
    fn new(coefficients: Option<BTreeMap<i64, Rational>>) -> Self {
        Poly(LaurentPoly::from_terms(coefficients.unwrap_or_default()))
    }

    fn coefficients(&self) -> BTreeMap<i64, Rational> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn coeff(&self, exp: i64) -> Rational {
        self.0.coeff(exp)
    }

    /// Highest power of `t`, or `None` for zero.
    #[getter]
    fn degree(&self) -> Option<i64> {
        self.0.degree()
    }

    /// Lowest power of `t`, or `None` for zero.
    #[getter]
    fn valuation(&self) -> Option<i64> {
        self.0.valuation()
    }

    fn at_one(&self) -> Rational {
        self.0.eval_at_one()
    }

    fn derivative(&self) -> Poly {
        Poly(self.0.derivative())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: PyRef<'_, Poly>) -> Poly {
        Poly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: PyRef<'_, Poly>) -> Poly {
        Poly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Poly>) -> Poly {
        Poly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Poly {
        Poly(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
}

/// A polynomial in `q` whose coefficients are [`Poly`]s in `t`.
#[pyclass(module = "smirnov", name = "QtPoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct QtPolynomial(QtPoly);

#[pymethods]
impl QtPolynomial {
    /// `{q-exponent: Poly}`.
    fn coefficients(&self) -> BTreeMap<u32, Poly> {
        self.0.terms().map(|(e, c)| (e, Poly(c.clone()))).collect()
    }

    fn at_q_one(&self) -> Poly {
        Poly(self.0.at_q_one())
    }

    /// Value at a primitive `k`-th root of unity, or `None` when it is not
    /// a polynomial in `t` alone.
    fn at_root_of_unity(&self, k: u32) -> PyResult<Option<Poly>> {
        in_range("k", k as usize, 1, 64)?;
        Ok(eval_at_root_of_unity(&self.0, k).to_t_polynomial().map(Poly))
    }

    /// Coefficients of `1, ξ, ξ², …` in the reduction modulo the `k`-th
    /// cyclotomic polynomial.
    fn residue(&self, k: u32) -> PyResult<Vec<Poly>> {
        in_range("k", k as usize, 1, 64)?;
        Ok(eval_at_root_of_unity(&self.0, k)
            .residue()
            .iter()
            .cloned()
            .map(Poly)
            .collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QtPoly({})", self.0)
    }
}

/// A homogeneous symmetric function with coefficients in `Q[t, t⁻¹]`.
#[pyclass(
    module = "smirnov",
    name = "SymmetricFunction",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct SymmetricFunction(SymFun);

#[pymethods]
impl SymmetricFunction {
    /// One of `e`, `h`, `p`, `m`. Power sums are normalized as `p_λ / z_λ`
    /// when `normalized` is true.
    #[getter]
    fn basis(&self) -> &'static str {
        self.0.basis().symbol()
    }

    #[getter]
    fn normalized(&self) -> bool {
        self.0.is_normalized()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// `[(partition, Poly)]`, partitions as weakly decreasing tuples.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyTuple>, Poly)>> {
        self.0
            .terms()
            .map(|(l, c)| Ok((tuple_of(py, l.parts())?, Poly(c.clone()))))
            .collect()
    }

    fn coeff(&self, partition: Vec<u32>) -> Poly {
        Poly(self.0.coeff(&Partition::from_unsorted(partition)))
    }

    fn to_basis(&self, basis_symbol: &str) -> PyResult<SymmetricFunction> {
        change_basis(&self.0, basis(basis_symbol)?)
            .map(SymmetricFunction)
            .map_err(value_error)
    }

    fn omega(&self) -> PyResult<SymmetricFunction> {
        self.0.omega().map(SymmetricFunction).map_err(value_error)
    }

    /// Coefficient of `t^j`, as a symmetric function.
    fn t_coefficient(&self, j: i64) -> SymmetricFunction {
        SymmetricFunction(self.0.t_coefficient(j))
    }

    /// `{exponent tuple: Poly}` in `vars` variables.
    fn expand<'py>(&self, py: Python<'py>, vars: usize) -> PyResult<Bound<'py, PyDict>> {
        in_range("vars", vars, 1, MAX_BRUTE)?;
        table_to_dict(py, &expand_in_variables(&self.0, vars))
    }

    /// Every `e`-coefficient lies in `N[t]`.
    fn is_e_positive(&self) -> PyResult<bool> {
        e_positivity_report(&self.0)
            .map(|r| r.positive)
            .map_err(value_error)
    }

    /// Successive `t`-coefficients rise then fall, with `e`-positive steps.
    fn is_e_unimodal(&self) -> PyResult<bool> {
        is_e_unimodal(&self.0).map_err(value_error)
    }

    fn is_t_palindromic(&self) -> bool {
        is_t_palindromic(&self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __add__(&self, other: PyRef<'_, SymmetricFunction>) -> SymmetricFunction {
        SymmetricFunction(self.0.add(&other.0))
    }

    fn __sub__(&self, other: PyRef<'_, SymmetricFunction>) -> SymmetricFunction {
        SymmetricFunction(self.0.sub(&other.0))
    }

    fn __mul__(&self, other: PyRef<'_, SymmetricFunction>) -> PyResult<SymmetricFunction> {
        self.0.mul(&other.0).map(SymmetricFunction).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymmetricFunction({}, degree={})", self.basis(), self.0.degree())
    }
}

/// Variant tags accepted by the functions below.
#[pyfunction]
fn variants() -> Vec<&'static str> {
    Variant::ALL.iter().map(|v| v.tag()).collect()
}

/// The `e`-expansion of the degree-`n` enumerator from its generating function.
#[pyfunction]
#[pyo3(name = "closed_form")]
fn py_closed_form(py: Python<'_>, variant_tag: &str, n: usize) -> PyResult<SymmetricFunction> {
    let v = variant(variant_tag)?;
    in_range("n", n, 1, MAX_CLOSED)?;
    py.detach(|| closed_form(v, n))
        .map(SymmetricFunction)
        .map_err(value_error)
}

/// The `e`-expansion obtained by enumerating words in `n` variables.
#[pyfunction]
fn brute_force_expansion(py: Python<'_>, variant_tag: &str, n: usize) -> PyResult<SymmetricFunction> {
    let v = variant(variant_tag)?;
    in_range("n", n, 1, MAX_BRUTE)?;
    py.detach(|| brute_e_expansion(v, n))
        .map(SymmetricFunction)
        .map_err(value_error)
}

/// `{exponent tuple: Poly}` summing `t^stat` over the counted words.
#[pyfunction]
#[pyo3(signature = (variant_tag, n, vars = None))]
fn brute_force<'py>(
    py: Python<'py>,
    variant_tag: &str,
    n: usize,
    vars: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let v = variant(variant_tag)?;
    in_range("n", n, 1, MAX_BRUTE)?;
    let k = vars.unwrap_or(n);
    in_range("vars", k, 1, MAX_BRUTE)?;
    let table = py.detach(|| brute_enumerator(v, n, k));
    table_to_dict(py, &table)
}

/// The `ω`-image in normalized power sums `p_λ / z_λ`.
#[pyfunction]
fn powersum(py: Python<'_>, variant_tag: &str, n: usize) -> PyResult<SymmetricFunction> {
    let v = variant(variant_tag)?;
    in_range("n", n, 1, MAX_CLOSED)?;
    py.detach(|| powersum_form(v, n))
        .map(SymmetricFunction)
        .map_err(value_error)
}

/// Coefficient of `p_n / n` for `Wneq` and `XCn`.
#[pyfunction]
fn powersum_top_coefficient(variant_tag: &str, n: usize) -> PyResult<Poly> {
    let v = variant(variant_tag)?;
    in_range("n", n, 2, MAX_CLOSED)?;
    core_top(v, n).map(Poly).map_err(value_error)
}

/// `[(t_exponent, positions, multiplicity)]` for the `F`-expansion of the `ω`-image.
#[pyfunction]
fn f_expansion<'py>(
    py: Python<'py>,
    variant_tag: &str,
    n: usize,
) -> PyResult<Vec<(i64, Bound<'py, PyTuple>, u64)>> {
    let v = variant(variant_tag)?;
    let fx = py.detach(|| core_f_expansion(v, n)).map_err(value_error)?;
    fx.terms()
        .map(|(e, s, m)| Ok((e, tuple_of(py, &s.to_vec())?, m)))
        .collect()
}

/// A q-Eulerian polynomial: `Amajexc`, `A`, `Aless` or `Atilde`.
/// `statistic` is `drops` or `rises`, applied to the inverse permutation.
#[pyfunction]
#[pyo3(signature = (kind, n, statistic = "drops"))]
fn q_eulerian(py: Python<'_>, kind: &str, n: usize, statistic: &str) -> PyResult<QtPolynomial> {
    let which = q_eulerian_kind(kind)?;
    let stat = match statistic {
        "drops" => QStatistic::DropsAtLeastTwo,
        "rises" => QStatistic::RisesAtLeastTwo,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown statistic '{other}'; use drops or rises"
            )))
        }
    };
    py.detach(|| q_eulerian_with(which, n, stat))
        .map(QtPolynomial)
        .map_err(value_error)
}

/// The value at a primitive `k`-th root of unity three ways:
/// `{"reduced", "closed", "recursive", "holds"}`.
#[pyfunction]
fn root_of_unity<'py>(py: Python<'py>, kind: &str, n: usize, k: usize) -> PyResult<Bound<'py, PyDict>> {
    let which = q_eulerian_kind(kind)?;
    let r = py.detach(|| core_root(which, n, k)).map_err(value_error)?;
    let out = PyDict::new(py);
    out.set_item("reduced", r.reduced.clone().map(Poly))?;
    out.set_item("closed", Poly(r.closed.clone()))?;
    out.set_item("recursive", r.recursive.clone().map(Poly))?;
    out.set_item("holds", r.holds())?;
    Ok(out)
}

/// Run a verification suite; returns the check records as dicts.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_n = 5, max_order = 8, vars = None, max_m = 5, max_k = 5, threads = None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    max_n: usize,
    max_order: usize,
    vars: Option<usize>,
    max_m: usize,
    max_k: usize,
    threads: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let cfg = VerifyConfig {
        max_n,
        max_order,
        vars,
        max_m,
        max_k,
        threads,
    };
    let json = py
        .detach(|| run_suite(suite, &cfg).map(|r| r.to_json()))
        .map_err(value_error)?;
    py.import("json")?.call_method1("loads", (json,))
}

#[pymodule]
fn smirnov(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_class::<QtPolynomial>()?;
    m.add_class::<SymmetricFunction>()?;
    m.add_function(wrap_pyfunction!(variants, m)?)?;
    m.add_function(wrap_pyfunction!(py_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(powersum, m)?)?;
    m.add_function(wrap_pyfunction!(powersum_top_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(f_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(q_eulerian, m)?)?;
    m.add_function(wrap_pyfunction!(root_of_unity, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
