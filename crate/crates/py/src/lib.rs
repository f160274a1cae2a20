//! Python module `fext`. Reports come back as plain dicts and lists.

use fext_core::harness::grid::GridBounds;
use fext_core::harness::{check_theorem, lemma_grid, sharpness, GridLemma, TheoremId, TheoremSpec};
use fext_core::matching::{is_fext_definitional, is_fext_lemma, is_violating_set};
use fext_core::spectral::{largest_real_root, spectral_report, Family, FamilyParams, Instance, DEFAULT_TOL};
use fext_core::{emit_graph6, extremal_graph, matches_extremal, parse_graph6, ExtremalParams, Graph, VertexSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, x: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(x).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Graph", module = "fext", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: Graph::from_edges(n, &edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_graph6(record: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph6(record.trim().as_bytes()).map_err(err)? })
    }

    fn to_graph6(&self) -> PyResult<String> {
        emit_graph6(&self.inner).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, e={})", self.inner.order(), self.inner.size())
    }
}

fn params(n: usize, k: usize, s: Option<usize>) -> PyResult<ExtremalParams> {
    ExtremalParams::new(n, k, s.unwrap_or(2 * k)).map_err(err)
}

/// `K_s ∨ (K_{n1} ∪ tK_1)`; `s` defaults to `2k`.
#[pyfunction]
#[pyo3(signature = (n, k, s = None))]
fn extremal(n: usize, k: usize, s: Option<usize>) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: extremal_graph(&params(n, k, s)?).map_err(err)? })
}

#[pyfunction]
#[pyo3(signature = (g, n, k, s = None))]
fn is_extremal(g: &PyGraph, n: usize, k: usize, s: Option<usize>) -> PyResult<bool> {
    Ok(matches_extremal(&g.inner, &params(n, k, s)?))
}

#[pyfunction]
#[pyo3(signature = (g, tol = DEFAULT_TOL))]
fn spectral<'py>(py: Python<'py>, g: &PyGraph, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &spectral_report(&g.inner, tol).map_err(err)?)
}

/// Coefficients of a closed-form quotient polynomial, highest degree first,
/// as strings (`"p/q"` when not integral).
#[pyfunction]
#[pyo3(signature = (family, n, k, third = 0))]
fn polynomial(family: &str, n: usize, k: usize, third: usize) -> PyResult<Vec<String>> {
    let family: Family = family.parse().map_err(err)?;
    let inst = Instance::new(family, FamilyParams { n, k, third }).map_err(err)?;
    Ok(inst.cubic().to_string().split(", ").map(str::to_string).collect())
}

#[pyfunction]
#[pyo3(signature = (family, n, k, third = 0, tol = DEFAULT_TOL))]
fn polynomial_root(family: &str, n: usize, k: usize, third: usize, tol: f64) -> PyResult<f64> {
    let family: Family = family.parse().map_err(err)?;
    let inst = Instance::new(family, FamilyParams { n, k, third }).map_err(err)?;
    Ok(largest_real_root(&inst.cubic(), tol))
}

#[pyfunction]
fn fext_lemma<'py>(py: Python<'py>, g: &PyGraph, k: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &is_fext_lemma(&g.inner, k).map_err(err)?)
}

#[pyfunction]
fn fext_definitional<'py>(py: Python<'py>, g: &PyGraph, k: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &is_fext_definitional(&g.inner, k).map_err(err)?)
}

#[pyfunction]
fn violating_set(g: &PyGraph, s: Vec<usize>, k: usize) -> PyResult<bool> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.inner.order()) {
        return Err(err(format!("vertex {v} out of range")));
    }
    Ok(is_violating_set(&g.inner, VertexSet::from_vertices(s), k))
}

fn theorem_spec(theorem: &str, k: usize, tol: f64) -> PyResult<TheoremSpec> {
    let id: TheoremId = theorem.parse().map_err(err)?;
    Ok(TheoremSpec::new(id, k, tol))
}

#[pyfunction]
#[pyo3(signature = (g, theorem, k, tol = DEFAULT_TOL))]
fn check<'py>(py: Python<'py>, g: &PyGraph, theorem: &str, k: usize, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &check_theorem(&g.inner, &theorem_spec(theorem, k, tol)?).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, k, s, theorem, tol = DEFAULT_TOL))]
fn sharpness_report<'py>(py: Python<'py>, n: usize, k: usize, s: usize, theorem: &str, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let spec = theorem_spec(theorem, k, tol)?;
    to_py(py, &sharpness(&params(n, k, Some(s))?, &spec).map_err(err)?)
}

/// Runs a comparison grid; the returned dict omits the per-point list.
#[pyfunction]
#[pyo3(signature = (lemma, k_max, n_max, delta_max = 0, k_min = 1, tol = DEFAULT_TOL))]
fn grid<'py>(py: Python<'py>, lemma: &str, k_max: usize, n_max: usize, delta_max: usize, k_min: usize, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let lemma: GridLemma = lemma.parse().map_err(err)?;
    let bounds = GridBounds { k_min, k_max, n_max, delta_max };
    let mut report = py.detach(|| lemma_grid(lemma, bounds, tol)).map_err(err)?;
    let passed = report.passed();
    report.points.clear();
    let out = to_py(py, &report)?;
    out.set_item("passed", passed)?;
    Ok(out)
}

#[pymodule]
fn fext(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(extremal, m)?)?;
    m.add_function(wrap_pyfunction!(is_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(spectral, m)?)?;
    m.add_function(wrap_pyfunction!(polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(polynomial_root, m)?)?;
    m.add_function(wrap_pyfunction!(fext_lemma, m)?)?;
    m.add_function(wrap_pyfunction!(fext_definitional, m)?)?;
    m.add_function(wrap_pyfunction!(violating_set, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(sharpness_report, m)?)?;
    m.add_function(wrap_pyfunction!(grid, m)?)?;
    m.add("DEFAULT_TOL", DEFAULT_TOL)?;
    Ok(())
}
