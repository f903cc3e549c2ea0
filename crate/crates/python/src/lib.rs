//! Python bindings: `import dyck`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rational_dyck::inversion::Strategy;
use rational_dyck::render::{parse_overlays, render_ascii, render_svg};
use rational_dyck::statistics::{all_statistics, delta, dinv, skew_length};
use rational_dyck::verify::{qcatalan_check, RankVariant};
use rational_dyck::zeta::{eta_with, zeta_with, Method};
use rational_dyck::{anderson, DyckPath, Error};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A rational Dyck path in the `a x b` grid.
#[pyclass(name = "DyckPath", module = "dyck", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyDyckPath {
    inner: DyckPath,
}

impl From<DyckPath> for PyDyckPath {
    fn from(inner: DyckPath) -> Self {
        PyDyckPath { inner }
    }
}

fn method(name: &str) -> PyResult<Method> {
    name.parse().map_err(py_err)
}

#[pymethods]
impl PyDyckPath {
    #[new]
    fn new(a: usize, b: usize, steps: &str) -> PyResult<Self> {
        DyckPath::parse(a, b, steps).map(Into::into).map_err(py_err)
    }

    #[getter]
    fn a(&self) -> usize {
        self.inner.a()
    }

    #[getter]
    fn b(&self) -> usize {
        self.inner.b()
    }

    #[getter]
    fn steps(&self) -> String {
        self.inner.to_string()
    }

    fn levels(&self) -> Vec<i64> {
        self.inner.levels()
    }

    fn sigma(&self) -> Vec<usize> {
        self.inner.sigma().one_line().to_vec()
    }

    fn gamma(&self) -> Vec<usize> {
        self.inner.gamma().one_line().to_vec()
    }

    /// Parts of the simultaneous core.
    fn core(&self) -> Vec<usize> {
        anderson(&self.inner).parts().parts().to_vec()
    }

    fn stats(&self) -> BTreeMap<&'static str, usize> {
        let s = all_statistics(&self.inner);
        BTreeMap::from([
            ("area", s.area),
            ("coarea", s.coarea),
            ("rank", s.rank),
            ("sl", s.sl),
            ("slp", s.slp),
            ("dinv", s.dinv),
            ("delta", s.delta),
        ])
    }

    fn skew_length(&self) -> usize {
        skew_length(&self.inner)
    }

    fn dinv(&self) -> usize {
        dinv(&self.inner)
    }

    fn delta(&self) -> usize {
        delta(&self.inner)
    }

    #[pyo3(signature = (method = "cores"))]
    fn zeta(&self, method: &str) -> PyResult<Self> {
        zeta_with(&self.inner, self::method(method)?).map(Into::into).map_err(py_err)
    }

    #[pyo3(signature = (method = "cores"))]
    fn eta(&self, method: &str) -> PyResult<Self> {
        eta_with(&self.inner, self::method(method)?).map(Into::into).map_err(py_err)
    }

    fn conjugate(&self) -> Self {
        self.inner.conjugate().into()
    }

    fn flip(&self) -> Self {
        self.inner.flip().into()
    }

    #[pyo3(signature = (overlays = ""))]
    fn ascii(&self, overlays: &str) -> PyResult<String> {
        render_ascii(&self.inner, &parse_overlays(overlays).map_err(py_err)?).map_err(py_err)
    }

    #[pyo3(signature = (overlays = ""))]
    fn svg(&self, overlays: &str) -> PyResult<String> {
        render_svg(&self.inner, &parse_overlays(overlays).map_err(py_err)?).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DyckPath({}, {}, '{}')", self.inner.a(), self.inner.b(), self.inner)
    }
}

#[pyfunction]
fn enumerate_paths(a: usize, b: usize) -> PyResult<Vec<PyDyckPath>> {
    rational_dyck::enumerate_paths(a, b)
        .map(|v| v.into_iter().map(Into::into).collect())
        .map_err(py_err)
}

#[pyfunction]
fn rational_catalan_number(a: usize, b: usize) -> u128 {
    rational_dyck::rational_catalan_number(a, b)
}

/// Path whose zeta image is `q`, found by the named strategy.
#[pyfunction]
#[pyo3(signature = (q, strategy = "auto"))]
fn zeta_inverse(q: &PyDyckPath, strategy: &str) -> PyResult<PyDyckPath> {
    let strategy: Strategy = strategy.parse().map_err(py_err)?;
    rational_dyck::inversion::zeta_inverse_with(&q.inner, strategy)
        .map(|inv| inv.path.into())
        .map_err(py_err)
}

#[pyfunction]
fn chi(q: &PyDyckPath) -> PyResult<PyDyckPath> {
    rational_dyck::chi(&q.inner).map(Into::into).map_err(py_err)
}

/// The path recovered from the pair `(zeta(P), eta(P))`.
#[pyfunction]
fn iota(q: &PyDyckPath, r: &PyDyckPath) -> PyResult<PyDyckPath> {
    rational_dyck::iota(&q.inner, &r.inner).map(Into::into).map_err(py_err)
}

/// The q-Catalan polynomial as text, checked against the skew-length sum.
#[pyfunction]
fn q_catalan(a: usize, b: usize) -> PyResult<(String, bool)> {
    let c = qcatalan_check(a, b, RankVariant::Core).map_err(py_err)?;
    Ok((c.f.clone(), c.holds()))
}

#[pymodule]
fn dyck(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDyckPath>()?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(rational_catalan_number, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(iota, m)?)?;
    m.add_function(wrap_pyfunction!(q_catalan, m)?)?;
    Ok(())
}
