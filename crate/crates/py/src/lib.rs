//! Python module `ado`.

use ado_core::ado::{self as inv, AdoResult, Method};
use ado_core::coeffring::SpecializationMap;
use ado_core::verma::{writhe, BraidWord};
use ado_core::{oracle, AdoError};
use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn err(e: AdoError) -> PyErr {
    match e {
        AdoError::DegenerateSpecialization => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Braid", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyBraid(BraidWord);

#[pymethods]
impl PyBraid {
    #[new]
    fn new(strands: usize, letters: Vec<i32>) -> PyResult<Self> {
        BraidWord::new(strands, letters).map(PyBraid).map_err(err)
    }

    /// Parse "1 -2 1 -2" or "s1^3 s2^-1".
    #[staticmethod]
    #[pyo3(signature = (text, strands=None))]
    fn parse(text: &str, strands: Option<usize>) -> PyResult<Self> {
        ado_core::cli::parse_braid(text, strands).map(PyBraid).map_err(err)
    }

    /// A built-in knot by name.
    #[staticmethod]
    fn knot(name: &str) -> PyResult<Self> {
        inv::knot_table(name)
            .map(PyBraid)
            .ok_or_else(|| PyValueError::new_err(format!("unknown knot {name:?}; known: {}", inv::KNOT_NAMES.join(", "))))
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.0.letters().to_vec()
    }

    #[getter]
    fn writhe(&self) -> i64 {
        writhe(&self.0)
    }

    fn components(&self) -> usize {
        self.0.components()
    }

    fn inverse(&self) -> Self {
        PyBraid(self.0.inverse())
    }

    fn mirror(&self) -> Self {
        PyBraid(self.0.mirror())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Braid({}, {:?})", self.0.strands(), self.0.letters())
    }
}

/// Φ_N of a braid closure, exact.
#[pyclass(name = "Invariant", frozen)]
struct PyInvariant(AdoResult);

#[pymethods]
impl PyInvariant {
    #[getter]
    fn level(&self) -> u32 {
        self.0.level
    }

    #[getter]
    fn method(&self) -> &'static str {
        self.0.method.name()
    }

    #[getter]
    fn braid(&self) -> PyBraid {
        PyBraid(self.0.braid.clone())
    }

    #[getter]
    fn t_exp(&self) -> i64 {
        self.0.value.t_exp()
    }

    fn is_laurent(&self) -> bool {
        self.0.value.is_laurent()
    }

    /// The value as the JSON text used by the command-line tool.
    fn to_json(&self) -> String {
        self.0.value.to_json().to_string()
    }

    /// The unnormalized value, as text.
    fn raw(&self) -> String {
        self.0.raw.to_string()
    }

    /// Numeric value at λ.
    fn evaluate(&self, lam: Complex64) -> PyResult<Complex64> {
        ado_core::coeffring::specialize(&self.0.value, &SpecializationMap::EtaNumeric { lambda: lam }).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0.value == other.0.value
    }

    fn __str__(&self) -> String {
        self.0.value.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Invariant(N={}, {})", self.0.level, self.0.value)
    }
}

/// Compute Φ_N with method "direct" or "topological".
#[pyfunction]
#[pyo3(signature = (braid, color=2, method="direct"))]
fn invariant(braid: &PyBraid, color: u32, method: &str) -> PyResult<PyInvariant> {
    let method = match method {
        "direct" => Method::Direct,
        "topological" => Method::Topological,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    inv::ado(&braid.0, color, method).map(PyInvariant).map_err(err)
}

/// Alexander polynomial of a knot closure as (lowest exponent, coefficients).
#[pyfunction]
fn alexander(braid: &PyBraid) -> PyResult<(i64, Vec<i64>)> {
    let p = oracle::alexander_burau(&braid.0).map_err(err)?;
    Ok((p.low(), p.coeffs().to_vec()))
}

/// Whether random conjugations and both stabilizations leave Φ_N unchanged.
#[pyfunction]
#[pyo3(signature = (braid, color=2, samples=4, seed=0))]
fn markov_check(braid: &PyBraid, color: u32, samples: usize, seed: u64) -> PyResult<bool> {
    inv::markov_check(&braid.0, color, samples, seed).map(|r| r.passed()).map_err(err)
}

#[pyfunction]
fn kashaev_figure_eight(color: u32) -> Complex64 {
    oracle::kashaev_figure_eight(color)
}

#[pymodule]
fn ado(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyInvariant>()?;
    m.add_function(wrap_pyfunction!(invariant, m)?)?;
    m.add_function(wrap_pyfunction!(alexander, m)?)?;
    m.add_function(wrap_pyfunction!(markov_check, m)?)?;
    m.add_function(wrap_pyfunction!(kashaev_figure_eight, m)?)?;
    m.add("KNOTS", inv::KNOT_NAMES.to_vec())?;
    Ok(())
}
