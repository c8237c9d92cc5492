//! Python bindings: `Signature`, `Form` and the main products.

use grafcl::checks::{self, CheckConfig, Suite};
use grafcl::{expr, structure, table, Error, Form, ProductKind, Signature};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    match e {
        Error::TriangleGradeOrder { .. } | Error::UnsupportedSignature { .. } => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Signature", frozen, eq, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq)]
struct PySignature(Signature);

#[pymethods]
impl PySignature {
    #[new]
    fn new(p: u32, q: u32) -> PyResult<Self> {
        Signature::new(p, q).map(PySignature).map_err(err)
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.p()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.0.dim()
    }

    /// Sign of `vol <> vol`.
    fn volume_square_sign(&self) -> i32 {
        self.0.class().v_square_sign
    }

    fn __repr__(&self) -> String {
        format!("Signature{}", self.0)
    }
}

#[pyclass(name = "Form", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyForm(Form);

#[pymethods]
impl PyForm {
    /// Evaluates an expression such as `"e12 <> e12"`.
    #[new]
    fn new(src: &str, sig: PyRef<'_, PySignature>) -> PyResult<Self> {
        expr::eval_str(src, sig.0).map(PyForm).map_err(err)
    }

    #[getter]
    fn signature(&self) -> PySignature {
        PySignature(self.0.sig())
    }

    /// `(blade, coefficient)` pairs; coefficients are exact `num/den` strings.
    fn terms(&self) -> Vec<(String, String)> {
        let n = self.0.sig().dim();
        self.0
            .terms()
            .map(|(b, c)| (b.render(n), grafcl::rational::render(c)))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn grade(&self, k: u32) -> PyResult<PyForm> {
        self.0.grade_part(k).map(PyForm).map_err(err)
    }

    fn graf(&self, other: PyRef<'_, PyForm>) -> PyResult<PyForm> {
        grafcl::graf(&self.0, &other.0).map(PyForm).map_err(err)
    }

    fn wedge(&self, other: PyRef<'_, PyForm>) -> PyResult<PyForm> {
        self.0.wedge(&other.0).map(PyForm).map_err(err)
    }

    fn hodge(&self) -> PyForm {
        PyForm(structure::hodge(&self.0))
    }

    fn to_expr(&self) -> String {
        self.0.to_expr()
    }

    fn __add__(&self, other: PyRef<'_, PyForm>) -> PyResult<PyForm> {
        self.0.same_sig(&other.0).map_err(err)?;
        Ok(PyForm(&self.0 + &other.0))
    }

    fn __sub__(&self, other: PyRef<'_, PyForm>) -> PyResult<PyForm> {
        self.0.same_sig(&other.0).map_err(err)?;
        Ok(PyForm(&self.0 - &other.0))
    }

    fn __neg__(&self) -> PyForm {
        PyForm(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Form({:?}, {})", self.0.to_expr(), self.0.sig())
    }
}

#[pyfunction]
fn graf(a: PyRef<'_, PyForm>, b: PyRef<'_, PyForm>) -> PyResult<PyForm> {
    grafcl::graf(&a.0, &b.0).map(PyForm).map_err(err)
}

#[pyfunction]
fn wedge(a: PyRef<'_, PyForm>, b: PyRef<'_, PyForm>) -> PyResult<PyForm> {
    a.0.wedge(&b.0).map(PyForm).map_err(err)
}

#[pyfunction]
fn hodge(f: PyRef<'_, PyForm>) -> PyForm {
    PyForm(structure::hodge(&f.0))
}

#[pyfunction]
fn eval_expr(src: &str, sig: PyRef<'_, PySignature>) -> PyResult<PyForm> {
    expr::eval_str(src, sig.0).map(PyForm).map_err(err)
}

/// Multiplication table as a JSON string.
#[pyfunction]
#[pyo3(signature = (sig, product = "graf"))]
fn emit_table(sig: PyRef<'_, PySignature>, product: &str) -> PyResult<String> {
    let kind: ProductKind = product.parse().map_err(err)?;
    table::emit_table(sig.0, kind)
        .map(|d| d.to_json())
        .map_err(err)
}

/// Runs a check suite and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (sig, suite = "all", samples = 20))]
fn run_checks(sig: PyRef<'_, PySignature>, suite: &str, samples: usize) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(err)?;
    let cfg = CheckConfig {
        random_forms: samples,
        random_triples: samples,
        ..CheckConfig::default()
    };
    Ok(checks::check_signature(sig.0, suite, &cfg).to_json())
}

#[pymodule]
fn grafcl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySignature>()?;
    m.add_class::<PyForm>()?;
    m.add_function(wrap_pyfunction!(graf, m)?)?;
    m.add_function(wrap_pyfunction!(wedge, m)?)?;
    m.add_function(wrap_pyfunction!(hodge, m)?)?;
    m.add_function(wrap_pyfunction!(eval_expr, m)?)?;
    m.add_function(wrap_pyfunction!(emit_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
