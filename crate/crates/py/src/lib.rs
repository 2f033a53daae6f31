//! Python bindings: algebras are passed as TOML text in the algebra file format.

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use colorcoh::color::ColorLieAlgebra;
use colorcoh::dga::{Differential, LeibnizSign};
use colorcoh::format::{catalog_file, AlgebraFile, Parameter};
use colorcoh::homology::{betti as betti_table, cohomology_in_degree};
use colorcoh::pbw::{groebner_check, uea_relations};
use colorcoh::series::recognize;
use colorcoh::table::{reproduce, TableConfig};
use colorcoh::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::AsymmetricSigns(_)
        | Error::DiagonalBracket(_)
        | Error::GradingViolation { .. }
        | Error::NotADifferential(_)
        | Error::NotQuadraticLinear(_)
        | Error::DuplicateLeading(_) => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn leibniz(name: &str) -> PyResult<LeibnizSign> {
    name.parse()
        .map_err(|_| PyValueError::new_err(format!("unknown Leibniz rule {name:?}")))
}

/// Parses `source`, checks the axioms and substitutes `param`.
fn load(source: &str, param: Option<&str>) -> PyResult<ColorLieAlgebra> {
    let file = AlgebraFile::parse(source).map_err(py_err)?;
    let report = file.signs().map_err(py_err)?.validate();
    if !report.is_ok() {
        return Err(py_err(Error::AsymmetricSigns(report.asymmetric)));
    }
    let param = param.map(str::parse::<Parameter>).transpose().map_err(py_err)?;
    let g = file.algebra(param.as_ref()).map_err(py_err)?;
    let v = g.validate();
    if !v.is_valid() {
        return Err(PyArithmeticError::new_err(format!(
            "not a color Lie algebra: grading violations {:?}, Jacobi defects at {:?}",
            v.grading,
            v.jacobi.iter().map(|d| d.triple).collect::<Vec<_>>()
        )));
    }
    Ok(g)
}

/// Betti numbers `h_0..h_max_degree`.
#[pyfunction]
#[pyo3(signature = (source, max_degree = 12, param = None, rule = "color"))]
fn betti(source: &str, max_degree: u32, param: Option<&str>, rule: &str) -> PyResult<Vec<usize>> {
    let g = load(source, param)?;
    let d = Differential::from_brackets(&g, leibniz(rule)?);
    Ok(betti_table(&d, max_degree).map_err(py_err)?.h)
}

/// Recognized Poincare series from `terms` Betti numbers, or `None`.
#[pyfunction]
#[pyo3(signature = (source, terms = 41, param = None, rule = "color"))]
fn series(source: &str, terms: u32, param: Option<&str>, rule: &str) -> PyResult<Option<String>> {
    if terms == 0 {
        return Err(PyValueError::new_err("terms must be positive"));
    }
    let g = load(source, param)?;
    let d = Differential::from_brackets(&g, leibniz(rule)?);
    let h = betti_table(&d, terms - 1).map_err(py_err)?;
    Ok(recognize(&h.as_i64()).series().map(ToString::to_string))
}

/// Cocycle representatives of `H^degree`, as strings in `f1, f2, ...`.
#[pyfunction]
#[pyo3(signature = (source, degree, param = None, rule = "color"))]
fn representatives(source: &str, degree: u32, param: Option<&str>, rule: &str) -> PyResult<Vec<String>> {
    let g = load(source, param)?;
    let d = Differential::from_brackets(&g, leibniz(rule)?);
    let c = cohomology_in_degree(&d, degree).map_err(py_err)?;
    Ok(c.representatives.iter().map(|r| r.representative.to_string()).collect())
}

/// Validation verdicts without raising on mathematical failures.
#[pyfunction]
fn check<'py>(py: Python<'py>, source: &str) -> PyResult<Bound<'py, PyDict>> {
    let file = AlgebraFile::parse(source).map_err(py_err)?;
    let out = PyDict::new(py);
    let sym = file.signs().map_err(py_err)?.validate();
    out.set_item("asymmetric", sym.asymmetric.clone())?;
    if !sym.is_ok() {
        out.set_item("valid", false)?;
        return Ok(out);
    }
    let g = file.algebra_symbolic().map_err(py_err)?;
    let v = g.validate();
    let pbw = v.grading.is_empty()
        && groebner_check(&uea_relations(&g).map_err(py_err)?)
            .map_err(py_err)?
            .is_pbw();
    out.set_item("injective", v.injective)?;
    out.set_item("grading_violations", v.grading.clone())?;
    out.set_item("jacobi_defects", v.jacobi.iter().map(|d| d.triple).collect::<Vec<_>>())?;
    out.set_item("pbw", pbw)?;
    out.set_item("valid", v.is_valid() && v.injective && pbw)?;
    Ok(out)
}

/// The TOML description of catalog entry `id` (1..=15).
#[pyfunction]
fn catalog(id: u8) -> PyResult<String> {
    Ok(catalog_file(id).map_err(py_err)?.to_toml())
}

/// Table rows as dictionaries, in table order.
#[pyfunction]
#[pyo3(signature = (max_degree = 12, rule = "color"))]
fn table<'py>(py: Python<'py>, max_degree: u32, rule: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let config = TableConfig {
        max_degree,
        leibniz: leibniz(rule)?,
        ..TableConfig::default()
    };
    let report = py.detach(|| reproduce(&config)).map_err(py_err)?;
    report
        .rows
        .into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("id", r.id)?;
            d.set_item("param", r.param)?;
            d.set_item("betti", r.betti)?;
            d.set_item("series", r.series)?;
            d.set_item("expected", r.expected)?;
            d.set_item("pass", r.pass)?;
            Ok(d)
        })
        .collect()
}

#[pymodule(name = "colorcoh")]
fn colorcoh_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(representatives, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    Ok(())
}
