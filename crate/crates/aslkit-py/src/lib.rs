//! Python bindings: a thin `Poset` class plus the lattice constructors,
//! Betti tables, ring invariants, and the verification suites.

use aslkit::betti::{
    has_linear_resolution, hochster_betti, is_chordal, koszul_betti, regularity_of_complement,
    ring_invariants, GradedQuotient,
};
use aslkit::complex::{order_complex, SimplicialComplex};
use aslkit::lattice::{birkhoff, boolean, divisor, is_distributive_type};
use aslkit::linalg::FieldSpec;
use aslkit::poset::enumerate_posets;
use aslkit::suites::{
    explore_conjecture, suite_asl, suite_chordal, suite_divposet, suite_gorenstein_level,
    suite_la_classification,
};
use aslkit::topology::{is_cm_poset, is_shellable_poset, is_vd_poset, Tristate};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: aslkit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field_of(name: &str) -> PyResult<FieldSpec> {
    match name {
        "q" => Ok(FieldSpec::Rational),
        "f2" => Ok(FieldSpec::Prime(2)),
        "f3" => Ok(FieldSpec::Prime(3)),
        other => Err(PyValueError::new_err(format!(
            "unknown field `{}`; expected q, f2, or f3",
            other
        ))),
    }
}

fn opt_of(t: Tristate) -> Option<bool> {
    match t {
        Tristate::True => Some(true),
        Tristate::False => Some(false),
        Tristate::Inconclusive { .. } => None,
    }
}

/// A finite poset given by labels and cover relations.
#[pyclass(name = "Poset")]
#[derive(Clone)]
struct PyPoset {
    inner: aslkit::poset::Poset,
}

#[pymethods]
impl PyPoset {
    /// Parse the `elements:` / `covers:` text format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPoset { inner: aslkit::poset::Poset::parse(text).map_err(err)? })
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Poset({} elements, {} covers)", self.inner.n(), self.inner.covers().len())
    }

    fn serialize(&self) -> String {
        self.inner.serialize()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn is_distributive_type(&self) -> bool {
        is_distributive_type(&self.inner)
    }

    #[pyo3(signature = (field = "q"))]
    fn is_cohen_macaulay(&self, field: &str) -> PyResult<bool> {
        is_cm_poset(&self.inner, field_of(field)?).map_err(err)
    }

    /// True/False when the search finishes, None when the budget runs out.
    fn is_shellable(&self) -> PyResult<Option<bool>> {
        Ok(opt_of(is_shellable_poset(&self.inner).map_err(err)?))
    }

    fn is_vertex_decomposable(&self) -> PyResult<Option<bool>> {
        Ok(opt_of(is_vd_poset(&self.inner).map_err(err)?))
    }

    fn is_chordal(&self) -> bool {
        is_chordal(&self.inner.comparability_graph())
    }

    fn has_linear_resolution(&self) -> PyResult<bool> {
        has_linear_resolution(&self.inner).map_err(err)
    }

    fn regularity(&self) -> PyResult<usize> {
        regularity_of_complement(&self.inner).map_err(err)
    }

    /// Graded Betti numbers as (i, j, beta) triples, sorted by (i, j).
    #[pyo3(signature = (method = "hochster", field = "q"))]
    fn betti(&self, method: &str, field: &str) -> PyResult<Vec<(usize, usize, u64)>> {
        let table = match method {
            "hochster" => {
                let delta = order_complex(&self.inner).map_err(err)?;
                hochster_betti(&delta, field_of(field)?).map_err(err)?
            }
            "koszul" => {
                if field != "q" {
                    return Err(PyValueError::new_err(
                        "the koszul route works over the rationals only",
                    ));
                }
                let mut q = GradedQuotient::straightening(&self.inner).map_err(err)?;
                koszul_betti(&mut q).map_err(err)?
            }
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown method `{}`; expected hochster or koszul",
                    other
                )))
            }
        };
        Ok(table.entries().collect())
    }

    /// dim, depth, reg, pd, cm, cm_type, gorenstein, level, h_vector.
    #[pyo3(signature = (field = "q"))]
    fn ring_invariants<'py>(&self, py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyDict>> {
        let inv = ring_invariants(&self.inner, field_of(field)?).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("dim", inv.dim)?;
        d.set_item("depth", inv.depth)?;
        d.set_item("reg", inv.reg)?;
        d.set_item("pd", inv.pd)?;
        d.set_item("cm", inv.cm)?;
        d.set_item("cm_type", inv.cm_type)?;
        d.set_item("gorenstein", inv.gorenstein)?;
        d.set_item("level", inv.level)?;
        d.set_item("h_vector", inv.h_vector)?;
        Ok(d)
    }
}

#[pyfunction(name = "boolean")]
fn boolean_lattice(n: usize) -> PyResult<PyPoset> {
    Ok(PyPoset { inner: boolean(n).map_err(err)?.poset().clone() })
}

#[pyfunction(name = "divisor")]
fn divisor_lattice(n: usize, m: usize) -> PyResult<PyPoset> {
    Ok(PyPoset { inner: divisor(n, m).map_err(err)?.poset().clone() })
}

/// Lattice of order ideals of p, as a poset.
#[pyfunction(name = "birkhoff")]
fn birkhoff_lattice(p: &PyPoset) -> PyResult<PyPoset> {
    Ok(PyPoset { inner: birkhoff(&p.inner).map_err(err)?.poset().clone() })
}

/// All posets with n elements, one per isomorphism class.
#[pyfunction]
fn enumerate(n: usize) -> PyResult<Vec<PyPoset>> {
    Ok(enumerate_posets(n)
        .map_err(err)?
        .into_iter()
        .map(|p| PyPoset { inner: p })
        .collect())
}

/// Run a verification suite; returns the report as a JSON string. Suites:
/// la-classification, divposet, chordal, gorenstein-level, asl, conjecture
/// (the last takes `facets`, newline-separated facet lines).
#[pyfunction]
#[pyo3(signature = (suite, max_p = None, max_rank = None, max_n = None, workers = 1, facets = None))]
fn verify(
    suite: &str,
    max_p: Option<usize>,
    max_rank: Option<usize>,
    max_n: Option<usize>,
    workers: usize,
    facets: Option<&str>,
) -> PyResult<String> {
    let report = match suite {
        "la-classification" => suite_la_classification(max_p.unwrap_or(5), workers),
        "divposet" => suite_divposet(max_rank.unwrap_or(5), workers),
        "chordal" => suite_chordal(max_p.unwrap_or(7), workers),
        "gorenstein-level" => suite_gorenstein_level(max_n.unwrap_or(6), workers),
        "asl" => suite_asl(max_p.unwrap_or(6), workers),
        "conjecture" => {
            let text = facets
                .ok_or_else(|| PyValueError::new_err("the conjecture suite needs facets"))?;
            let delta = SimplicialComplex::parse(text).map_err(err)?;
            explore_conjecture(&delta, workers)
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown suite `{}`; expected one of la-classification, divposet, \
                 chordal, gorenstein-level, asl, conjecture",
                other
            )))
        }
    }
    .map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn aslkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_function(wrap_pyfunction!(boolean_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(divisor_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(birkhoff_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
