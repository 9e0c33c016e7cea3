//! Python bindings. Words and partitions cross the boundary as lists of ints,
//! tableaux as `Tableau` objects or lists of rows.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

use catabolism::catabolism::catabolizable_set;
use catabolism::chains::max_family;
use catabolism::cocharge::tableau_cocharge;
use catabolism::frobenius::frobenius_table as core_frobenius_table;
use catabolism::insertion::{run_f_labeled, StepKind};
use catabolism::verify::run_suite;
use catabolism::{Error, LabeledWord, Mode, Partition, StandardWord};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(letters: Vec<u32>) -> PyResult<StandardWord> {
    StandardWord::new(letters).map_err(err)
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn mode(name: &str) -> PyResult<Mode> {
    name.parse().map_err(err)
}

#[pyclass(name = "Tableau", eq, frozen, skip_from_py_object, module = "catabolism")]
#[derive(Clone, PartialEq)]
struct PyTableau(catabolism::Tableau);

#[pymethods]
impl PyTableau {
    #[new]
    fn new(rows: Vec<Vec<u32>>) -> PyResult<Self> {
        catabolism::Tableau::new(rows).map(PyTableau).map_err(err)
    }

    /// Insertion tableau `P(w)` of a word.
    #[staticmethod]
    fn from_word(letters: Vec<u32>) -> Self {
        PyTableau(catabolism::row_insert(&letters))
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u32>> {
        self.0.rows().to_vec()
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().into_parts()
    }

    fn __len__(&self) -> usize {
        self.0.size()
    }

    /// Rows read bottom to top.
    fn rowword(&self) -> Vec<u32> {
        self.0.rowword()
    }

    fn cocharge(&self) -> usize {
        tableau_cocharge(&self.0)
    }

    #[pyo3(signature = (mode = "row"))]
    fn ctype(&self, mode: &str) -> PyResult<Vec<usize>> {
        Ok(catabolism::ctype_greedy(&self.0, self::mode(mode)?).into_parts())
    }

    #[pyo3(signature = (shape, mode = "row"))]
    fn is_catabolizable(&self, shape: Vec<usize>, mode: &str) -> PyResult<bool> {
        catabolism::is_catabolizable(&self.0, &partition(shape)?, self::mode(mode)?).map_err(err)
    }

    fn catabolizable_set(&self) -> Vec<Vec<usize>> {
        catabolizable_set(&self.0).into_iter().map(Partition::into_parts).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Tableau({:?})", self.0.rows())
    }
}

#[pyfunction]
fn cocharge_label(letters: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(catabolism::cocharge_label(&word(letters)?).into_labels())
}

#[pyfunction]
fn standard_word_from_labeling(labels: Vec<u32>) -> PyResult<Vec<u32>> {
    let w = catabolism::standard_word_from_labeling(&LabeledWord::new(labels)).map_err(err)?;
    Ok(w.letters().to_vec())
}

#[pyfunction]
fn cocharge(letters: Vec<u32>) -> PyResult<usize> {
    Ok(catabolism::cocharge(&word(letters)?))
}

#[pyfunction]
fn insertion_tableau(letters: Vec<u32>) -> PyTableau {
    PyTableau::from_word(letters)
}

/// `F(w)`, the output of catabolism insertion.
#[pyfunction]
fn catabolizability(letters: Vec<u32>) -> PyResult<Vec<usize>> {
    Ok(catabolism::catabolizability(&word(letters)?).into_parts())
}

type TraceRow = (u32, &'static str, Vec<u32>, Vec<usize>);

/// Steps of catabolism insertion as `(presented, kind, word, nu)` tuples.
#[pyfunction]
#[pyo3(signature = (letters, labeled = false))]
fn trace(letters: Vec<u32>, labeled: bool) -> PyResult<Vec<TraceRow>> {
    let z = if labeled { LabeledWord::new(letters) } else { catabolism::cocharge_label(&word(letters)?) };
    let t = run_f_labeled(&z).map_err(err)?;
    Ok(t.steps
        .into_iter()
        .map(|s| {
            let kind = match s.kind {
                StepKind::Insertion => "insertion",
                StepKind::Corotation => "corotation",
            };
            (s.presented, kind, s.result.word.into_labels(), s.result.nu.into_parts())
        })
        .collect())
}

#[pyfunction]
fn run_algorithm3(letters: Vec<u32>, shape: Vec<usize>) -> PyResult<bool> {
    catabolism::run_algorithm3(&word(letters)?, &partition(shape)?).map_err(err)
}

/// Largest family of chains of length at most `k`, as `(size, chains)`.
#[pyfunction]
fn greene(letters: Vec<u32>, k: usize) -> PyResult<(usize, Vec<Vec<i64>>)> {
    let (size, family) = max_family(&catabolism::cocharge_label(&word(letters)?), k);
    Ok((size, family.chains.iter().map(|c| c.indices().to_vec()).collect()))
}

/// Shape tuple → coefficients of `t^0, t^1, …`.
#[pyfunction]
fn frobenius_table<'py>(py: Python<'py>, shape: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
    let table = core_frobenius_table(&partition(shape)?);
    let out = PyDict::new(py);
    for (p, c) in table.entries.iter().rev() {
        out.set_item(PyTuple::new(py, p.parts())?, c)?;
    }
    Ok(out)
}

/// Runs the invariant suite; returns `(name, cases, counterexample)` per check.
#[pyfunction]
fn verify(n: usize) -> Vec<(&'static str, usize, Option<String>)> {
    run_suite(n).checks.into_iter().map(|c| (c.name, c.cases, c.counterexample)).collect()
}

#[pymodule]
#[pyo3(name = "catabolism")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTableau>()?;
    m.add_function(wrap_pyfunction!(cocharge_label, m)?)?;
    m.add_function(wrap_pyfunction!(standard_word_from_labeling, m)?)?;
    m.add_function(wrap_pyfunction!(cocharge, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_tableau, m)?)?;
    m.add_function(wrap_pyfunction!(catabolizability, m)?)?;
    m.add_function(wrap_pyfunction!(trace, m)?)?;
    m.add_function(wrap_pyfunction!(run_algorithm3, m)?)?;
    m.add_function(wrap_pyfunction!(greene, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
