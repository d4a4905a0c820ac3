//! Python bindings for `vtcodes`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use vtcodes::bounds::{self, LengthMode};
use vtcodes::{adversary, channel, code, erasure, Error, OffsetVector, Word, DEFAULT_ENUMERATION_BUDGET};

create_exception!(vtcodes_py, DecodingError, PyValueError, "Word is uncorrectable or inconsistent.");

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Uncorrectable(_) | Error::Inconsistent(_) => DecodingError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Parameters (q, n, d) of a checksum code.
#[pyclass(frozen, skip_from_py_object, name = "CodeSpec")]
#[derive(Clone)]
struct PyCodeSpec(vtcodes::CodeSpec);

#[pymethods]
impl PyCodeSpec {
    #[new]
    fn new(q: u64, n: usize, d: usize) -> PyResult<Self> {
        vtcodes::CodeSpec::new(q, n, d).map(Self).map_err(to_py)
    }

    #[getter]
    fn q(&self) -> u64 {
        self.0.q()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    #[getter]
    fn ell(&self) -> u64 {
        self.0.ell()
    }

    #[getter]
    fn sum_modulus(&self) -> u64 {
        self.0.sum_modulus()
    }

    #[getter]
    fn tau(&self) -> usize {
        self.0.tau()
    }

    fn __repr__(&self) -> String {
        format!("CodeSpec(q={}, n={}, d={})", self.0.q(), self.0.n(), self.0.d())
    }
}

fn offset(spec: &PyCodeSpec, b: Option<Vec<u64>>) -> PyResult<OffsetVector> {
    match b {
        Some(b) => OffsetVector::new(&spec.0, b).map_err(to_py),
        None => Ok(OffsetVector::zero(&spec.0)),
    }
}

fn full_word(spec: &PyCodeSpec, word: &[u64]) -> PyResult<()> {
    spec.0.validate_word(word).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (spec, word, b=None))]
fn is_codeword(spec: &PyCodeSpec, word: Vec<u64>, b: Option<Vec<u64>>) -> PyResult<bool> {
    full_word(spec, &word)?;
    Ok(code::is_codeword(&spec.0, &word, &offset(spec, b)?))
}

#[pyfunction]
fn syndrome_profile(spec: &PyCodeSpec, word: Vec<u64>) -> PyResult<Vec<u64>> {
    full_word(spec, &word)?;
    Ok(code::syndrome_profile(&spec.0, &word).as_slice().to_vec())
}

/// Fills the `None` entries of `word`.
#[pyfunction]
#[pyo3(signature = (spec, word, b=None))]
fn decode_erasures(spec: &PyCodeSpec, word: Vec<Option<u64>>, b: Option<Vec<u64>>) -> PyResult<Vec<u64>> {
    let b = offset(spec, b)?;
    erasure::decode_erasures(&spec.0, &Word::new(word), &b).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (spec, word, b=None))]
fn decode_errors(spec: &PyCodeSpec, word: Vec<u64>, b: Option<Vec<u64>>) -> PyResult<Vec<u64>> {
    let b = offset(spec, b)?;
    adversary::decode_errors(&spec.0, &word, &b).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (spec, word, b=None, scan=false))]
fn decode_single_error(spec: &PyCodeSpec, word: Vec<u64>, b: Option<Vec<u64>>, scan: bool) -> PyResult<Vec<u64>> {
    let b = offset(spec, b)?;
    let result = if scan {
        adversary::decode_single_error_scan(&spec.0, &word, &b)
    } else {
        adversary::decode_single_error(&spec.0, &word, &b)
    };
    result.map_err(to_py)
}

/// Upper bound on the redundancy, rounded half-up to two decimals.
#[pyfunction]
#[pyo3(signature = (q, n, d, ell=None))]
fn redundancy_upper_bound(q: u64, n: u64, d: u64, ell: Option<u64>) -> PyResult<f64> {
    let r = bounds::redundancy_upper_bound(q, n, d, ell).map_err(to_py)?;
    Ok(r.hundredths() as f64 / 100.0)
}

#[pyfunction]
fn cor34_interval(q: u64) -> PyResult<(u64, u64)> {
    bounds::cor34_interval(q).map(|i| (i.lo, i.hi)).map_err(to_py)
}

#[pyfunction]
fn cor35_interval(q: u64) -> PyResult<(u64, u64)> {
    bounds::cor35_interval(q).map(|i| (i.lo, i.hi)).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (q, d, doubled=false))]
fn cor37_admissible(q: u64, d: u64, doubled: bool) -> PyResult<Vec<u64>> {
    let mode = if doubled { LengthMode::Doubled } else { LengthMode::Prime };
    bounds::cor37_admissible(q, d, mode).map(|a| a.lengths).map_err(to_py)
}

/// Returns `(b, size)` for a largest coset.
#[pyfunction]
#[pyo3(signature = (spec, budget=None))]
fn best_offset_search(spec: &PyCodeSpec, budget: Option<u64>) -> PyResult<(Vec<u64>, u64)> {
    code::best_offset_search(&spec.0, budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET))
        .map(|(b, size)| (b.into_vec(), size))
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (word, q, erasures=0, errors=0, seed=0))]
fn corrupt(word: Vec<u64>, q: u64, erasures: usize, errors: usize, seed: u64) -> PyResult<Vec<Option<u64>>> {
    channel::corrupt(&word, q, erasures, errors, seed)
        .map(|w| w.symbols().to_vec())
        .map_err(to_py)
}

#[pymodule]
fn vtcodes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCodeSpec>()?;
    m.add("DecodingError", m.py().get_type::<DecodingError>())?;
    m.add_function(wrap_pyfunction!(is_codeword, m)?)?;
    m.add_function(wrap_pyfunction!(syndrome_profile, m)?)?;
    m.add_function(wrap_pyfunction!(decode_erasures, m)?)?;
    m.add_function(wrap_pyfunction!(decode_errors, m)?)?;
    m.add_function(wrap_pyfunction!(decode_single_error, m)?)?;
    m.add_function(wrap_pyfunction!(redundancy_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(cor34_interval, m)?)?;
    m.add_function(wrap_pyfunction!(cor35_interval, m)?)?;
    m.add_function(wrap_pyfunction!(cor37_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(best_offset_search, m)?)?;
    m.add_function(wrap_pyfunction!(corrupt, m)?)?;
    Ok(())
}
