//! Python bindings. Runs return the same JSON documents as the CLI.

use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ffdensity::harness::{
    cmd_one_level, cmd_ratio_average, cmd_two_level, cmd_verify, Mode, RunConfig,
};
use ffdensity::parallel::Precision;
use ffdensity::ratios::{default_cutoff, default_order, predict_one_level, predict_two_level, TailVariant};
use ffdensity::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Numerical(_) => PyArithmeticError::new_err(e.to_string()),
        Error::Config(_) | Error::InvalidField(_) | Error::InvalidArgument(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn tail(s: &str) -> PyResult<TailVariant> {
    s.parse().map_err(py_err)
}

fn precision(s: &str) -> PyResult<Precision> {
    match s {
        "double" => Ok(Precision::Double),
        "compensated" => Ok(Precision::Compensated),
        _ => Err(PyValueError::new_err(format!("unknown precision {s:?}"))),
    }
}

fn config(mode: Mode, q: u32, g: usize, n: usize, alpha: Complex64, threads: usize) -> RunConfig {
    RunConfig {
        mode,
        q,
        g: vec![g],
        n: vec![n],
        alpha,
        threads,
        ..RunConfig::default()
    }
}

/// One-level report as a JSON string.
#[pyfunction]
#[pyo3(signature = (q, g, n, alpha, cutoff=None, threads=1))]
fn one_level(
    py: Python<'_>,
    q: u32,
    g: usize,
    n: usize,
    alpha: Complex64,
    cutoff: Option<usize>,
    threads: usize,
) -> PyResult<String> {
    let cfg = RunConfig {
        cutoff,
        ..config(Mode::OneLevel, q, g, n, alpha, threads)
    };
    py.detach(|| cmd_one_level(&cfg)).map(|r| r.to_json()).map_err(py_err)
}

/// Two-level report as a JSON string.
#[pyfunction]
#[pyo3(signature = (q, g, n, alpha, beta, tail_variant="geometric", order=None, cutoff=None, threads=1))]
#[allow(clippy::too_many_arguments)]
fn two_level(
    py: Python<'_>,
    q: u32,
    g: usize,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    tail_variant: &str,
    order: Option<i64>,
    cutoff: Option<usize>,
    threads: usize,
) -> PyResult<String> {
    let cfg = RunConfig {
        beta: Some(beta),
        tail_variant: tail(tail_variant)?,
        order,
        cutoff,
        ..config(Mode::TwoLevel, q, g, n, alpha, threads)
    };
    py.detach(|| cmd_two_level(&cfg)).map(|r| r.to_json()).map_err(py_err)
}

/// Ratio-average report as a JSON string.
#[pyfunction]
#[pyo3(signature = (q, g, alpha, beta, gamma, delta, precision="double", threads=1))]
#[allow(clippy::too_many_arguments)]
fn ratio_average(
    py: Python<'_>,
    q: u32,
    g: usize,
    alpha: Complex64,
    beta: Complex64,
    gamma: Complex64,
    delta: Complex64,
    precision: &str,
    threads: usize,
) -> PyResult<String> {
    let cfg = RunConfig {
        beta: Some(beta),
        gamma: Some(gamma),
        delta: Some(delta),
        precision: self::precision(precision)?,
        ..config(Mode::RatioAverage, q, g, 1, alpha, threads)
    };
    py.detach(|| cmd_ratio_average(&cfg)).map(|r| r.to_json()).map_err(py_err)
}

/// Lemma verification suites; returns (passed, report JSON).
#[pyfunction]
#[pyo3(signature = (q=5, threads=1))]
fn verify(py: Python<'_>, q: u32, threads: usize) -> PyResult<(bool, String)> {
    let cfg = RunConfig {
        mode: Mode::VerifyLemmas,
        q,
        threads,
        ..RunConfig::default()
    };
    py.detach(|| cmd_verify(&cfg))
        .map(|r| (r.passed, r.to_json()))
        .map_err(py_err)
}

/// (type0, type1, type2, total) of the one-level prediction.
#[pyfunction]
#[pyo3(signature = (q, g, n, alpha, cutoff=None))]
fn predict_one(
    q: u32,
    g: usize,
    n: usize,
    alpha: Complex64,
    cutoff: Option<usize>,
) -> PyResult<(Complex64, Complex64, Complex64, Complex64)> {
    let p = predict_one_level(q, g, n, alpha, cutoff.unwrap_or_else(|| default_cutoff(g))).map_err(py_err)?;
    Ok((p.type0, p.type1, p.type2, p.total))
}

/// (type0, type1, type2, total) of the two-level prediction.
#[pyfunction]
#[pyo3(signature = (q, g, n, alpha, beta, tail_variant="geometric"))]
fn predict_two(
    q: u32,
    g: usize,
    n: usize,
    alpha: Complex64,
    beta: Complex64,
    tail_variant: &str,
) -> PyResult<(Complex64, Complex64, Complex64, Complex64)> {
    let p = predict_two_level(
        q,
        g,
        n,
        alpha,
        beta,
        tail(tail_variant)?,
        default_order(n),
        default_cutoff(g),
    )
    .map_err(py_err)?;
    Ok((p.type0, p.type1, p.type2, p.total))
}

#[pymodule]
fn ffdensity_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(one_level, m)?)?;
    m.add_function(wrap_pyfunction!(two_level, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_average, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(predict_one, m)?)?;
    m.add_function(wrap_pyfunction!(predict_two, m)?)?;
    m.add("SCHEMA_VERSION", ffdensity::harness::SCHEMA_VERSION)?;
    Ok(())
}
