//! Python bindings for `ssok`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ssok::operad::ext::{ext_components, parse_sigma, standard_atomic, strict_fiber, ExtVariant};
use ssok::operad::{builtin_operad, Builtin, DiscreteOperad};
use ssok::sset::build::{boundary, horn, spine, standard_simplex};
use ssok::sset::SimplicialSet;
use ssok::suite::{run_suite, Selector, SuiteConfig};

fn bad(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn operad(name: &str, bound: usize) -> PyResult<DiscreteOperad> {
    let b: Builtin = name.parse().map_err(bad)?;
    Ok(builtin_operad(b, bound))
}

fn sset(kind: &str, n: usize, k: Option<usize>) -> PyResult<SimplicialSet> {
    Ok(match kind {
        "simplex" => standard_simplex(n, None),
        "boundary" => boundary(n),
        "horn" => horn(n, k.ok_or_else(|| bad("horn needs k"))?).map_err(bad)?,
        "spine" => spine(n),
        _ => return Err(bad(format!("unknown simplicial set `{kind}`"))),
    })
}

/// Nondegenerate simplex counts by dimension.
#[pyfunction]
#[pyo3(signature = (kind, n, k=None))]
fn sset_counts(kind: &str, n: usize, k: Option<usize>) -> PyResult<Vec<usize>> {
    Ok(sset(kind, n, k)?.counts())
}

#[pyfunction]
#[pyo3(signature = (kind, n, k=None))]
fn euler(kind: &str, n: usize, k: Option<usize>) -> PyResult<i64> {
    Ok(ssok::properties::euler(&sset(kind, n, k)?))
}

/// Size of the strict fiber of a single-output `sigma` over the standard atomic map.
#[pyfunction]
#[pyo3(signature = (operad_name, sigma, arity_bound=4))]
fn strict_fiber_size(operad_name: &str, sigma: &str, arity_bound: usize) -> PyResult<usize> {
    let o = operad(operad_name, arity_bound)?;
    let s = parse_sigma(&o, sigma).map_err(bad)?;
    if s.target() != 1 {
        return Err(bad("sigma must have a single output"));
    }
    let i = standard_atomic(&o, s.source()).map_err(bad)?;
    Ok(strict_fiber(&o, s.ops[0], &i).map_err(bad)?.len())
}

/// Number of connected components of the extension category.
#[pyfunction]
#[pyo3(signature = (operad_name, sigma, full=false, arity_bound=4))]
fn ext_pi0(operad_name: &str, sigma: &str, full: bool, arity_bound: usize) -> PyResult<usize> {
    let o = operad(operad_name, arity_bound)?;
    let s = parse_sigma(&o, sigma).map_err(bad)?;
    let v = if full { ExtVariant::Full } else { ExtVariant::Compatible };
    Ok(ext_components(&o, &s, v).map_err(bad)?.count())
}

/// Runs a check suite and returns its JSON lines.
#[pyfunction]
#[pyo3(signature = (selector="all"))]
fn suite(py: Python<'_>, selector: &str) -> PyResult<String> {
    let sel: Selector = selector.parse().map_err(bad)?;
    let cfg = SuiteConfig::default();
    Ok(py.detach(|| run_suite(sel, &cfg).to_jsonl()))
}

#[pymodule]
fn ssok_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(sset_counts, m)?)?;
    m.add_function(wrap_pyfunction!(euler, m)?)?;
    m.add_function(wrap_pyfunction!(strict_fiber_size, m)?)?;
    m.add_function(wrap_pyfunction!(ext_pi0, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    Ok(())
}
