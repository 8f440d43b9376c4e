//! Python bindings: the main types and operations of `crossnum-core`.
//!
//! Exact rationals cross the boundary as `fractions.Fraction`, exact
//! integers as Python ints, so nothing is rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use crossnum_core::bounds_search;
use crossnum_core::constructions;
use crossnum_core::exact_geom::{
    self, CrossingReport, PartitionType, Point2, RectilinearDrawing,
};
use crossnum_core::formulas;
use crossnum_core::scalar::ExactScalar;
use crossnum_core::spherical;

fn value_error<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition_name(t: PartitionType) -> &'static str {
    match t {
        PartitionType::Four => "four",
        PartitionType::ThreeOne => "three_one",
        PartitionType::TwoTwo => "two_two",
        PartitionType::TwoOneOne => "two_one_one",
        PartitionType::OneOneOneOne => "one_one_one_one",
    }
}

fn report_to_dict<'py>(py: Python<'py>, report: &CrossingReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("total", report.total)?;
    let by = PyDict::new(py);
    for (k, v) in &report.by_type {
        by.set_item(partition_name(*k), v)?;
    }
    d.set_item("by_type", by)?;
    if let Some(list) = &report.crossing_list {
        d.set_item("crossing_list", list.clone())?;
    }
    Ok(d)
}

/// A straight-line drawing of a complete multipartite graph with exact
/// rational coordinates.
#[pyclass(name = "Drawing")]
struct PyDrawing {
    inner: RectilinearDrawing,
}

#[pymethods]
impl PyDrawing {
    /// Alternating 3-line drawing of K_{n1,n2,n3}; meets the A bound.
    #[staticmethod]
    fn alternating_3line(n1: usize, n2: usize, n3: usize) -> PyResult<Self> {
        if n1 < 1 || n2 < 1 || n3 < 1 {
            return Err(PyValueError::new_err("part sizes must be positive"));
        }
        Ok(Self {
            inner: constructions::alternating_3line(n1, n2, n3),
        })
    }

    /// 2-line drawing of K_{n,m} realizing the Zarankiewicz count Z(n,m).
    #[staticmethod]
    fn two_line(n: usize, m: usize) -> PyResult<Self> {
        if n < 1 || m < 1 {
            return Err(PyValueError::new_err("part sizes must be positive"));
        }
        Ok(Self {
            inner: constructions::two_line(n, m),
        })
    }

    /// Convex-position drawing of the balanced r-partite graph realizing the
    /// maximum crossing number.
    #[staticmethod]
    fn convex_max(r: usize, n: usize) -> PyResult<Self> {
        if r < 2 || n < 1 || r * n < 3 {
            return Err(PyValueError::new_err("need r >= 2, n >= 1, and r*n >= 3"));
        }
        Ok(Self {
            inner: constructions::convex_max(r, n),
        })
    }

    /// Build a drawing from explicit part sizes and Fraction coordinate
    /// pairs (one part after another).
    #[staticmethod]
    fn from_points(part_sizes: Vec<usize>, points: Vec<(BigRational, BigRational)>) -> PyResult<Self> {
        let positions = points
            .into_iter()
            .map(|(x, y)| Point2::new(x, y))
            .collect();
        Ok(Self {
            inner: RectilinearDrawing::new(part_sizes, positions).map_err(value_error)?,
        })
    }

    /// Parse the shared drawing JSON format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: RectilinearDrawing::from_json_str(text).map_err(value_error)?,
        })
    }

    /// Serialize to the shared drawing JSON format (rationals as exact
    /// "p/q" strings).
    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    /// Deterministic SVG rendering.
    #[pyo3(signature = (mark_crossings = true))]
    fn to_svg(&self, mark_crossings: bool) -> String {
        constructions::export_svg(
            &self.inner,
            &constructions::SvgOptions {
                mark_crossings,
                ..constructions::SvgOptions::default()
            },
        )
    }

    /// Exact crossing report: `{"total": int, "by_type": {...}}`, plus
    /// `"crossing_list"` when `list=True`.
    #[pyo3(signature = (list = false))]
    fn count<'py>(&self, py: Python<'py>, list: bool) -> PyResult<Bound<'py, PyDict>> {
        let report = if list {
            exact_geom::count_crossings_listing(&self.inner)
        } else {
            exact_geom::count_crossings(&self.inner)
        }
        .map_err(value_error)?;
        report_to_dict(py, &report)
    }

    /// Exact coordinates as Fraction pairs, in vertex order.
    fn positions(&self) -> Vec<(BigRational, BigRational)> {
        self.inner
            .positions()
            .iter()
            .map(|p| (p.x.clone(), p.y.clone()))
            .collect()
    }

    #[getter]
    fn part_sizes(&self) -> Vec<usize> {
        self.inner.part_sizes().to_vec()
    }

    /// Part index of each vertex, in vertex order.
    fn part_labels(&self) -> Vec<usize> {
        self.inner.part_labels().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Drawing(part_sizes={:?}, vertices={})",
            self.inner.part_sizes(),
            self.inner.vertex_count()
        )
    }
}

/// Zarankiewicz bound Z(n,m) for K_{n,m}.
#[pyfunction]
fn zarankiewicz_z(n: u64, m: u64) -> BigInt {
    formulas::zarankiewicz_z(n, m)
}

/// Hill bound H(n) for K_n.
#[pyfunction]
fn hill_h(n: u64) -> BigInt {
    formulas::hill_h(n)
}

/// The tripartite upper bound A(n1,n2,n3).
#[pyfunction]
fn bound_a(n1: u64, n2: u64, n3: u64) -> BigInt {
    formulas::bound_a(n1, n2, n3)
}

/// The ray-by-ray form A_3L(n1,n2,n3); equal to A for all inputs.
#[pyfunction]
fn bound_a3l(n1: u64, n2: u64, n3: u64) -> BigInt {
    formulas::bound_a3l(n1, n2, n3)
}

/// Maximum crossing number of the balanced complete r-partite graph.
#[pyfunction]
fn crmax(r: u64, n: u64) -> PyResult<BigInt> {
    if r < 2 {
        return Err(PyValueError::new_err("need r >= 2"));
    }
    Ok(formulas::crmax(r, n))
}

/// zeta(r) = 3(r^2-r) / (8(r^2+r-3)) as an exact Fraction.
#[pyfunction]
fn zeta(r: u64) -> PyResult<BigRational> {
    if r < 2 {
        return Err(PyValueError::new_err("need r >= 2"));
    }
    Ok(formulas::zeta(r))
}

/// Asymptotic four-point type probabilities (alpha, beta, gamma).
#[pyfunction]
fn type_probabilities(r: u64) -> PyResult<(BigRational, BigRational, BigRational)> {
    if r < 2 {
        return Err(PyValueError::new_err("need r >= 2"));
    }
    let p = formulas::type_probabilities(r);
    Ok((p.alpha, p.beta, p.gamma))
}

/// The expected-over-maximum ratio written through the type probabilities;
/// identically equal to zeta(r).
#[pyfunction]
fn s_asymptotic_ratio(r: u64) -> PyResult<BigRational> {
    if r < 2 {
        return Err(PyValueError::new_err("need r >= 2"));
    }
    Ok(formulas::s_asymptotic_ratio(r))
}

/// Known exact crossing number of K_{a,b,n} for (a,b) in
/// {(1,3),(2,3),(1,4),(2,4)}.
#[pyfunction]
fn known_small_cr(a: u64, b: u64, n: u64) -> PyResult<BigInt> {
    formulas::known_small_cr(a, b, n).map_err(value_error)
}

/// Orientation of the point triple as -1 (clockwise), 0 (collinear), or +1
/// (counterclockwise). Coordinates may be ints or Fractions.
#[pyfunction]
fn orient(
    p: (BigRational, BigRational),
    q: (BigRational, BigRational),
    r: (BigRational, BigRational),
) -> i8 {
    match exact_geom::orient(
        &Point2::new(p.0, p.1),
        &Point2::new(q.0, q.1),
        &Point2::new(r.0, r.1),
    ) {
        exact_geom::Orientation::CounterClockwise => 1,
        exact_geom::Orientation::Clockwise => -1,
        exact_geom::Orientation::Collinear => 0,
    }
}

/// True iff the open segments cross in exactly one interior point. Raises
/// ValueError on collinear overlapping segments.
#[pyfunction]
fn segments_cross_properly(
    a1: (BigRational, BigRational),
    a2: (BigRational, BigRational),
    b1: (BigRational, BigRational),
    b2: (BigRational, BigRational),
) -> PyResult<bool> {
    exact_geom::segments_cross_properly(
        &Point2::new(a1.0, a1.1),
        &Point2::new(a2.0, a2.1),
        &Point2::new(b1.0, b1.1),
        &Point2::new(b2.0, b2.1),
    )
    .map_err(value_error)
}

/// Multiset shape of four part labels: "four", "three_one", "two_two",
/// "two_one_one", or "one_one_one_one".
#[pyfunction]
fn classify_quadruple(parts: [usize; 4]) -> &'static str {
    partition_name(exact_geom::classify_quadruple(parts))
}

/// Exact number of unordered vertex-disjoint edge pairs in the balanced
/// complete r-partite graph.
#[pyfunction]
fn disjoint_edge_pairs(r: u64, n: u64) -> PyResult<BigInt> {
    if r < 2 || n < 1 {
        return Err(PyValueError::new_err("need r >= 2 and n >= 1"));
    }
    Ok(spherical::disjoint_edge_pairs(r, n))
}

/// Exact expected crossings of a random geodesic drawing:
/// disjoint_edge_pairs(r,n) / 8.
#[pyfunction]
fn exact_expected_crossings(r: u64, n: u64) -> PyResult<BigRational> {
    if r < 2 || n < 1 {
        return Err(PyValueError::new_err("need r >= 2 and n >= 1"));
    }
    Ok(spherical::exact_expected_crossings(r, n))
}

/// Exact ratio of expected to maximum crossings; tends to zeta(r).
#[pyfunction]
fn ratio_to_max(r: u64, n: u64) -> PyResult<BigRational> {
    if r < 2 || n < 1 {
        return Err(PyValueError::new_err("need r >= 2 and n >= 1"));
    }
    spherical::ratio_to_max(r, n).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
}

/// Monte Carlo estimate of the expected geodesic crossing count; returns
/// `{"mean", "std_error", "trials", "seed", "resamples"}`.
#[pyfunction]
#[pyo3(signature = (r, n, trials, seed, workers = 1))]
fn monte_carlo_s<'py>(
    py: Python<'py>,
    r: usize,
    n: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> PyResult<Bound<'py, PyDict>> {
    if r < 2 || n < 1 || trials < 1 || workers < 1 {
        return Err(PyValueError::new_err(
            "need r >= 2, n >= 1, trials >= 1, workers >= 1",
        ));
    }
    let est = spherical::monte_carlo_s_with_workers(r, n, trials, seed, workers);
    let d = PyDict::new(py);
    d.set_item("mean", est.mean)?;
    d.set_item("std_error", est.std_error)?;
    d.set_item("trials", est.trials)?;
    d.set_item("seed", est.seed)?;
    d.set_item("resamples", est.resamples)?;
    Ok(d)
}

/// The finite-n counting lower bound for cr(K_{n,n,n}) as a dict of exact
/// Fractions.
#[pyfunction]
fn counting_bound<'py>(py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyDict>> {
    if n < 3 {
        return Err(PyValueError::new_err("need n >= 3"));
    }
    let cb = bounds_search::counting_bound(n);
    let d = PyDict::new(py);
    d.set_item("n", cb.n)?;
    d.set_item("total_weight", cb.total_weight)?;
    d.set_item("mult_22", cb.mult_22)?;
    d.set_item("mult_211", cb.mult_211)?;
    d.set_item("bound", cb.bound)?;
    d.set_item("ratio_to_a", cb.ratio_to_a)?;
    Ok(d)
}

/// Asymptotic coefficient 6c/35 of A(n,n,n) implied by an average 7-point
/// crossing count c in [0, 35].
#[pyfunction]
fn flag_extrapolation(c: BigRational) -> PyResult<BigRational> {
    if c < ExactScalar::new(0.into(), 1.into()) || c > ExactScalar::new(35.into(), 1.into()) {
        return Err(PyValueError::new_err("c must lie in [0, 35]"));
    }
    Ok(bounds_search::flag_extrapolation(&c))
}

/// Naive density coefficient 6*min_c/35.
#[pyfunction]
fn naive_density_bound(min_c: u64) -> PyResult<BigRational> {
    if min_c > 35 {
        return Err(PyValueError::new_err("min_c must lie in [0, 35]"));
    }
    Ok(bounds_search::naive_density_bound(min_c))
}

/// Random-restart local search for low-crossing drawings; returns
/// `(Drawing, summary_dict)`.
#[pyfunction]
fn minimize_crossings<'py>(
    py: Python<'py>,
    part_sizes: Vec<usize>,
    iterations: u64,
    restarts: u64,
    seed: u64,
) -> PyResult<(PyDrawing, Bound<'py, PyDict>)> {
    let total: usize = part_sizes.iter().sum();
    if part_sizes.len() < 2 || part_sizes.iter().any(|&s| s == 0) || total > 12 {
        return Err(PyValueError::new_err(
            "need at least 2 nonempty parts and at most 12 vertices",
        ));
    }
    if iterations < 1 || restarts < 1 {
        return Err(PyValueError::new_err("need iterations >= 1 and restarts >= 1"));
    }
    let result = bounds_search::minimize_crossings(&part_sizes, iterations, restarts, seed);
    let d = PyDict::new(py);
    d.set_item("best_count", result.best_count)?;
    d.set_item("iterations", result.iterations)?;
    d.set_item("seed", result.seed)?;
    d.set_item("degenerate_retries", result.degenerate_retries)?;
    d.set_item("history", PyList::new(py, result.history)?)?;
    Ok((
        PyDrawing {
            inner: result.best_drawing,
        },
        d,
    ))
}

/// Histogram of crossing counts over random general-position configurations
/// (the first sample is the matching construction drawing).
#[pyfunction]
fn crossing_distribution<'py>(
    py: Python<'py>,
    part_sizes: Vec<usize>,
    samples: u64,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let total: usize = part_sizes.iter().sum();
    if part_sizes.len() < 2 || part_sizes.iter().any(|&s| s == 0) || total > 9 {
        return Err(PyValueError::new_err(
            "need at least 2 nonempty parts and at most 9 vertices",
        ));
    }
    if samples < 1 {
        return Err(PyValueError::new_err("need samples >= 1"));
    }
    let hist = bounds_search::crossing_distribution(&part_sizes, samples, seed);
    let d = PyDict::new(py);
    for (count, freq) in hist {
        d.set_item(count, freq)?;
    }
    Ok(d)
}

#[pymodule]
fn crossnum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDrawing>()?;
    m.add_function(wrap_pyfunction!(zarankiewicz_z, m)?)?;
    m.add_function(wrap_pyfunction!(hill_h, m)?)?;
    m.add_function(wrap_pyfunction!(bound_a, m)?)?;
    m.add_function(wrap_pyfunction!(bound_a3l, m)?)?;
    m.add_function(wrap_pyfunction!(crmax, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(type_probabilities, m)?)?;
    m.add_function(wrap_pyfunction!(s_asymptotic_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(known_small_cr, m)?)?;
    m.add_function(wrap_pyfunction!(orient, m)?)?;
    m.add_function(wrap_pyfunction!(segments_cross_properly, m)?)?;
    m.add_function(wrap_pyfunction!(classify_quadruple, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_edge_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(exact_expected_crossings, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_to_max, m)?)?;
    m.add_function(wrap_pyfunction!(monte_carlo_s, m)?)?;
    m.add_function(wrap_pyfunction!(counting_bound, m)?)?;
    m.add_function(wrap_pyfunction!(flag_extrapolation, m)?)?;
    m.add_function(wrap_pyfunction!(naive_density_bound, m)?)?;
    m.add_function(wrap_pyfunction!(minimize_crossings, m)?)?;
    m.add_function(wrap_pyfunction!(crossing_distribution, m)?)?;
    Ok(())
}
