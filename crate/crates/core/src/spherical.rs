//! Random geodesic drawings on the unit sphere: uniform sampling, the exact
//! arc-crossing predicate, Monte Carlo and exact expected crossing counts.
//!
//! This is the one floating-point corner of the crate. Crossings of random
//! arcs are open conditions, so degenerate samples have probability zero;
//! they are detected against small tolerances and resampled.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::formulas::crmax;
use crate::scalar::ExactScalar;

/// Tolerance for sign decisions in the arc predicate.
pub const PREDICATE_TOLERANCE: f64 = 1e-12;
/// Pairs of sampled vertices closer (or more antipodal) than this are
/// rejected and resampled.
pub const RESAMPLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SphericalError {
    #[error("degenerate arc: endpoints equal or antipodal, or great circles coincide")]
    DegenerateArc,
    #[error("cannot normalize a near-zero vector")]
    ZeroVector,
    #[error("maximum crossing count is zero; ratio undefined")]
    DivisionByZero,
    #[error("invalid spherical drawing: {0}")]
    InvalidDrawing(String),
}

/// A point on the unit sphere; `new` normalizes, so the norm is 1 up to
/// 1e-12.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, SphericalError> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm < RESAMPLE_TOLERANCE {
            return Err(SphericalError::ZeroVector);
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Uniform point on the sphere from a normalized 3-dimensional Gaussian
/// sample. Deterministic for a fixed generator state.
pub fn sample_uniform_sphere<R: Rng + ?Sized>(rng: &mut R) -> UnitVector {
    loop {
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = rng.sample(StandardNormal);
        let z: f64 = rng.sample(StandardNormal);
        if let Ok(u) = UnitVector::new(x, y, z) {
            return u;
        }
    }
}

/// True iff the minor great-circle arcs `a1a2` and `b1b2` share an interior
/// point.
///
/// The two great circles (when distinct) meet in the antipodal pair
/// `±normalize((a1×a2)×(b1×b2))`; the arcs cross iff one of the two points
/// lies strictly inside both minor arcs.
pub fn arcs_cross(
    a1: &UnitVector,
    a2: &UnitVector,
    b1: &UnitVector,
    b2: &UnitVector,
) -> Result<bool, SphericalError> {
    let na = arc_normal(a1, a2)?;
    let nb = arc_normal(b1, b2)?;
    let mut d = cross(na, nb);
    let dn = norm(d);
    if dn < PREDICATE_TOLERANCE {
        return Err(SphericalError::DegenerateArc);
    }
    for c in &mut d {
        *c /= dn;
    }
    let neg = [-d[0], -d[1], -d[2]];
    Ok((inside_minor_arc(d, a1, a2, na) && inside_minor_arc(d, b1, b2, nb))
        || (inside_minor_arc(neg, a1, a2, na) && inside_minor_arc(neg, b1, b2, nb)))
}

/// Unit normal of the great circle through two points; errors when the
/// points are equal or antipodal (no unique great circle).
fn arc_normal(a: &UnitVector, b: &UnitVector) -> Result<[f64; 3], SphericalError> {
    let mut n = cross(a.to_array(), b.to_array());
    let len = norm(n);
    if len < PREDICATE_TOLERANCE {
        return Err(SphericalError::DegenerateArc);
    }
    for c in &mut n {
        *c /= len;
    }
    Ok(n)
}

/// Strict interior test: `p` (on the great circle with normal `n`) lies
/// strictly between `a` and `b` along the minor arc.
fn inside_minor_arc(p: [f64; 3], a: &UnitVector, b: &UnitVector, n: [f64; 3]) -> bool {
    dot(cross(a.to_array(), p), n) > PREDICATE_TOLERANCE
        && dot(cross(p, b.to_array()), n) > PREDICATE_TOLERANCE
}

/// A geodesic drawing: partite-labeled unit vectors, edges drawn as minor
/// great-circle arcs between different parts.
#[derive(Debug, Clone)]
pub struct SphericalDrawing {
    part_sizes: Vec<usize>,
    positions: Vec<UnitVector>,
    part_of: Vec<usize>,
}

impl SphericalDrawing {
    /// Positions listed part by part. Degenerate position pairs are not
    /// rejected here; the arc predicate reports them when edges demand it.
    pub fn new(part_sizes: Vec<usize>, positions: Vec<UnitVector>) -> Result<Self, SphericalError> {
        if part_sizes.len() < 2 || part_sizes.iter().any(|&s| s == 0) {
            return Err(SphericalError::InvalidDrawing(
                "need at least 2 parts, all nonempty".into(),
            ));
        }
        let total: usize = part_sizes.iter().sum();
        if positions.len() != total {
            return Err(SphericalError::InvalidDrawing(format!(
                "expected {total} points, got {}",
                positions.len()
            )));
        }
        let mut part_of = Vec::with_capacity(total);
        for (i, &s) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(s));
        }
        Ok(Self {
            part_sizes,
            positions,
            part_of,
        })
    }

    /// Uniform random drawing. A fresh point closer than [`RESAMPLE_TOLERANCE`]
    /// to an existing point (or its antipode) is resampled, so the invariant
    /// "no two positions equal or antipodal" holds by construction.
    pub fn sample<R: Rng + ?Sized>(part_sizes: &[usize], rng: &mut R) -> Self {
        let total: usize = part_sizes.iter().sum();
        let mut positions: Vec<UnitVector> = Vec::with_capacity(total);
        while positions.len() < total {
            let p = sample_uniform_sphere(rng);
            let clash = positions.iter().any(|q| {
                let d2 = (p.x - q.x).powi(2) + (p.y - q.y).powi(2) + (p.z - q.z).powi(2);
                let s2 = (p.x + q.x).powi(2) + (p.y + q.y).powi(2) + (p.z + q.z).powi(2);
                d2 < RESAMPLE_TOLERANCE * RESAMPLE_TOLERANCE || s2 < RESAMPLE_TOLERANCE * RESAMPLE_TOLERANCE
            });
            if !clash {
                positions.push(p);
            }
        }
        Self::new(part_sizes.to_vec(), positions).expect("sampled drawing is structurally valid")
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn positions(&self) -> &[UnitVector] {
        &self.positions
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.positions.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.part_of[u] != self.part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        edges
    }
}

/// Number of unordered vertex-disjoint edge pairs whose arcs cross.
/// Degenerate arcs propagate as errors; Monte Carlo callers resample.
pub fn count_geodesic_crossings(d: &SphericalDrawing) -> Result<u64, SphericalError> {
    let edges = d.edges();
    let mut total = 0u64;
    for (i, &(u, v)) in edges.iter().enumerate() {
        for &(w, x) in &edges[i + 1..] {
            if w == u || w == v || x == u || x == v {
                continue;
            }
            if arcs_cross(&d.positions[u], &d.positions[v], &d.positions[w], &d.positions[x])? {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Exact count of unordered vertex-disjoint edge pairs in the balanced
/// complete r-partite graph: `C(E,2) − r·n·C((r−1)n, 2)` with
/// `E = C(r,2)·n²`.
pub fn disjoint_edge_pairs(r: u64, n: u64) -> BigInt {
    assert!(r >= 2 && n >= 1, "need r >= 2 and n >= 1");
    let e = binomial(BigInt::from(r), BigInt::from(2)) * BigInt::from(n) * BigInt::from(n);
    let all_pairs = &e * (&e - 1) / 2;
    let deg = BigInt::from((r - 1) * n);
    let incident = BigInt::from(r * n) * (&deg * (&deg - 1) / 2);
    all_pairs - incident
}

/// Expected number of crossings in a random geodesic drawing of the balanced
/// complete r-partite graph: each disjoint edge pair crosses with
/// probability 1/8, so by linearity this is `disjoint_edge_pairs(r,n) / 8`.
pub fn exact_expected_crossings(r: u64, n: u64) -> ExactScalar {
    ExactScalar::new(disjoint_edge_pairs(r, n), 8.into())
}

/// Exact ratio of the expected crossing count to the maximum crossing
/// number; tends to `zeta(r)` as `n` grows.
pub fn ratio_to_max(r: u64, n: u64) -> Result<ExactScalar, SphericalError> {
    let max = crmax(r, n);
    if max.is_zero() {
        return Err(SphericalError::DivisionByZero);
    }
    Ok(exact_expected_crossings(r, n) / ExactScalar::from_integer(max))
}

/// A Monte Carlo estimate with its seed, for reproducibility.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    /// `sample standard deviation / sqrt(trials)`; 0 when `trials == 1`.
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
    /// Drawings discarded (and redrawn) due to degenerate arcs.
    pub resamples: u64,
}

/// Sample mean of the geodesic crossing count over independent random
/// drawings of the balanced complete r-partite graph.
pub fn monte_carlo_s(r: usize, n: usize, trials: u64, seed: u64) -> McEstimate {
    monte_carlo_s_with_workers(r, n, trials, seed, 1)
}

/// Parallel variant: the trial range is split across `workers`, each with a
/// seed derived from (`seed`, worker index). Deterministic for a fixed
/// worker count; changing the worker count changes the sample stream but not
/// the statistical contract.
pub fn monte_carlo_s_with_workers(
    r: usize,
    n: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> McEstimate {
    assert!(r >= 2 && n >= 1, "need r >= 2 and n >= 1");
    assert!(trials >= 1 && workers >= 1);
    let part_sizes = vec![n; r];

    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let worker_seeds: Vec<u64> = (0..workers).map(|_| master.next_u64()).collect();
    let share = |w: usize| trials / workers as u64 + u64::from((w as u64) < trials % workers as u64);

    let run = |w: usize| -> (u128, u128, u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(worker_seeds[w]);
        let (mut sum, mut sumsq, mut resamples) = (0u128, 0u128, 0u64);
        for _ in 0..share(w) {
            let count = loop {
                let d = SphericalDrawing::sample(&part_sizes, &mut rng);
                match count_geodesic_crossings(&d) {
                    Ok(c) => break c,
                    Err(_) => resamples += 1,
                }
            };
            sum += count as u128;
            sumsq += (count as u128) * (count as u128);
        }
        (sum, sumsq, resamples)
    };

    let partials: Vec<(u128, u128, u64)> = if workers == 1 {
        vec![run(0)]
    } else {
        (0..workers).into_par_iter().map(run).collect()
    };
    let (sum, sumsq, resamples) = partials
        .into_iter()
        .fold((0u128, 0u128, 0u64), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));

    let t = trials as f64;
    let mean = sum as f64 / t;
    let std_error = if trials > 1 {
        // T·Σx² − (Σx)² computed exactly in integers, then scaled.
        let var_num = (trials as u128 * sumsq) as i128 - (sum * sum) as i128;
        let sample_var = (var_num.max(0) as f64) / (t * (t - 1.0));
        (sample_var / t).sqrt()
    } else {
        0.0
    };
    McEstimate {
        mean,
        std_error,
        trials,
        seed,
        resamples,
    }
}
