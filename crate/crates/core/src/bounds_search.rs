//! Lower-bound arithmetic for balanced tripartite crossing numbers and a
//! stochastic rectilinear crossing minimizer for small instances.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Signed;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{alternating_3line, two_line};
use crate::exact_geom::{
    scaled_integer_coords, scan_total, try_i64_coords, GeometryError, Point2, RectilinearDrawing,
};
use crate::formulas::{bound_a, known_small_cr};
use crate::scalar::ExactScalar;

/// The finite-n counting lower bound for `cr(K_{n,n,n})` obtained by
/// averaging the known crossing number of `K_{2,3,n}` over all copies inside
/// `K_{n,n,n}` and dividing by the worst-case multiplicity of a crossing.
#[derive(Debug, Clone, PartialEq)]
pub struct CountingBound {
    pub n: u64,
    /// Number of `K_{2,3,n}` copies times `cr(K_{2,3,n})`.
    pub total_weight: ExactScalar,
    /// Multiplicity with which a (2,2)-type crossing is counted.
    pub mult_22: ExactScalar,
    /// Multiplicity with which a (2,1,1)-type crossing is counted.
    pub mult_211: ExactScalar,
    /// `total_weight / max(mult_22, mult_211)`.
    pub bound: ExactScalar,
    /// `bound / A(n,n,n)`; tends to 2/3 from above.
    pub ratio_to_a: ExactScalar,
}

/// Evaluates the counting bound exactly at finite `n ≥ 3`.
///
/// The copy count is `6·C(n,2)·C(n,3)`; the multiplicities are the exact
/// binomial sums for how often a fixed crossing of each type lands inside a
/// copy. The bound divides by whichever multiplicity is larger at this `n`
/// rather than assuming the asymptotically dominant one.
pub fn counting_bound(n: u64) -> CountingBound {
    assert!(n >= 3, "counting_bound requires n >= 3");
    let c = |a: u64, k: u64| binomial(BigInt::from(a), BigInt::from(k));
    let int = ExactScalar::from_integer;

    let copies = 6 * c(n, 2) * c(n, 3);
    let total_weight = int(copies * known_small_cr(2, 3, n).expect("(2,3,n) is a known family"));
    let mult_22 = int(2 * (c(n - 2, 1) + c(n, 3) + c(n, 2) * c(n - 2, 1)));
    let mult_211 = int(2 * (c(n - 1, 2) + c(n - 1, 1) * c(n - 2, 1) + c(n - 1, 1) * c(n - 1, 2)));
    let bound = &total_weight / mult_22.clone().max(mult_211.clone());
    let ratio_to_a = &bound / int(bound_a(n, n, n));
    CountingBound {
        n,
        total_weight,
        mult_22,
        mult_211,
        bound,
        ratio_to_a,
    }
}

/// Converts an average crossing count `c` over 7-vertex tripartite
/// sub-drawings into the asymptotic coefficient of `A(n,n,n)` it implies:
/// there are `C(7,4) = 35` quadruples per sub-drawing and `C(3n,4) ≈ 6·A(n,n,n)`
/// quadruples overall, so the coefficient is `6c/35`.
pub fn flag_extrapolation(c: &ExactScalar) -> ExactScalar {
    assert!(
        !c.is_negative() && *c <= ExactScalar::from_integer(35.into()),
        "average crossing count over 7 points lies in [0, 35]"
    );
    c * ExactScalar::new(6.into(), 35.into())
}

/// The naive density bound: extrapolates from the minimum crossing count
/// over 7-vertex sub-drawings instead of an optimized average. Far weaker
/// (`min_c = 2` gives coefficient `12/35 ≈ 0.343`).
pub fn naive_density_bound(min_c: u64) -> ExactScalar {
    ExactScalar::new((6 * min_c).into(), 35.into())
}

/// Outcome of the random-restart local search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best_drawing: RectilinearDrawing,
    pub best_count: u64,
    /// Total move proposals evaluated across all restarts.
    pub iterations: u64,
    pub seed: u64,
    /// `(iteration, count)` improvements within the winning restart,
    /// starting at iteration 0 with its initial count; non-increasing.
    pub history: Vec<(u64, u64)>,
    /// Moves rejected because they produced a degenerate configuration or a
    /// duplicate point.
    pub degenerate_retries: u64,
}

struct RestartOutcome {
    points: Vec<[i64; 2]>,
    count: u64,
    history: Vec<(u64, u64)>,
    performed: u64,
    retries: u64,
}

/// Random-restart local search for low-crossing straight-line drawings.
///
/// Starts from random integer-grid configurations (grid side `4·Σn`), except
/// that the first restart is seeded with the alternating 3-line drawing for
/// tripartite profiles (the 2-line drawing for bipartite ones), so the
/// result never exceeds that construction's count. Moves displace a single
/// vertex to a nearby grid point and are accepted only on strict
/// improvement. Deterministic for a fixed seed.
pub fn minimize_crossings(
    part_sizes: &[usize],
    iterations: u64,
    restarts: u64,
    seed: u64,
) -> SearchResult {
    let total: usize = part_sizes.iter().sum();
    assert!(total <= 12, "search is desk-scale: at most 12 vertices");
    assert!(part_sizes.len() >= 2 && part_sizes.iter().all(|&s| s >= 1));
    assert!(iterations >= 1 && restarts >= 1);

    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let restart_seeds: Vec<u64> = (0..restarts).map(|_| master.next_u64()).collect();

    let outcomes: Vec<RestartOutcome> = (0..restarts as usize)
        .into_par_iter()
        .map(|r| run_restart(part_sizes, iterations, restart_seeds[r], r == 0))
        .collect();

    let performed: u64 = outcomes.iter().map(|o| o.performed).sum();
    let retries: u64 = outcomes.iter().map(|o| o.retries).sum();
    let best = outcomes
        .into_iter()
        .enumerate()
        .min_by_key(|(i, o)| (o.count, *i))
        .map(|(_, o)| o)
        .expect("at least one restart");

    let positions = best
        .points
        .iter()
        .map(|&[x, y]| Point2::from_integers(x, y))
        .collect();
    let best_drawing = RectilinearDrawing::new(part_sizes.to_vec(), positions)
        .expect("search keeps configurations valid");
    SearchResult {
        best_drawing,
        best_count: best.count,
        iterations: performed,
        seed,
        history: best.history,
        degenerate_retries: retries,
    }
}

fn flat_parts(part_sizes: &[usize]) -> Vec<usize> {
    let mut parts = Vec::with_capacity(part_sizes.iter().sum());
    for (i, &s) in part_sizes.iter().enumerate() {
        parts.extend(std::iter::repeat(i).take(s));
    }
    parts
}

fn cross_part_edges(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..parts.len() {
        for v in u + 1..parts.len() {
            if parts[u] != parts[v] {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Integer coordinates of a construction drawing (exists for every
/// construction in this crate: their common denominators are tiny).
fn construction_grid_points(d: &RectilinearDrawing) -> Vec<[i64; 2]> {
    try_i64_coords(&scaled_integer_coords(d.positions()))
        .expect("construction coordinates fit the integer grid")
}

fn seeded_start(part_sizes: &[usize]) -> Option<Vec<[i64; 2]>> {
    match part_sizes.len() {
        3 => Some(construction_grid_points(&alternating_3line(
            part_sizes[0],
            part_sizes[1],
            part_sizes[2],
        ))),
        2 => Some(construction_grid_points(&two_line(part_sizes[0], part_sizes[1]))),
        _ => None,
    }
}

fn random_start<R: Rng>(
    rng: &mut R,
    count: usize,
    grid: i64,
    parts: &[usize],
    edges: &[(usize, usize)],
) -> Vec<[i64; 2]> {
    'config: for _ in 0..100_000 {
        let mut pts: Vec<[i64; 2]> = Vec::with_capacity(count);
        while pts.len() < count {
            let p = [rng.gen_range(0..=grid), rng.gen_range(0..=grid)];
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        if scan_total(&pts, parts, edges).is_err() {
            continue 'config;
        }
        return pts;
    }
    unreachable!("valid random configurations are abundant on this grid")
}

fn run_restart(part_sizes: &[usize], iterations: u64, seed: u64, use_seeded_start: bool) -> RestartOutcome {
    let parts = flat_parts(part_sizes);
    let edges = cross_part_edges(&parts);
    let grid = 4 * parts.len() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut retries = 0u64;

    let mut pts = match seeded_start(part_sizes) {
        Some(seeded) if use_seeded_start => seeded,
        _ => random_start(&mut rng, parts.len(), grid, &parts, &edges),
    };
    let mut current =
        scan_total(&pts, &parts, &edges).expect("start configuration was validated");
    let mut history = vec![(0u64, current)];

    let span = {
        let (mut lo, mut hi) = (i64::MAX, i64::MIN);
        for p in &pts {
            lo = lo.min(p[0]).min(p[1]);
            hi = hi.max(p[0]).max(p[1]);
        }
        (hi - lo).max(1)
    };
    let radius = (span / 8).max(2);

    let mut performed = 0u64;
    for it in 1..=iterations {
        if current == 0 {
            break;
        }
        performed += 1;
        let v = rng.gen_range(0..pts.len());
        let (dx, dy) = loop {
            let d = (rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius));
            if d != (0, 0) {
                break d;
            }
        };
        let candidate = [pts[v][0] + dx, pts[v][1] + dy];
        if pts.contains(&candidate) {
            retries += 1;
            continue;
        }
        let old = pts[v];
        pts[v] = candidate;
        match scan_total(&pts, &parts, &edges) {
            Err(_) => {
                pts[v] = old;
                retries += 1;
            }
            Ok(count) if count < current => {
                current = count;
                history.push((it, count));
            }
            Ok(_) => pts[v] = old,
        }
    }

    RestartOutcome {
        points: pts,
        count: current,
        history,
        performed,
        retries,
    }
}

/// Empirical distribution of crossing counts over random general-position
/// integer configurations of `K_{part_sizes}`. The first sample is the
/// matching construction drawing (alternating 3-line for tripartite
/// profiles, 2-line for bipartite ones) so the known-good configuration is
/// always included; the rest are uniform on the grid with collinear triples
/// rejected. Deterministic for a fixed seed.
pub fn crossing_distribution(
    part_sizes: &[usize],
    samples: u64,
    seed: u64,
) -> BTreeMap<u64, u64> {
    let total: usize = part_sizes.iter().sum();
    assert!(total <= 9, "distribution sampling is desk-scale: at most 9 vertices");
    assert!(part_sizes.len() >= 2 && part_sizes.iter().all(|&s| s >= 1));
    assert!(samples >= 1);

    let parts = flat_parts(part_sizes);
    let edges = cross_part_edges(&parts);
    let grid = 4 * total as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut histogram = BTreeMap::new();

    for s in 0..samples {
        let pts = if s == 0 {
            match seeded_start(part_sizes) {
                Some(seeded) => seeded,
                None => general_position_sample(&mut rng, total, grid),
            }
        } else {
            general_position_sample(&mut rng, total, grid)
        };
        let count = scan_total(&pts, &parts, &edges)
            .expect("general-position configurations cannot be degenerate");
        *histogram.entry(count).or_insert(0) += 1;
    }
    histogram
}

fn orient_i64(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> i128 {
    (b[0] - a[0]) as i128 * (c[1] - a[1]) as i128 - (b[1] - a[1]) as i128 * (c[0] - a[0]) as i128
}

fn general_position_sample<R: Rng>(rng: &mut R, count: usize, grid: i64) -> Vec<[i64; 2]> {
    'config: loop {
        let mut pts: Vec<[i64; 2]> = Vec::with_capacity(count);
        while pts.len() < count {
            let p = [rng.gen_range(0..=grid), rng.gen_range(0..=grid)];
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        for i in 0..count {
            for j in i + 1..count {
                for k in j + 1..count {
                    if orient_i64(pts[i], pts[j], pts[k]) == 0 {
                        continue 'config;
                    }
                }
            }
        }
        return pts;
    }
}

/// Error type alias so callers can match the search's degenerate-retry
/// diagnostics against the geometry errors they wrap.
pub type SearchError = GeometryError;
