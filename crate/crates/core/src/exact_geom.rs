//! Exact rational planar geometry: orientation predicates, proper-crossing
//! tests, and the crossing counter/classifier for multipartite rectilinear
//! drawings.
//!
//! Everything here is exact. Coordinates are arbitrary-precision rationals;
//! predicates are decided by integer signs after clearing denominators, with
//! an `i64`/`i128` fast path whenever the scaled coordinates are small enough.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{format_ratio, parse_ratio, ExactScalar};

/// Sign of the cross product `(q − p) × (r − p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

/// A point of a rectilinear drawing. Exact; never rounded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point2 {
    pub x: ExactScalar,
    pub y: ExactScalar,
}

impl Point2 {
    pub fn new(x: ExactScalar, y: ExactScalar) -> Self {
        Self { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Self {
            x: ExactScalar::from_integer(x.into()),
            y: ExactScalar::from_integer(y.into()),
        }
    }

    /// Parses `("p/q", "p/q")` coordinate strings.
    pub fn from_strs(x: &str, y: &str) -> Result<Self, GeometryError> {
        let parse = |s: &str| {
            parse_ratio(s).map_err(|e| GeometryError::InvalidDrawing(format!("bad coordinate `{s}`: {e}")))
        };
        Ok(Self::new(parse(x)?, parse(y)?))
    }
}

/// Exact orientation of the ordered triple `(p, q, r)`.
pub fn orient(p: &Point2, q: &Point2, r: &Point2) -> Orientation {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// Multiset shape of the partite labels of four vertices.
///
/// Only `TwoTwo`, `TwoOneOne`, and `OneOneOneOne` can appear on an actual
/// crossing; the other shapes admit no pair of vertex-disjoint edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionType {
    Four,
    ThreeOne,
    TwoTwo,
    TwoOneOne,
    OneOneOneOne,
}

impl PartitionType {
    /// Number of vertex-disjoint edge pairs a quadruple of this shape spans
    /// in a complete multipartite graph.
    pub fn disjoint_edge_pairs(self) -> u8 {
        match self {
            PartitionType::Four | PartitionType::ThreeOne => 0,
            PartitionType::TwoTwo | PartitionType::TwoOneOne => 2,
            PartitionType::OneOneOneOne => 3,
        }
    }
}

/// Classifies four part labels by their multiset shape.
pub fn classify_quadruple(parts: [usize; 4]) -> PartitionType {
    let mut sorted = parts;
    sorted.sort_unstable();
    let mut run_lengths = [0usize; 4];
    let mut runs = 0;
    let mut i = 0;
    while i < 4 {
        let mut j = i + 1;
        while j < 4 && sorted[j] == sorted[i] {
            j += 1;
        }
        run_lengths[runs] = j - i;
        runs += 1;
        i = j;
    }
    run_lengths[..runs].sort_unstable_by(|a, b| b.cmp(a));
    match (runs, run_lengths[0]) {
        (1, _) => PartitionType::Four,
        (2, 3) => PartitionType::ThreeOne,
        (2, 2) => PartitionType::TwoTwo,
        (3, _) => PartitionType::TwoOneOne,
        _ => PartitionType::OneOneOneOne,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("degenerate configuration: collinear edges overlap in more than a point")]
    DegenerateConfiguration,
    #[error("vertex {vertex} lies strictly inside non-incident edge ({}, {})", edge.0, edge.1)]
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
}

/// True iff the open segments `a1a2` and `b1b2` intersect in exactly one
/// interior point. Shared endpoints and endpoint-on-segment touching are not
/// crossings; collinear segments overlapping in more than a point are an
/// error because no good drawing contains them.
pub fn segments_cross_properly(
    a1: &Point2,
    a2: &Point2,
    b1: &Point2,
    b2: &Point2,
) -> Result<bool, GeometryError> {
    assert!(a1 != a2 && b1 != b2, "segment endpoints must be distinct");
    let o1 = orient_sign_points(a1, a2, b1);
    let o2 = orient_sign_points(a1, a2, b2);
    if o1 == 0 && o2 == 0 {
        // All four endpoints collinear: compare 1-D extents along the line.
        let (lo1, hi1) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        let (lo2, hi2) = if b1 <= b2 { (b1, b2) } else { (b2, b1) };
        if lo1.max(lo2) < hi1.min(hi2) {
            return Err(GeometryError::DegenerateConfiguration);
        }
        return Ok(false);
    }
    if o1 * o2 >= 0 {
        return Ok(false);
    }
    let o3 = orient_sign_points(b1, b2, a1);
    let o4 = orient_sign_points(b1, b2, a2);
    Ok(o3 * o4 < 0)
}

fn orient_sign_points(p: &Point2, q: &Point2, r: &Point2) -> i8 {
    match orient(p, q, r) {
        Orientation::CounterClockwise => 1,
        Orientation::Clockwise => -1,
        Orientation::Collinear => 0,
    }
}

/// A straight-line drawing of a complete multipartite graph: partite-labeled
/// vertices with exact coordinates. The edge set is implicit: `{u, v}` is an
/// edge iff `u` and `v` lie in different parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectilinearDrawing {
    part_sizes: Vec<usize>,
    positions: Vec<Point2>,
    part_of: Vec<usize>,
}

impl RectilinearDrawing {
    /// Builds a drawing whose positions are listed part by part: all of part
    /// 0 first, then part 1, and so on.
    pub fn new(part_sizes: Vec<usize>, positions: Vec<Point2>) -> Result<Self, GeometryError> {
        let mut part_of = Vec::with_capacity(positions.len());
        for (i, &s) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(s));
        }
        Self::with_explicit_parts(part_sizes, positions, part_of)
    }

    /// Builds a drawing from per-vertex part labels in arbitrary order.
    pub fn with_explicit_parts(
        part_sizes: Vec<usize>,
        positions: Vec<Point2>,
        part_of: Vec<usize>,
    ) -> Result<Self, GeometryError> {
        if part_sizes.len() < 2 {
            return Err(GeometryError::InvalidDrawing(
                "a multipartite drawing needs at least 2 parts".into(),
            ));
        }
        if part_sizes.iter().any(|&s| s == 0) {
            return Err(GeometryError::InvalidDrawing("part sizes must be positive".into()));
        }
        let total: usize = part_sizes.iter().sum();
        if positions.len() != total {
            return Err(GeometryError::InvalidDrawing(format!(
                "expected {total} points for part sizes {part_sizes:?}, got {}",
                positions.len()
            )));
        }
        if part_of.len() != positions.len() {
            return Err(GeometryError::InvalidDrawing(
                "one part label per point is required".into(),
            ));
        }
        let mut counts = vec![0usize; part_sizes.len()];
        for &p in &part_of {
            if p >= part_sizes.len() {
                return Err(GeometryError::InvalidDrawing(format!("part index {p} out of range")));
            }
            counts[p] += 1;
        }
        if counts != part_sizes {
            return Err(GeometryError::InvalidDrawing(format!(
                "per-part point counts {counts:?} do not match part sizes {part_sizes:?}"
            )));
        }
        let mut seen = BTreeSet::new();
        for p in &positions {
            if !seen.insert(p.clone()) {
                return Err(GeometryError::InvalidDrawing(format!(
                    "duplicate point ({}, {})",
                    format_ratio(&p.x),
                    format_ratio(&p.y)
                )));
            }
        }
        Ok(Self {
            part_sizes,
            positions,
            part_of,
        })
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn positions(&self) -> &[Point2] {
        &self.positions
    }

    pub fn part_of(&self, vertex: usize) -> usize {
        self.part_of[vertex]
    }

    pub fn part_labels(&self) -> &[usize] {
        &self.part_of
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    /// All edges `{u, v}` with `u < v` in different parts.
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

    /// Serializes to the shared drawing JSON format, rationals as exact
    /// strings.
    pub fn to_json_string(&self) -> String {
        let file = DrawingFile {
            schema: 1,
            part_sizes: self.part_sizes.clone(),
            points: self
                .positions
                .iter()
                .zip(&self.part_of)
                .map(|(p, &part)| PointRecord {
                    x: format_ratio(&p.x),
                    y: format_ratio(&p.y),
                    part,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("drawing serialization cannot fail")
    }

    /// Parses the shared drawing JSON format.
    pub fn from_json_str(s: &str) -> Result<Self, GeometryError> {
        let file: DrawingFile =
            serde_json::from_str(s).map_err(|e| GeometryError::InvalidDrawing(e.to_string()))?;
        if file.schema != 1 {
            return Err(GeometryError::InvalidDrawing(format!(
                "unsupported drawing schema {}",
                file.schema
            )));
        }
        let mut positions = Vec::with_capacity(file.points.len());
        let mut part_of = Vec::with_capacity(file.points.len());
        for rec in &file.points {
            positions.push(Point2::from_strs(&rec.x, &rec.y)?);
            part_of.push(rec.part);
        }
        Self::with_explicit_parts(file.part_sizes, positions, part_of)
    }
}

fn default_schema() -> u32 {
    1
}

#[derive(Serialize, Deserialize)]
struct DrawingFile {
    #[serde(default = "default_schema")]
    schema: u32,
    part_sizes: Vec<usize>,
    points: Vec<PointRecord>,
}

#[derive(Serialize, Deserialize)]
struct PointRecord {
    x: String,
    y: String,
    part: usize,
}

/// Totals produced by the crossing counter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub total: u64,
    /// Crossings keyed by the partition shape of the four endpoints. Only
    /// shapes that can cross appear (always present, possibly zero).
    pub by_type: BTreeMap<PartitionType, u64>,
    /// The crossing edge pairs themselves, sorted; filled only by
    /// [`count_crossings_listing`].
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub crossing_list: Option<Vec<((usize, usize), (usize, usize))>>,
}

/// Counts all properly crossing pairs of vertex-disjoint edges, classified
/// by the partition shape of their four endpoints.
///
/// The drawing must satisfy the good-drawing preconditions: no vertex in the
/// interior of a non-incident edge ([`GeometryError::VertexOnEdge`]) and no
/// pair of collinear overlapping edges ([`GeometryError::DegenerateConfiguration`]).
/// Two edge pairs crossing at the same geometric point are counted as
/// separate pairwise crossings.
pub fn count_crossings(d: &RectilinearDrawing) -> Result<CrossingReport, GeometryError> {
    count_crossings_impl(d, false)
}

/// Like [`count_crossings`], additionally listing every crossing edge pair.
pub fn count_crossings_listing(d: &RectilinearDrawing) -> Result<CrossingReport, GeometryError> {
    count_crossings_impl(d, true)
}

fn count_crossings_impl(d: &RectilinearDrawing, want_list: bool) -> Result<CrossingReport, GeometryError> {
    let edges = d.edges();
    let big = scaled_integer_coords(&d.positions);
    match try_i64_coords(&big) {
        Some(small) => scan_grid(&small, &d.part_of, &edges, want_list),
        None => scan_grid(&big, &d.part_of, &edges, want_list),
    }
}

/// Rescales all positions by the least common denominator, yielding integer
/// coordinates. Scaling by a positive rational preserves every orientation
/// sign, hence every crossing.
pub(crate) fn scaled_integer_coords(positions: &[Point2]) -> Vec<[BigInt; 2]> {
    let mut l = BigInt::one();
    for p in positions {
        l = l.lcm(p.x.denom());
        l = l.lcm(p.y.denom());
    }
    positions
        .iter()
        .map(|p| {
            [
                p.x.numer() * (&l / p.x.denom()),
                p.y.numer() * (&l / p.y.denom()),
            ]
        })
        .collect()
}

/// Downcasts scaled coordinates to `i64` when they are small enough for the
/// `i128` predicate path (|coordinate| < 2^61).
pub(crate) fn try_i64_coords(coords: &[[BigInt; 2]]) -> Option<Vec<[i64; 2]>> {
    const LIMIT_BITS: u64 = 61;
    coords
        .iter()
        .map(|c| {
            if c[0].bits() <= LIMIT_BITS && c[1].bits() <= LIMIT_BITS {
                Some([c[0].to_i64()?, c[1].to_i64()?])
            } else {
                None
            }
        })
        .collect()
}

/// Integer coordinates the pair scan can run on.
pub(crate) trait GridPoint: Ord + Clone + Send + Sync {
    fn orient_sign(a: &Self, b: &Self, c: &Self) -> i8;
    /// Componentwise bounding-box membership, endpoints included.
    fn within_bbox(a: &Self, b: &Self, w: &Self) -> bool;
}

impl GridPoint for [i64; 2] {
    fn orient_sign(a: &Self, b: &Self, c: &Self) -> i8 {
        let det = (b[0] - a[0]) as i128 * (c[1] - a[1]) as i128
            - (b[1] - a[1]) as i128 * (c[0] - a[0]) as i128;
        det.signum() as i8
    }

    fn within_bbox(a: &Self, b: &Self, w: &Self) -> bool {
        a[0].min(b[0]) <= w[0] && w[0] <= a[0].max(b[0]) && a[1].min(b[1]) <= w[1] && w[1] <= a[1].max(b[1])
    }
}

impl GridPoint for [BigInt; 2] {
    fn orient_sign(a: &Self, b: &Self, c: &Self) -> i8 {
        let det = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
        if det.is_zero() {
            0
        } else if det.is_positive() {
            1
        } else {
            -1
        }
    }

    fn within_bbox(a: &Self, b: &Self, w: &Self) -> bool {
        let (xlo, xhi) = if a[0] <= b[0] { (&a[0], &b[0]) } else { (&b[0], &a[0]) };
        let (ylo, yhi) = if a[1] <= b[1] { (&a[1], &b[1]) } else { (&b[1], &a[1]) };
        xlo <= &w[0] && &w[0] <= xhi && ylo <= &w[1] && &w[1] <= yhi
    }
}

#[derive(Clone, Default)]
struct ScanTotals {
    total: u64,
    by: [u64; 3],
    list: Vec<((usize, usize), (usize, usize))>,
}

impl ScanTotals {
    fn merge(mut self, other: ScanTotals) -> ScanTotals {
        self.total += other.total;
        for i in 0..3 {
            self.by[i] += other.by[i];
        }
        self.list.extend(other.list);
        self
    }
}

const PARALLEL_PAIR_THRESHOLD: usize = 20_000;

/// The all-pairs crossing scan, reduced to a [`CrossingReport`].
pub(crate) fn scan_grid<P: GridPoint>(
    pts: &[P],
    parts: &[usize],
    edges: &[(usize, usize)],
    want_list: bool,
) -> Result<CrossingReport, GeometryError> {
    let mut totals = run_scan(pts, parts, edges, want_list)?;
    let mut by_type = BTreeMap::new();
    by_type.insert(PartitionType::TwoTwo, totals.by[0]);
    by_type.insert(PartitionType::TwoOneOne, totals.by[1]);
    by_type.insert(PartitionType::OneOneOneOne, totals.by[2]);
    let crossing_list = if want_list {
        totals.list.sort_unstable();
        Some(totals.list)
    } else {
        None
    };
    Ok(CrossingReport {
        total: totals.total,
        by_type,
        crossing_list,
    })
}

/// Total crossing count only; skips report assembly for hot loops.
pub(crate) fn scan_total<P: GridPoint>(
    pts: &[P],
    parts: &[usize],
    edges: &[(usize, usize)],
) -> Result<u64, GeometryError> {
    Ok(run_scan(pts, parts, edges, false)?.total)
}

/// The all-pairs crossing scan on integer coordinates. Distinct positions
/// are a precondition (drawing constructors and the search module enforce
/// it). Deterministic regardless of parallel schedule: the per-pair error is
/// a unit value and the totals are order-independent sums.
fn run_scan<P: GridPoint>(
    pts: &[P],
    parts: &[usize],
    edges: &[(usize, usize)],
    want_list: bool,
) -> Result<ScanTotals, GeometryError> {
    // Good-drawing precondition: no vertex strictly inside a non-incident
    // edge. Sequential so the reported violation is deterministic.
    for &(u, v) in edges {
        for (w, pw) in pts.iter().enumerate() {
            if w == u || w == v {
                continue;
            }
            if P::orient_sign(&pts[u], &pts[v], pw) == 0 && P::within_bbox(&pts[u], &pts[v], pw) {
                return Err(GeometryError::VertexOnEdge { vertex: w, edge: (u, v) });
            }
        }
    }

    let body = |ei: usize| -> Result<ScanTotals, GeometryError> {
        let mut acc = ScanTotals::default();
        let (u, v) = edges[ei];
        let (pu, pv) = (&pts[u], &pts[v]);
        for &(w, x) in &edges[ei + 1..] {
            if w == u || w == v || x == u || x == v {
                continue;
            }
            let o1 = P::orient_sign(pu, pv, &pts[w]);
            let o2 = P::orient_sign(pu, pv, &pts[x]);
            if o1 == 0 && o2 == 0 {
                // Both segments on one line; overlap beyond a point is not a
                // good drawing.
                let (lo1, hi1) = if pu <= pv { (pu, pv) } else { (pv, pu) };
                let (lo2, hi2) = if pts[w] <= pts[x] {
                    (&pts[w], &pts[x])
                } else {
                    (&pts[x], &pts[w])
                };
                if lo1.max(lo2) < hi1.min(hi2) {
                    return Err(GeometryError::DegenerateConfiguration);
                }
                continue;
            }
            if o1 * o2 >= 0 {
                continue;
            }
            let o3 = P::orient_sign(&pts[w], &pts[x], pu);
            let o4 = P::orient_sign(&pts[w], &pts[x], pv);
            if o3 * o4 < 0 {
                acc.total += 1;
                match classify_quadruple([parts[u], parts[v], parts[w], parts[x]]) {
                    PartitionType::TwoTwo => acc.by[0] += 1,
                    PartitionType::TwoOneOne => acc.by[1] += 1,
                    PartitionType::OneOneOneOne => acc.by[2] += 1,
                    PartitionType::Four | PartitionType::ThreeOne => {
                        unreachable!("vertex-disjoint cross-part edges cannot span these shapes")
                    }
                }
                if want_list {
                    acc.list.push(((u, v), (w, x)));
                }
            }
        }
        Ok(acc)
    };

    let pair_budget = edges.len().saturating_mul(edges.len().saturating_sub(1)) / 2;
    if pair_budget >= PARALLEL_PAIR_THRESHOLD {
        (0..edges.len())
            .into_par_iter()
            .map(body)
            .try_reduce(ScanTotals::default, |a, b| Ok(a.merge(b)))
    } else {
        let mut acc = ScanTotals::default();
        for ei in 0..edges.len() {
            acc = acc.merge(body(ei)?);
        }
        Ok(acc)
    }
}
