//! Generators for the standard drawings: the alternating 3-line drawing, the
//! 2-line Zarankiewicz drawing, and the convex max-crossing drawing, plus a
//! deterministic SVG renderer.

use crate::exact_geom::{
    count_crossings_listing, orient, Orientation, Point2, RectilinearDrawing,
};
use crate::scalar::{ratio_to_f64, ExactScalar};

/// Direction vectors of the three lines of an alternating 3-line drawing, as
/// `(x numerator, y numerator, denominator)`.
///
/// The classical construction uses lines at exactly 120°, which has no
/// rational direction vectors. These are rational points on the unit circle
/// whose large-ray pairs span 106.3°–126.9°, preserving the three-ray
/// combinatorial structure the crossing count depends on; the exact counter
/// verifies the resulting count profile by profile.
pub const LINE_DIRECTIONS: [(i64, i64, i64); 3] = [(1, 0, 1), (-3, 4, 5), (-3, -4, 5)];

/// How one part of size `n` splits across a line's two rays: `⌈n/2⌉` points
/// close to the center on the large ray, `⌊n/2⌋` points far away on the
/// opposite small ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayAssignment {
    pub large: usize,
    pub small: usize,
}

impl RayAssignment {
    pub fn for_size(n: usize) -> Self {
        Self {
            large: n.div_ceil(2),
            small: n / 2,
        }
    }
}

/// The alternating 3-line drawing of `K_{n1,n2,n3}`.
///
/// Part `i` lives on line `i` (see [`LINE_DIRECTIONS`]): `⌈ni/2⌉` points on
/// the large ray at distances `k/(⌈ni/2⌉+1)` for `k = 1..⌈ni/2⌉`, then
/// `⌊ni/2⌋` points on the opposite small ray at distances `3, 4, ...`.
/// Vertices are ordered part by part, large-ray points (increasing distance)
/// before small-ray points (increasing distance).
pub fn alternating_3line(n1: usize, n2: usize, n3: usize) -> RectilinearDrawing {
    assert!(n1 >= 1 && n2 >= 1 && n3 >= 1, "part sizes must be positive");
    let mut positions = Vec::with_capacity(n1 + n2 + n3);
    for (i, &n) in [n1, n2, n3].iter().enumerate() {
        let rays = RayAssignment::for_size(n);
        let (dx, dy, den) = LINE_DIRECTIONS[i];
        let a = rays.large as i64;
        for k in 1..=a {
            positions.push(Point2::new(
                ExactScalar::new((k * dx).into(), ((a + 1) * den).into()),
                ExactScalar::new((k * dy).into(), ((a + 1) * den).into()),
            ));
        }
        for s in 0..rays.small as i64 {
            let dist = s + 3;
            positions.push(Point2::new(
                ExactScalar::new((-dist * dx).into(), den.into()),
                ExactScalar::new((-dist * dy).into(), den.into()),
            ));
        }
    }
    RectilinearDrawing::new(vec![n1, n2, n3], positions)
        .expect("alternating 3-line points are pairwise distinct")
}

/// The 2-line drawing of `K_{n,m}` realizing `Z(n,m)` crossings: one part on
/// the x-axis at `±1, ±2, ...`, the other on the y-axis likewise, split
/// about evenly on both sides of the origin.
pub fn two_line(n: usize, m: usize) -> RectilinearDrawing {
    assert!(n >= 1 && m >= 1, "part sizes must be positive");
    let mut positions = Vec::with_capacity(n + m);
    let rays = RayAssignment::for_size(n);
    for k in 1..=rays.large as i64 {
        positions.push(Point2::from_integers(k, 0));
    }
    for k in 1..=rays.small as i64 {
        positions.push(Point2::from_integers(-k, 0));
    }
    let rays = RayAssignment::for_size(m);
    for k in 1..=rays.large as i64 {
        positions.push(Point2::from_integers(0, k));
    }
    for k in 1..=rays.small as i64 {
        positions.push(Point2::from_integers(0, -k));
    }
    RectilinearDrawing::new(vec![n, m], positions).expect("2-line points are pairwise distinct")
}

/// A max-crossing drawing of the balanced complete r-partite graph: `r·n`
/// rational points in strictly convex position approximating the regular
/// `r·n`-gon, with each part occupying a consecutive block. Realizes
/// `CR-max(r,n)` crossings.
pub fn convex_max(r: usize, n: usize) -> RectilinearDrawing {
    assert!(r >= 2 && n >= 1, "need r >= 2 and n >= 1");
    let total = r * n;
    assert!(total >= 3, "convex position needs at least 3 points");

    // Tangent half-angle parametrization: rational t gives the exact rational
    // circle point ((1-t^2, 2t) / (1+t^2)). Increasing t walks the circle
    // counterclockwise from near (-1, 0).
    let mut den: i64 = 64;
    let numerators = loop {
        let nums: Vec<i64> = (0..total)
            .map(|k| {
                let theta = -std::f64::consts::PI * (1.0 - (2 * k + 1) as f64 / total as f64);
                ((theta / 2.0).tan() * den as f64).round() as i64
            })
            .collect();
        if nums.windows(2).all(|w| w[0] < w[1]) {
            break nums;
        }
        den = den.checked_mul(2).expect("tangent rationalization overflow");
    };

    let positions: Vec<Point2> = numerators
        .iter()
        .map(|&p| {
            let q = den;
            // (q^2 - p^2, 2pq) / (q^2 + p^2)
            let norm = p as i128 * p as i128 + q as i128 * q as i128;
            Point2::new(
                ExactScalar::new((q as i128 * q as i128 - p as i128 * p as i128).into(), norm.into()),
                ExactScalar::new((2 * p as i128 * q as i128).into(), norm.into()),
            )
        })
        .collect();

    // Strict convex position check (orientation scan over the cyclic order).
    for i in 0..total {
        let a = &positions[i];
        let b = &positions[(i + 1) % total];
        let c = &positions[(i + 2) % total];
        assert_eq!(
            orient(a, b, c),
            Orientation::CounterClockwise,
            "convex_max produced a non-convex triple"
        );
    }

    RectilinearDrawing::new(vec![n; r], positions).expect("circle points are pairwise distinct")
}

/// Rendering options for [`export_svg`].
#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Canvas width and height in pixels.
    pub size: u32,
    /// Draw a marker at every proper crossing.
    pub mark_crossings: bool,
    pub node_radius: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            size: 640,
            mark_crossings: true,
            node_radius: 4.0,
        }
    }
}

const PART_COLORS: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
];

/// Deterministic SVG rendering of a drawing: straight edges, per-part node
/// colors, optional crossing markers. Coordinates are rendered at fixed
/// decimal precision for display only and never fed back into computation.
pub fn export_svg(d: &RectilinearDrawing, options: &SvgOptions) -> String {
    let pts: Vec<(f64, f64)> = d
        .positions()
        .iter()
        .map(|p| (ratio_to_f64(&p.x), ratio_to_f64(&p.y)))
        .collect();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let span = (xmax - xmin).max(ymax - ymin).max(1e-9);
    let margin = 0.08 * span;
    let scale = options.size as f64 / (span + 2.0 * margin);
    let size = options.size as f64;
    // SVG y grows downward; flip.
    let project = |x: f64, y: f64| {
        (
            (x - xmin + margin + (span - (xmax - xmin)) / 2.0) * scale,
            size - (y - ymin + margin + (span - (ymax - ymin)) / 2.0) * scale,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n",
        options.size
    ));
    out.push_str("  <g class=\"edges\" stroke=\"#555555\" stroke-width=\"1\" stroke-opacity=\"0.6\">\n");
    for (u, v) in d.edges() {
        let (x1, y1) = project(pts[u].0, pts[u].1);
        let (x2, y2) = project(pts[v].0, pts[v].1);
        out.push_str(&format!(
            "    <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>\n"
        ));
    }
    out.push_str("  </g>\n");

    if options.mark_crossings {
        // Markers are display sugar; a degenerate drawing still renders,
        // just without them.
        if let Ok(report) = count_crossings_listing(d) {
            out.push_str("  <g class=\"crossings\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\">\n");
            for ((u, v), (w, x)) in report.crossing_list.unwrap_or_default() {
                if let Some((ix, iy)) = segment_intersection_f64(pts[u], pts[v], pts[w], pts[x]) {
                    let (cx, cy) = project(ix, iy);
                    out.push_str(&format!(
                        "    <circle class=\"crossing\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"2.5\"/>\n"
                    ));
                }
            }
            out.push_str("  </g>\n");
        }
    }

    out.push_str("  <g class=\"nodes\" stroke=\"#222222\" stroke-width=\"0.8\">\n");
    for (v, &(x, y)) in pts.iter().enumerate() {
        let (cx, cy) = project(x, y);
        let color = PART_COLORS[d.part_of(v) % PART_COLORS.len()];
        out.push_str(&format!(
            "    <circle class=\"node\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{:.1}\" fill=\"{color}\"/>\n",
            options.node_radius
        ));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// Display-precision intersection of two properly crossing segments.
fn segment_intersection_f64(a1: (f64, f64), a2: (f64, f64), b1: (f64, f64), b2: (f64, f64)) -> Option<(f64, f64)> {
    let d1 = (a2.0 - a1.0, a2.1 - a1.1);
    let d2 = (b2.0 - b1.0, b2.1 - b1.1);
    let det = d1.0 * d2.1 - d1.1 * d2.0;
    if det == 0.0 {
        return None;
    }
    let s = ((b1.0 - a1.0) * d2.1 - (b1.1 - a1.1) * d2.0) / det;
    Some((a1.0 + s * d1.0, a1.1 + s * d1.1))
}
