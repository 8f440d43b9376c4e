//! Exact constructions, crossing counts, and bound arithmetic for drawings of
//! complete multipartite graphs.
//!
//! The crate is organized around a handful of independent pieces:
//!
//! - [`exact_geom`]: rational-arithmetic planar predicates and the crossing
//!   counter/classifier for straight-line drawings,
//! - [`formulas`]: closed-form crossing bounds (`Z`, `H`, `A`, `A_3L`,
//!   `CR-max`, `zeta`, ...) evaluated exactly,
//! - [`constructions`]: generators for the standard low-crossing and
//!   max-crossing drawings, plus SVG export,
//! - [`spherical`]: random geodesic drawings on the unit sphere and the
//!   Monte Carlo / exact expected-crossing machinery,
//! - [`bounds_search`]: lower-bound arithmetic and a stochastic rectilinear
//!   crossing minimizer for small instances.
//!
//! All planar computation is exact (arbitrary-precision rationals); only the
//! spherical module uses floating point, where crossings are open conditions
//! and degenerate samples have probability zero.

pub mod bounds_search;
pub mod constructions;
pub mod exact_geom;
pub mod formulas;
pub mod scalar;
pub mod spherical;

pub use exact_geom::{
    classify_quadruple, count_crossings, count_crossings_listing, orient, segments_cross_properly,
    CrossingReport, GeometryError, Orientation, PartitionType, Point2, RectilinearDrawing,
};
pub use scalar::{format_ratio, parse_ratio, ratio_to_f64, ExactScalar};
