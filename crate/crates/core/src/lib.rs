//! Computing with closed geodesics on the cusped hyperbolic surfaces whose
//! fundamental group is free of rank 2: the three-punctured sphere and the
//! once-punctured torus.
//!
//! The crate has four layers:
//!
//! * [`geom`] — an exact-formula kernel for the upper half-plane: boundary
//!   points, unimodular isometries, geodesics, orthogonal projections,
//!   crossing angles, distances and bisecting reflections;
//! * [`words`] — reduced and cyclically reduced words in the free group on
//!   x and y, elementary automorphisms, and the subword patterns that
//!   constrain gap words;
//! * [`tree`] — axes in the Cayley tree and exact overlaps between an axis
//!   and its translates, with the integer bounds those overlaps satisfy;
//! * [`surfaces`] and [`verify`] — fixed integer representations of the two
//!   surfaces, lift enumeration, self-intersection extraction, and batch
//!   verification of the projection-length, angle, bisector and polygon
//!   bounds, the sharpness families, and the angle-floor comparison.
//!
//! Every bound check is reported as a [`verify::BoundReport`] with a strict
//! `lhs < rhs` reading, so a run either produces all-positive margins or
//! pinpoints the failing instance.

pub mod error;
pub mod geom;
pub mod surfaces;
pub mod tree;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use geom::{
    angle_of_parallelism, bisectors, crossing_angle, crossing_test, distance, foot,
    intersection_point, projection_interval, projection_length_closed_form, Bisector,
    BoundaryPoint, Chart, Geodesic, HPoint, Isometry, IsometryClass, ProjectionCase,
    ProjectionInterval, Reflection, Relation,
};
pub use surfaces::{Lift, SelfIntersection, SurfaceKind, SurfaceRep};
pub use tree::{
    axis_overlap, axis_path, axis_vertices, check_lemma_bounds, common_axis_segment,
    sweep_lemma_bounds, AxisOverlap, AxisPath, LemmaReport, OverlapBound,
};
pub use verify::{
    check_angle_corollary, check_bisector_lemmas, check_theorem1, check_theorem2,
    polygons::check_polygon_corollary, scans, BoundReport, Claim,
};
pub use words::{CyclicWord, Generator, Letter, Word};

/// Default tolerance for boundary-point equality and trace classification.
pub const DEFAULT_EPS: f64 = 1e-9;
