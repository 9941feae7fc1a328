//! Numeric kernel for the upper half-plane model: boundary points, isometries,
//! geodesics, orthogonal projections, and the closed-form length/angle
//! formulas they must agree with.

pub mod boundary;
pub mod formulas;
pub mod geodesic;
pub mod isometry;

pub use boundary::BoundaryPoint;
pub use formulas::{angle_of_parallelism, projection_length_closed_form, ProjectionCase};
pub use geodesic::{
    bisectors, crossing_angle, crossing_test, distance, foot, intersection_point,
    projection_interval, Bisector, Chart, Geodesic, ProjectionInterval, Reflection, Relation,
};
pub use isometry::{Isometry, IsometryClass};

/// A point of the open upper half-plane (y > 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    pub x: f64,
    pub y: f64,
}

impl HPoint {
    /// The reference point i, used as the origin of arc-length charts.
    pub const I: HPoint = HPoint { x: 0.0, y: 1.0 };

    pub fn new(x: f64, y: f64) -> HPoint {
        debug_assert!(y > 0.0, "interior points need y > 0");
        HPoint { x, y }
    }

    /// Hyperbolic distance arccosh(1 + |z - w|^2 / (2 Im z Im w)).
    pub fn dist(self, other: HPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (1.0 + (dx * dx + dy * dy) / (2.0 * self.y * other.y)).acosh()
    }

    /// Coordinates in the Klein disk, where geodesics are straight chords.
    /// Half-plane -> Poincare disk via z -> (z - i)/(z + i), then w -> 2w/(1+|w|^2).
    pub fn to_klein(self) -> (f64, f64) {
        let (x, y) = (self.x, self.y);
        let den = x * x + (y + 1.0) * (y + 1.0);
        let wr = (x * x + y * y - 1.0) / den;
        let wi = -2.0 * x / den;
        let n = 1.0 + wr * wr + wi * wi;
        (2.0 * wr / n, 2.0 * wi / n)
    }
}
