//! Points on the circle at infinity of the upper half-plane.
//!
//! The boundary is R together with a single point at infinity.  The circular
//! order places infinity past every real, so interleaving tests reduce to
//! ordinary comparisons.

use serde::{Serialize, Serializer};

/// A point of the boundary circle of the hyperbolic plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl BoundaryPoint {
    pub fn is_infinite(self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    /// The finite coordinate, if any.
    pub fn finite(self) -> Option<f64> {
        match self {
            BoundaryPoint::Finite(x) => Some(x),
            BoundaryPoint::Infinity => None,
        }
    }

    /// Projective coordinates (u : v) with v = 0 exactly at infinity.
    pub fn homogeneous(self) -> (f64, f64) {
        match self {
            BoundaryPoint::Finite(x) => (x, 1.0),
            BoundaryPoint::Infinity => (1.0, 0.0),
        }
    }

    /// Build from projective coordinates.  The point is at infinity iff the
    /// second coordinate is exactly zero; everything else is finite.
    pub fn from_homogeneous(u: f64, v: f64) -> Self {
        if v == 0.0 {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::Finite(u / v)
        }
    }

    /// Equality under the tolerance policy: exact at infinity, absolute
    /// tolerance `eps` between finite coordinates.
    pub fn approx_eq(self, other: BoundaryPoint, eps: f64) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => (a - b).abs() <= eps,
            _ => false,
        }
    }

    /// Strict comparison in the linear order with infinity largest.
    pub fn lt(self, other: BoundaryPoint) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, _) => false,
            (_, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => a < b,
        }
    }
}

impl From<f64> for BoundaryPoint {
    fn from(x: f64) -> Self {
        debug_assert!(x.is_finite());
        BoundaryPoint::Finite(x)
    }
}

impl std::fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundaryPoint::Finite(x) => s.serialize_f64(*x),
            BoundaryPoint::Infinity => s.serialize_str("inf"),
        }
    }
}
