//! Orientation-preserving isometries of the upper half-plane as unimodular
//! 2x2 real matrices acting by Mobius maps, with `M` and `-M` identified.

use crate::error::{Error, Result};
use crate::DEFAULT_EPS;

use super::boundary::BoundaryPoint;
use super::HPoint;

/// Determinant drift beyond which a composition is renormalized.
const DET_DRIFT: f64 = 1e-12;

/// A unimodular matrix [[a, b], [c, d]], kept in the canonical projective
/// representative with a >= 0 (b >= 0 when a = 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

/// Conjugacy type of an isometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsometryClass {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl IsometryClass {
    pub fn name(self) -> &'static str {
        match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Elliptic => "elliptic",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Hyperbolic => "hyperbolic",
        }
    }
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    /// Build from matrix entries.  Rejects non-positive determinants and
    /// rescales so the determinant is exactly 1.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Isometry> {
        let det = a * d - b * c;
        if !(det.is_finite() && det > 0.0) {
            return Err(Error::InvalidMatrix { det });
        }
        let mut m = Isometry { a, b, c, d };
        m.renormalize();
        Ok(m)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Largest entry magnitude, used for conditioning checks.
    pub fn max_entry(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs()).max(self.d.abs())
    }

    fn renormalize(&mut self) {
        let det = self.det();
        if (det - 1.0).abs() > DET_DRIFT {
            let s = 1.0 / det.sqrt();
            self.a *= s;
            self.b *= s;
            self.c *= s;
            self.d *= s;
        }
        if self.a < 0.0 || (self.a == 0.0 && self.b < 0.0) {
            self.a = -self.a;
            self.b = -self.b;
            self.c = -self.c;
            self.d = -self.d;
        }
    }

    pub fn compose(&self, rhs: &Isometry) -> Isometry {
        let mut m = Isometry {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        };
        m.renormalize();
        m
    }

    pub fn inverse(&self) -> Isometry {
        let mut m = Isometry { a: self.d, b: -self.b, c: -self.c, d: self.a };
        m.renormalize();
        m
    }

    /// Projective equality: same Mobius map up to sign and tolerance.
    pub fn approx_eq(&self, other: &Isometry, eps: f64) -> bool {
        // Canonical representatives make the sign deterministic except when
        // a is within eps of 0, so compare both signs.
        let same = |s: f64| {
            (self.a - s * other.a).abs() <= eps
                && (self.b - s * other.b).abs() <= eps
                && (self.c - s * other.c).abs() <= eps
                && (self.d - s * other.d).abs() <= eps
        };
        same(1.0) || same(-1.0)
    }

    /// Mobius action on the boundary circle, computed projectively.
    pub fn apply(&self, p: BoundaryPoint) -> BoundaryPoint {
        let (u, v) = p.homogeneous();
        BoundaryPoint::from_homogeneous(self.a * u + self.b * v, self.c * u + self.d * v)
    }

    /// Mobius action on an interior point.
    pub fn apply_interior(&self, z: HPoint) -> HPoint {
        // (az + b)/(cz + d) with z = x + iy.
        let nr = self.a * z.x + self.b;
        let ni = self.a * z.y;
        let dr = self.c * z.x + self.d;
        let di = self.c * z.y;
        let den = dr * dr + di * di;
        HPoint { x: (nr * dr + ni * di) / den, y: (ni * dr - nr * di) / den }
    }

    /// Conjugacy classification with trace tolerance `eps_tr`.
    pub fn classify(&self, eps_tr: f64) -> IsometryClass {
        if self.b.abs() <= eps_tr && self.c.abs() <= eps_tr && (self.a - self.d).abs() <= eps_tr {
            return IsometryClass::Identity;
        }
        let t = self.trace().abs();
        if (t - 2.0).abs() <= eps_tr {
            IsometryClass::Parabolic
        } else if t < 2.0 {
            IsometryClass::Elliptic
        } else {
            IsometryClass::Hyperbolic
        }
    }

    /// Translation length 2 arccosh(|tr|/2) of a hyperbolic isometry.
    pub fn translation_length(&self) -> Result<f64> {
        let class = self.classify(DEFAULT_EPS);
        if class != IsometryClass::Hyperbolic {
            return Err(Error::NotHyperbolic { class: class.name() });
        }
        Ok(2.0 * (self.trace().abs() / 2.0).acosh())
    }

    /// Fixed points of a hyperbolic isometry, repelling then attracting.
    ///
    /// Both are computed from the dominant eigenvalue, which avoids the
    /// cancellation that the subdominant one would introduce.
    pub fn fixed_points(&self) -> Result<(BoundaryPoint, BoundaryPoint)> {
        let class = self.classify(DEFAULT_EPS);
        if class != IsometryClass::Hyperbolic {
            return Err(Error::NotHyperbolic { class: class.name() });
        }
        let t = self.trace();
        let lambda = (t + (t * t - 4.0).sqrt().copysign(t)) / 2.0;
        if self.c != 0.0 {
            let attracting = BoundaryPoint::Finite((lambda - self.d) / self.c);
            let repelling = BoundaryPoint::Finite((self.a - lambda) / self.c);
            Ok((repelling, attracting))
        } else {
            // Upper triangular: fixes infinity and b/(d - a).
            let other = BoundaryPoint::Finite(self.b / (self.d - self.a));
            if self.a.abs() > self.d.abs() {
                Ok((other, BoundaryPoint::Infinity))
            } else {
                Ok((BoundaryPoint::Infinity, other))
            }
        }
    }
}

impl std::fmt::Display for Isometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
