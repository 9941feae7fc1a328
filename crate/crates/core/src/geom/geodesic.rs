//! Oriented geodesic lines, crossing tests, orthogonal projections, angles,
//! distances, and bisecting reflections.
//!
//! Every geodesic is a vertical ray or a semicircle orthogonal to the real
//! axis, recorded by its ordered pair of ideal endpoints.  The arc-length
//! chart of a geodesic is pinned by taking the foot of the reference point i
//! as basepoint, so coordinates of feet on the same geodesic are comparable
//! no matter how they were produced.

use serde::Serialize;

use crate::error::{Error, Result};

use super::boundary::BoundaryPoint;
use super::isometry::Isometry;
use super::HPoint;

/// An oriented geodesic: orientation runs from `p` (repelling end when this
/// is an axis) to `q` (attracting end).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Geodesic {
    pub p: BoundaryPoint,
    pub q: BoundaryPoint,
}

/// Mutual position of two geodesics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Crossing,
    Disjoint,
    SharedEndpoint,
}

impl Geodesic {
    pub fn new(p: BoundaryPoint, q: BoundaryPoint, eps: f64) -> Result<Geodesic> {
        if p.approx_eq(q, eps) {
            return Err(Error::DegenerateGeodesic);
        }
        Ok(Geodesic { p, q })
    }

    /// Convenience constructor from finite coordinates.
    pub fn between(p: f64, q: f64) -> Geodesic {
        Geodesic { p: BoundaryPoint::Finite(p), q: BoundaryPoint::Finite(q) }
    }

    pub fn reversed(&self) -> Geodesic {
        Geodesic { p: self.q, q: self.p }
    }

    /// Same line regardless of orientation, under the endpoint tolerance.
    pub fn same_unoriented(&self, other: &Geodesic, eps: f64) -> bool {
        (self.p.approx_eq(other.p, eps) && self.q.approx_eq(other.q, eps))
            || (self.p.approx_eq(other.q, eps) && self.q.approx_eq(other.p, eps))
    }

    /// Image under an isometry (endpoints move, orientation is preserved).
    pub fn mapped(&self, g: &Isometry) -> Geodesic {
        Geodesic { p: g.apply(self.p), q: g.apply(self.q) }
    }

    /// Euclidean description: vertical line at x, or semicircle (center, radius).
    fn shape(&self) -> Shape {
        match (self.p, self.q) {
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(x))
            | (BoundaryPoint::Finite(x), BoundaryPoint::Infinity) => Shape::Vertical { x },
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => Shape::Arc {
                center: 0.5 * (a + b),
                radius: 0.5 * (b - a).abs(),
            },
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {
                unreachable!("degenerate geodesic with both endpoints at infinity")
            }
        }
    }

    /// An isometry sending this geodesic to (0, infinity) respecting
    /// orientation: p goes to 0 and q to infinity.
    pub fn normalizer(&self) -> Isometry {
        match (self.p, self.q) {
            (BoundaryPoint::Finite(p), BoundaryPoint::Infinity) => {
                Isometry::new(1.0, -p, 0.0, 1.0).expect("unit determinant")
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(q)) => {
                Isometry::new(0.0, -1.0, 1.0, -q).expect("unit determinant")
            }
            (BoundaryPoint::Finite(p), BoundaryPoint::Finite(q)) => {
                if p > q {
                    Isometry::new(1.0, -p, 1.0, -q).expect("p > q gives positive determinant")
                } else {
                    Isometry::new(1.0, -p, -1.0, q).expect("q > p gives positive determinant")
                }
            }
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {
                unreachable!("degenerate geodesic with both endpoints at infinity")
            }
        }
    }

    /// The point of the line closest to the reference point i (the chart
    /// basepoint), mainly useful for diagnostics and tests.
    pub fn chart_basepoint(&self) -> HPoint {
        let chart = Chart::new(self);
        chart.point_at(0.0)
    }
}

enum Shape {
    Vertical { x: f64 },
    Arc { center: f64, radius: f64 },
}

/// Arc-length chart of a geodesic.  Coordinates increase in the direction of
/// the orientation and vanish at the foot of the reference point i.
pub struct Chart {
    to_axis: Isometry,
    from_axis: Isometry,
    offset: f64,
}

impl Chart {
    pub fn new(g: &Geodesic) -> Chart {
        let to_axis = g.normalizer();
        let w = to_axis.apply_interior(HPoint::I);
        let offset = w.x.hypot(w.y).ln();
        Chart { from_axis: to_axis.inverse(), to_axis, offset }
    }

    /// Chart coordinate of the foot of a boundary point, or an error if the
    /// point is an endpoint of the chart's geodesic.
    pub fn foot_coord(&self, p: BoundaryPoint, eps: f64) -> Result<f64> {
        let t = self.to_axis.apply(p);
        match t {
            BoundaryPoint::Infinity => Err(Error::DegenerateFoot),
            BoundaryPoint::Finite(x) => {
                if x.abs() <= eps {
                    Err(Error::DegenerateFoot)
                } else {
                    Ok(x.abs().ln() - self.offset)
                }
            }
        }
    }

    /// Chart coordinate of the foot of an interior point.
    pub fn interior_coord(&self, z: HPoint) -> f64 {
        let w = self.to_axis.apply_interior(z);
        w.x.hypot(w.y).ln() - self.offset
    }

    /// The point of the geodesic at a given chart coordinate.
    pub fn point_at(&self, t: f64) -> HPoint {
        self.from_axis.apply_interior(HPoint::new(0.0, (t + self.offset).exp()))
    }
}

/// Combinatorial crossing test: the endpoint pairs strictly interleave on the
/// boundary circle.  Any coincidence of endpoints within `eps` is reported as
/// `SharedEndpoint`.
pub fn crossing_test(l: &Geodesic, m: &Geodesic, eps: f64) -> Relation {
    for a in [l.p, l.q] {
        for b in [m.p, m.q] {
            if a.approx_eq(b, eps) {
                return Relation::SharedEndpoint;
            }
        }
    }
    // Cut the circle just past infinity; (lo, hi) is then an honest interval.
    let (lo, hi) = if l.p.lt(l.q) { (l.p, l.q) } else { (l.q, l.p) };
    let inside =
        |b: BoundaryPoint| lo.lt(b) && b.lt(hi);
    if inside(m.p) != inside(m.q) {
        Relation::Crossing
    } else {
        Relation::Disjoint
    }
}

/// Intersection point of two crossing geodesics.
pub fn intersection_point(l: &Geodesic, m: &Geodesic, eps: f64) -> Result<HPoint> {
    if crossing_test(l, m, eps) != Relation::Crossing {
        return Err(Error::NotCrossing);
    }
    let point = match (l.shape(), m.shape()) {
        (Shape::Vertical { x }, Shape::Arc { center, radius })
        | (Shape::Arc { center, radius }, Shape::Vertical { x }) => {
            let y2 = radius * radius - (x - center) * (x - center);
            HPoint::new(x, y2.max(0.0).sqrt())
        }
        (Shape::Arc { center: c1, radius: r1 }, Shape::Arc { center: c2, radius: r2 }) => {
            let k1 = r1 * r1 - c1 * c1;
            let k2 = r2 * r2 - c2 * c2;
            let x = (k1 - k2) / (2.0 * (c2 - c1));
            let y2 = k1 + 2.0 * c1 * x - x * x;
            HPoint::new(x, y2.max(0.0).sqrt())
        }
        (Shape::Vertical { .. }, Shape::Vertical { .. }) => {
            // Two verticals share the endpoint at infinity; ruled out above.
            unreachable!("crossing verticals")
        }
    };
    Ok(point)
}

/// Euclidean forward tangent of `g` at a point `z` on it.
fn forward_tangent(g: &Geodesic, z: HPoint) -> (f64, f64) {
    match g.shape() {
        Shape::Vertical { .. } => {
            if g.q.is_infinite() {
                (0.0, 1.0)
            } else {
                (0.0, -1.0)
            }
        }
        Shape::Arc { center, .. } => {
            // -i (z - center) for left-to-right travel, negated otherwise.
            let t = (z.y, center - z.x);
            if g.p.lt(g.q) {
                t
            } else {
                (-t.0, -t.1)
            }
        }
    }
}

/// Angle in (0, pi) between the forward tangents of two crossing geodesics at
/// their intersection point.  Reversing one orientation replaces the angle by
/// its supplement.
pub fn crossing_angle(l: &Geodesic, m: &Geodesic, eps: f64) -> Result<f64> {
    let z = intersection_point(l, m, eps)?;
    let (ax, ay) = forward_tangent(l, z);
    let (bx, by) = forward_tangent(m, z);
    let dot = ax * bx + ay * by;
    let cross = ax * by - ay * bx;
    Ok(cross.atan2(dot).abs())
}

/// Distance between disjoint geodesics along their common perpendicular,
/// computed as arccosh of the inversive distance of the boundary circles.
pub fn distance(l: &Geodesic, m: &Geodesic, eps: f64) -> Result<f64> {
    if crossing_test(l, m, eps) != Relation::Disjoint {
        return Err(Error::NotDisjoint);
    }
    let inv = match (l.shape(), m.shape()) {
        (Shape::Vertical { x }, Shape::Arc { center, radius })
        | (Shape::Arc { center, radius }, Shape::Vertical { x }) => (x - center).abs() / radius,
        (Shape::Arc { center: c1, radius: r1 }, Shape::Arc { center: c2, radius: r2 }) => {
            let d2 = (c1 - c2) * (c1 - c2);
            ((d2 - r1 * r1 - r2 * r2) / (2.0 * r1 * r2)).abs()
        }
        (Shape::Vertical { .. }, Shape::Vertical { .. }) => unreachable!("verticals share infinity"),
    };
    Ok(inv.max(1.0).acosh())
}

/// Foot of the perpendicular from boundary point `p` to `m`, as an arc-length
/// coordinate in `m`'s chart.
pub fn foot(p: BoundaryPoint, m: &Geodesic, eps: f64) -> Result<f64> {
    Chart::new(m).foot_coord(p, eps)
}

/// The orthogonal projection of `l` onto `m`: the chart interval on `m`
/// between the feet of `l`'s two ideal endpoints.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProjectionInterval {
    pub host: Geodesic,
    pub lo: f64,
    pub hi: f64,
    /// True when traversing `l` from p to q moves the foot in `m`'s positive
    /// direction (ties, i.e. orthogonal crossings, count as true).
    pub orientation_agrees: bool,
}

impl ProjectionInterval {
    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}

pub fn projection_interval(l: &Geodesic, m: &Geodesic, eps: f64) -> Result<ProjectionInterval> {
    let chart = Chart::new(m);
    let from = chart.foot_coord(l.p, eps).map_err(|_| Error::SharedEndpoint)?;
    let to = chart.foot_coord(l.q, eps).map_err(|_| Error::SharedEndpoint)?;
    Ok(ProjectionInterval {
        host: *m,
        lo: from.min(to),
        hi: from.max(to),
        orientation_agrees: to >= from,
    })
}

/// An orientation-reversing involution (a z~ + b)/(c z~ - a) whose fixed-point
/// set is a geodesic.  On the boundary circle it acts as the Mobius matrix
/// [[a, b], [c, -a]].
#[derive(Debug, Clone, Copy)]
pub struct Reflection {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Reflection {
    /// Action on boundary points (conjugation is trivial there).
    pub fn apply_boundary(&self, p: BoundaryPoint) -> BoundaryPoint {
        let (u, v) = p.homogeneous();
        BoundaryPoint::from_homogeneous(self.a * u + self.b * v, self.c * u - self.a * v)
    }

    /// The fixed geodesic: c(x^2 + y^2) - 2 a x - b = 0.
    pub fn fixed_geodesic(&self) -> Option<Geodesic> {
        let disc = self.a * self.a + self.b * self.c;
        if disc <= 0.0 {
            return None;
        }
        let scale = self.a.abs().max(self.b.abs()).max(1.0);
        if self.c.abs() > 1e-14 * scale {
            let s = disc.sqrt();
            Some(Geodesic::between((self.a - s) / self.c, (self.a + s) / self.c))
        } else {
            Some(Geodesic {
                p: BoundaryPoint::Finite(-self.b / (2.0 * self.a)),
                q: BoundaryPoint::Infinity,
            })
        }
    }
}

/// A bisecting reflection together with its fixed geodesic.
#[derive(Debug, Clone, Copy)]
pub struct Bisector {
    pub line: Geodesic,
    pub reflection: Reflection,
}

/// The geodesics whose reflections interchange `l` and `m`: one for disjoint
/// pairs (the perpendicular bisector of the common perpendicular segment) and
/// two for crossing pairs (the angle bisectors).
///
/// Each endpoint pairing (p-p/q-q and p-q/q-p) imposes two linear conditions
/// on the reflection coefficients (a, b, c); the pairing yields a geodesic
/// exactly when a^2 + bc > 0.
pub fn bisectors(l: &Geodesic, m: &Geodesic, eps: f64) -> Result<Vec<Bisector>> {
    if crossing_test(l, m, eps) == Relation::SharedEndpoint {
        return Err(Error::SharedEndpoint);
    }
    // Swapping s and t: a(s + t) + b - c s t = 0, homogenized.
    let row = |s: BoundaryPoint, t: BoundaryPoint| -> [f64; 3] {
        let (u1, v1) = s.homogeneous();
        let (u2, v2) = t.homogeneous();
        [u1 * v2 + u2 * v1, v1 * v2, -u1 * u2]
    };
    let mut out = Vec::with_capacity(2);
    for (pair1, pair2) in [((l.p, m.p), (l.q, m.q)), ((l.p, m.q), (l.q, m.p))] {
        let r1 = row(pair1.0, pair1.1);
        let r2 = row(pair2.0, pair2.1);
        let refl = Reflection {
            a: r1[1] * r2[2] - r1[2] * r2[1],
            b: r1[2] * r2[0] - r1[0] * r2[2],
            c: r1[0] * r2[1] - r1[1] * r2[0],
        };
        if let Some(line) = refl.fixed_geodesic() {
            out.push(Bisector { line, reflection: refl });
        }
    }
    debug_assert!(!out.is_empty(), "every non-degenerate pair has a bisector");
    Ok(out)
}
