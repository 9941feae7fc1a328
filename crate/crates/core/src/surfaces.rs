//! The two cusped surfaces with free rank-2 fundamental group, realized by
//! fixed integer matrix representations: words evaluate to isometries, the
//! translates of an axis enumerate the lifts of a closed geodesic, and
//! crossings of lifts locate its self-intersections.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geom::{
    crossing_angle, crossing_test, intersection_point, Chart, Geodesic, Isometry, IsometryClass,
    Relation,
};
use crate::words::{CyclicWord, Generator, Word, ALPHABET};

/// Entry-magnitude cap beyond which double precision has fewer than four
/// trustworthy digits left for the downstream geometry.
pub const CONDITIONING_LIMIT: f64 = 1e12;

/// Which cusped surface a representation presents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    ThreePuncturedSphere,
    OncePuncturedTorus,
}

impl SurfaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::ThreePuncturedSphere => "sphere",
            SurfaceKind::OncePuncturedTorus => "torus",
        }
    }
}

/// A discrete, faithful representation of the free group on x and y.
#[derive(Debug, Clone)]
pub struct SurfaceRep {
    pub kind: SurfaceKind,
    pub gen_x: Isometry,
    pub gen_y: Isometry,
}

impl SurfaceRep {
    /// The three-punctured sphere: x, y and xy are all parabolic (the three
    /// cusp loops).
    pub fn three_punctured_sphere() -> SurfaceRep {
        let gen_x = Isometry::new(1.0, 2.0, 0.0, 1.0).expect("integer matrix");
        let gen_y = Isometry::new(1.0, 0.0, -2.0, 1.0).expect("integer matrix");
        debug_assert!((gen_x.trace().abs() - 2.0).abs() < 1e-12);
        debug_assert!((gen_y.trace().abs() - 2.0).abs() < 1e-12);
        debug_assert!((gen_x.compose(&gen_y).trace().abs() - 2.0).abs() < 1e-12);
        SurfaceRep { kind: SurfaceKind::ThreePuncturedSphere, gen_x, gen_y }
    }

    /// The once-punctured torus: the commutator of the generators is
    /// parabolic (the single cusp loop).
    pub fn once_punctured_torus() -> SurfaceRep {
        let gen_x = Isometry::new(1.0, 1.0, 1.0, 2.0).expect("integer matrix");
        let gen_y = Isometry::new(1.0, -1.0, -1.0, 2.0).expect("integer matrix");
        let comm = gen_x
            .compose(&gen_y)
            .compose(&gen_x.inverse())
            .compose(&gen_y.inverse());
        debug_assert!((comm.trace().abs() - 2.0).abs() < 1e-9);
        SurfaceRep { kind: SurfaceKind::OncePuncturedTorus, gen_x, gen_y }
    }

    pub fn by_kind(kind: SurfaceKind) -> SurfaceRep {
        match kind {
            SurfaceKind::ThreePuncturedSphere => SurfaceRep::three_punctured_sphere(),
            SurfaceKind::OncePuncturedTorus => SurfaceRep::once_punctured_torus(),
        }
    }

    fn letter_matrix(&self, l: crate::words::Letter) -> Isometry {
        let base = match l.generator() {
            Generator::X => self.gen_x,
            Generator::Y => self.gen_y,
        };
        if l.sign() > 0 {
            base
        } else {
            base.inverse()
        }
    }

    /// The representation homomorphism: the product of generator matrices.
    pub fn word_to_isometry(&self, w: &Word) -> Result<Isometry> {
        let mut m = Isometry::IDENTITY;
        for &l in w.letters() {
            m = m.compose(&self.letter_matrix(l));
            if m.max_entry() > CONDITIONING_LIMIT {
                return Err(Error::Conditioning { limit: CONDITIONING_LIMIT });
            }
        }
        Ok(m)
    }

    /// Hyperbolic translation length of the conjugacy class, i.e. the length
    /// of the closed geodesic it carries.  Errors with `PeripheralWord` when
    /// the class is parabolic (a cusp loop carries no geodesic).
    pub fn geodesic_length(&self, w: &CyclicWord, eps: f64) -> Result<f64> {
        let m = self.word_to_isometry(&w.linear())?;
        match m.classify(eps) {
            IsometryClass::Hyperbolic => m.translation_length(),
            _ => Err(Error::PeripheralWord),
        }
    }

    /// Oriented axis of the class, repelling to attracting endpoint.
    pub fn base_axis(&self, w: &CyclicWord, eps: f64) -> Result<Geodesic> {
        let m = self.word_to_isometry(&w.linear())?;
        if m.classify(eps) != IsometryClass::Hyperbolic {
            return Err(Error::PeripheralWord);
        }
        let (p, q) = m.fixed_points()?;
        Ok(Geodesic { p, q })
    }

    /// Distinct lifts g.axis within coset radius, tagged against the base
    /// axis.  The base axis itself and repeats of the same line are dropped;
    /// the representative kept for each line is the shortest (then
    /// lexicographically first) coset word producing it.
    pub fn enumerate_lifts(&self, w: &CyclicWord, radius: usize, eps: f64) -> Result<Vec<Lift>> {
        let base = self.base_axis(w, eps)?;
        let mut dedup = LineTable::new(&base);
        let mut lifts: Vec<Lift> = Vec::new();
        // Breadth-first over reduced coset words (shortest representatives
        // reach each line first), carrying the matrix products along.
        let mut frontier: Vec<(Word, Isometry)> = vec![(Word::empty(), Isometry::IDENTITY)];
        for _ in 0..radius {
            let mut next = Vec::with_capacity(frontier.len() * 3);
            for (g, m) in &frontier {
                for l in ALPHABET {
                    if g.letters().last() == Some(&l.inverse()) {
                        continue;
                    }
                    let g2 = g.concat(&Word::reduced([l]));
                    let m2 = m.compose(&self.letter_matrix(l));
                    if m2.max_entry() > CONDITIONING_LIMIT {
                        return Err(Error::Conditioning { limit: CONDITIONING_LIMIT });
                    }
                    let line = base.mapped(&m2);
                    if !dedup.seen_before(&line, eps) {
                        let rel = match crossing_test(&line, &base, eps) {
                            Relation::SharedEndpoint => return Err(Error::SharedEndpoint),
                            rel => rel,
                        };
                        let angle = match rel {
                            Relation::Crossing => Some(crossing_angle(&base, &line, eps)?),
                            _ => None,
                        };
                        lifts.push(Lift { g: g2.clone(), line, rel_to_base: rel, angle });
                    }
                    next.push((g2, m2));
                }
            }
            frontier = next;
        }
        Ok(lifts)
    }

    /// Self-intersection data of the closed geodesic: one entry per crossing
    /// of the base axis by another lift, reduced modulo the deck translation
    /// along the base axis (the representative crossing has chart coordinate
    /// in [0, length)).
    pub fn self_intersection_angles(
        &self,
        w: &CyclicWord,
        radius: usize,
        eps: f64,
    ) -> Result<Vec<SelfIntersection>> {
        let base = self.base_axis(w, eps)?;
        let length = self.geodesic_length(w, eps)?;
        let deck = self.word_to_isometry(&w.linear())?;
        let chart = Chart::new(&base);
        let lifts = self.enumerate_lifts(w, radius, eps)?;

        let mut canon = LineTable::new(&base);
        let mut out: Vec<SelfIntersection> = Vec::new();
        for lift in lifts.iter().filter(|l| l.rel_to_base == Relation::Crossing) {
            let z = intersection_point(&lift.line, &base, eps)?;
            let t = chart.interior_coord(z);
            // Translate the crossing into the fundamental period.  Crossings
            // sitting exactly on the period boundary can land on either side
            // in floating point, so the deck-translates one step to each side
            // take part in the deduplication as aliases of the same orbit.
            let k = (t / length).floor() as i64;
            let canonical = deck_translate(&deck, &lift.line, -k);
            let aliases =
                [canonical, canonical.mapped(&deck), canonical.mapped(&deck.inverse())];
            if aliases.iter().any(|l| canon.contains(l, eps)) {
                continue;
            }
            for alias in &aliases {
                canon.insert(alias);
            }
            let position = t - k as f64 * length;
            let angle = lift.angle.expect("crossing lifts carry an angle");
            out.push(SelfIntersection { g: lift.g.clone(), position, angle });
        }
        out.sort_by(|a, b| a.position.total_cmp(&b.position));
        Ok(out)
    }
}

/// A lift of a closed geodesic: the image of the base axis under a coset
/// representative, tagged with its relation to the base axis.
#[derive(Debug, Clone)]
pub struct Lift {
    pub g: Word,
    pub line: Geodesic,
    pub rel_to_base: Relation,
    /// Crossing angle against the base axis, when crossing.
    pub angle: Option<f64>,
}

impl Serialize for Lift {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = 3 + usize::from(self.angle.is_some());
        let mut st = s.serialize_struct("Lift", n)?;
        st.serialize_field("g", &self.g.to_string())?;
        st.serialize_field("endpoints", &[self.line.p, self.line.q])?;
        st.serialize_field("relation", &self.rel_to_base)?;
        if let Some(angle) = self.angle {
            st.serialize_field("angle", &angle)?;
        }
        st.end()
    }
}

/// One self-intersection representative of a closed geodesic.
#[derive(Debug, Clone, Serialize)]
pub struct SelfIntersection {
    /// Coset word of the crossing lift (before reduction into the period).
    pub g: Word,
    /// Chart coordinate of the crossing along the base axis, in [0, length).
    pub position: f64,
    /// Angle between the outgoing branches.
    pub angle: f64,
}

/// Apply the k-th power of the deck translation to a line.
fn deck_translate(deck: &Isometry, line: &Geodesic, k: i64) -> Geodesic {
    let step = if k >= 0 { *deck } else { deck.inverse() };
    let mut out = *line;
    for _ in 0..k.unsigned_abs() {
        out = out.mapped(&step);
    }
    out
}

/// Deduplication of lines by their endpoints in a normalized chart.
///
/// Comparisons use the chordal (projective) metric, which has no blow-up near
/// the point at infinity, unlike affine coordinates.
struct LineTable {
    to_chart: Isometry,
    seen: Vec<([f64; 2], [f64; 2])>,
}

impl LineTable {
    fn new(base: &Geodesic) -> LineTable {
        let to_chart = base.normalizer();
        let mut table = LineTable { to_chart, seen: Vec::new() };
        // Seed with the base axis so translates of it are dropped.
        table.insert(base);
        table
    }

    fn normalize(&self, line: &Geodesic) -> ([f64; 2], [f64; 2]) {
        let [a, b, c, d] = self.to_chart.entries();
        let mut pts = [line.p, line.q].map(|p| {
            let (u, v) = p.homogeneous();
            let (nu, nv) = (a * u + b * v, c * u + d * v);
            let mut s = nu.hypot(nv).recip();
            // Fix the projective sign so the affine ordering key below is
            // stable across near-infinity representatives.
            if nv < 0.0 || (nv == 0.0 && nu < 0.0) {
                s = -s;
            }
            [nu * s, nv * s]
        });
        // Order the pair canonically so unoriented comparison is two tests.
        let key = |p: &[f64; 2]| if p[1] == 0.0 { f64::INFINITY } else { p[0] / p[1] };
        if key(&pts[0]) > key(&pts[1]) {
            pts.swap(0, 1);
        }
        (pts[0], pts[1])
    }

    fn contains(&self, line: &Geodesic, eps: f64) -> bool {
        let pair = self.normalize(line);
        let chordal = |p: &[f64; 2], q: &[f64; 2]| (p[0] * q[1] - q[0] * p[1]).abs();
        self.seen.iter().any(|(a, b)| {
            (chordal(a, &pair.0) <= eps && chordal(b, &pair.1) <= eps)
                || (chordal(a, &pair.1) <= eps && chordal(b, &pair.0) <= eps)
        })
    }

    fn insert(&mut self, line: &Geodesic) {
        let pair = self.normalize(line);
        self.seen.push(pair);
    }

    fn seen_before(&mut self, line: &Geodesic, eps: f64) -> bool {
        if self.contains(line, eps) {
            return true;
        }
        self.insert(line);
        false
    }
}
