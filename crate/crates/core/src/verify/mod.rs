//! Batch verification of the projection-length, angle, bisector and polygon
//! bounds on enumerated lifts, plus the scan-style studies in [`scans`].
//!
//! Every check emits [`BoundReport`] rows with a strict `lhs < rhs` reading:
//! `holds` is `margin > 0` with no tolerance slack, except where a bound is
//! genuinely non-strict, in which case the stated tolerance is folded into
//! `rhs` once, up front.

pub mod polygons;
pub mod scans;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{angle_of_parallelism, bisectors, projection_interval, Relation};
use crate::surfaces::SurfaceRep;
use crate::words::CyclicWord;

/// Non-strict bounds get this much slack folded into `rhs`.
pub const NONSTRICT_TOL: f64 = 1e-9;

/// Margins this close to zero are suspicious for a strict bound and are
/// annotated in the instance description rather than failed.
pub const SUSPICIOUS_MARGIN: f64 = 1e-12;

/// Which inequality a report row asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Projection of one lift onto another above the same geodesic < length.
    ProjectionVsLength,
    /// Disjoint, oppositely oriented lifts: projection < length/2.
    HalfBoundDisjoint,
    /// Crossing lifts with oppositely oriented projection: projection < length/2.
    HalfBoundCrossing,
    /// Projection of the bisector of a disjoint lift pair <= length.
    BisectorDisjoint,
    /// Sum of both bisector projections for a crossing pair <= 2 length.
    BisectorCrossingSum,
    /// Self-intersection angle > parallelism angle of length/2.
    AngleLower,
    /// Self-intersection angle < pi - parallelism angle of length/4.
    AngleUpper,
    /// Polygon side < (n - 2) * length.
    PolygonSide,
    /// Polygon side <= projection sum over the other sides (proof route).
    PolygonProjectionSum,
    /// Projection between lifts of two distinct classes < sum of lengths.
    TwoClassProjection,
    /// Bisector projection for crossing lifts of two classes < sum of lengths.
    TwoClassBisector,
    /// Translation length of a product < sum of translation lengths.
    CutAndPaste,
    /// Tree overlap, disagreeing directions: length < (L - 1)/2.
    TreeOverlapOpposed,
    /// Tree overlap, distinct axes: length < L - 1.
    TreeOverlapDistinct,
    /// Sharpness family ratio exceeds its floor.
    SharpnessFloor,
    /// Sharpness family ratio stays below 1.
    SharpnessCeiling,
    /// Crossover of the two angle floors lies where expected.
    GilmanCrossover,
    /// Ratio of the two angle floors at large length.
    GilmanRatio,
    /// Parallelism-ratio function exceeds 1.
    GapRatioAboveOne,
    /// Parallelism-ratio function increases along the grid.
    GapRatioIncreasing,
    /// Parallelism-ratio function exceeds 2 at the reference length.
    GapRatioThreshold,
}

impl Claim {
    pub fn name(self) -> &'static str {
        match self {
            Claim::ProjectionVsLength => "projection_vs_length",
            Claim::HalfBoundDisjoint => "half_bound_disjoint",
            Claim::HalfBoundCrossing => "half_bound_crossing",
            Claim::BisectorDisjoint => "bisector_disjoint",
            Claim::BisectorCrossingSum => "bisector_crossing_sum",
            Claim::AngleLower => "angle_lower",
            Claim::AngleUpper => "angle_upper",
            Claim::PolygonSide => "polygon_side",
            Claim::PolygonProjectionSum => "polygon_projection_sum",
            Claim::TwoClassProjection => "two_class_projection",
            Claim::TwoClassBisector => "two_class_bisector",
            Claim::CutAndPaste => "cut_and_paste",
            Claim::TreeOverlapOpposed => "tree_overlap_opposed",
            Claim::TreeOverlapDistinct => "tree_overlap_distinct",
            Claim::SharpnessFloor => "sharpness_floor",
            Claim::SharpnessCeiling => "sharpness_ceiling",
            Claim::GilmanCrossover => "gilman_crossover",
            Claim::GilmanRatio => "gilman_ratio",
            Claim::GapRatioAboveOne => "gap_ratio_above_one",
            Claim::GapRatioIncreasing => "gap_ratio_increasing",
            Claim::GapRatioThreshold => "gap_ratio_threshold",
        }
    }
}

/// One verified inequality instance: `holds` iff `margin = rhs - lhs > 0`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub claim: Claim,
    pub instance: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
}

impl BoundReport {
    pub fn strict(claim: Claim, instance: String, lhs: f64, rhs: f64) -> BoundReport {
        let margin = rhs - lhs;
        let mut instance = instance;
        if margin.abs() <= SUSPICIOUS_MARGIN {
            instance.push_str(" (margin within 1e-12 of equality)");
        }
        BoundReport { claim, instance, lhs, rhs, margin, holds: margin > 0.0 }
    }

    /// Non-strict bound, checked as strict against `rhs + NONSTRICT_TOL`.
    pub fn nonstrict(claim: Claim, instance: String, lhs: f64, rhs: f64) -> BoundReport {
        BoundReport::strict(claim, instance, lhs, rhs + NONSTRICT_TOL)
    }
}

/// Minimum margin across a batch, handy for summaries.
pub fn min_margin(reports: &[BoundReport]) -> Option<f64> {
    reports.iter().map(|r| r.margin).min_by(f64::total_cmp)
}

/// Projection of every enumerated lift onto the base axis against the
/// geodesic length, with the refined half-length buckets for oppositely
/// oriented configurations.
pub fn check_theorem1(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    radius: usize,
    eps: f64,
) -> Result<Vec<BoundReport>> {
    let base = rep.base_axis(gamma, eps)?;
    let length = rep.geodesic_length(gamma, eps)?;
    let lifts = rep.enumerate_lifts(gamma, radius, eps)?;
    let mut out = Vec::with_capacity(lifts.len());
    for lift in &lifts {
        let proj = projection_interval(&lift.line, &base, eps)?;
        let tag = match lift.rel_to_base {
            Relation::Crossing => "crossing",
            Relation::Disjoint => "disjoint",
            Relation::SharedEndpoint => unreachable!("filtered during enumeration"),
        };
        let instance = format!("{} gamma={gamma} g={} rel={tag}", rep.kind.name(), lift.g);
        out.push(BoundReport::strict(
            Claim::ProjectionVsLength,
            instance.clone(),
            proj.length(),
            length,
        ));
        if !proj.orientation_agrees {
            let claim = match lift.rel_to_base {
                Relation::Disjoint => Claim::HalfBoundDisjoint,
                Relation::Crossing => Claim::HalfBoundCrossing,
                Relation::SharedEndpoint => unreachable!(),
            };
            out.push(BoundReport::strict(claim, instance, proj.length(), length / 2.0));
        }
    }
    Ok(out)
}

/// Bisector bounds: for disjoint lift pairs the projection of the bisector
/// onto the base axis is at most the length; for crossing pairs the two
/// bisector projections sum to at most twice the length.
pub fn check_bisector_lemmas(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    radius: usize,
    eps: f64,
) -> Result<Vec<BoundReport>> {
    let base = rep.base_axis(gamma, eps)?;
    let length = rep.geodesic_length(gamma, eps)?;
    let lifts = rep.enumerate_lifts(gamma, radius, eps)?;
    let mut out = Vec::new();
    for lift in &lifts {
        let bis = bisectors(&lift.line, &base, eps)?;
        let instance = format!("{} gamma={gamma} g={}", rep.kind.name(), lift.g);
        match lift.rel_to_base {
            Relation::Disjoint => {
                debug_assert_eq!(bis.len(), 1);
                let proj = projection_interval(&bis[0].line, &base, eps)?;
                out.push(BoundReport::nonstrict(
                    Claim::BisectorDisjoint,
                    instance,
                    proj.length(),
                    length,
                ));
            }
            Relation::Crossing => {
                debug_assert_eq!(bis.len(), 2);
                let mut sum = 0.0;
                for b in &bis {
                    sum += projection_interval(&b.line, &base, eps)?.length();
                }
                out.push(BoundReport::nonstrict(
                    Claim::BisectorCrossingSum,
                    instance,
                    sum,
                    2.0 * length,
                ));
            }
            Relation::SharedEndpoint => unreachable!("filtered during enumeration"),
        }
    }
    Ok(out)
}

/// Self-intersection angles against the parallelism window
/// (Pi(length/2), pi - Pi(length/4)).
pub fn check_angle_corollary(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    radius: usize,
    eps: f64,
) -> Result<Vec<BoundReport>> {
    let length = rep.geodesic_length(gamma, eps)?;
    let hits = rep.self_intersection_angles(gamma, radius, eps)?;
    if hits.is_empty() {
        return Err(Error::NoSelfIntersections);
    }
    let lower = angle_of_parallelism(length / 2.0)?;
    let upper = std::f64::consts::PI - angle_of_parallelism(length / 4.0)?;
    let mut out = Vec::with_capacity(2 * hits.len());
    for hit in &hits {
        let instance = format!(
            "{} gamma={gamma} g={} position={:.6}",
            rep.kind.name(),
            hit.g,
            hit.position
        );
        out.push(BoundReport::strict(Claim::AngleLower, instance.clone(), lower, hit.angle));
        out.push(BoundReport::strict(Claim::AngleUpper, instance, hit.angle, upper));
    }
    Ok(out)
}

/// Projections between the lift sets of two distinct classes against the sum
/// of the lengths, the bisector refinement for crossing pairs, and the
/// cut-and-paste inequality on the primitive stabilizers.
pub fn check_theorem2(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    delta: &CyclicWord,
    radius: usize,
    eps: f64,
) -> Result<Vec<BoundReport>> {
    if gamma.same_unoriented_class(delta) {
        return Err(Error::SameClass);
    }
    let l_gamma = rep.geodesic_length(gamma, eps)?;
    let l_delta = rep.geodesic_length(delta, eps)?;
    let sum = l_gamma + l_delta;

    let root_gamma = gamma.primitive_root().linear();
    let root_delta = delta.primitive_root().linear();

    // Lift sets include the base axes themselves (empty coset word).
    let mut set_g = vec![(crate::words::Word::empty(), rep.base_axis(gamma, eps)?)];
    set_g.extend(rep.enumerate_lifts(gamma, radius, eps)?.into_iter().map(|l| (l.g, l.line)));
    let mut set_d = vec![(crate::words::Word::empty(), rep.base_axis(delta, eps)?)];
    set_d.extend(rep.enumerate_lifts(delta, radius, eps)?.into_iter().map(|l| (l.g, l.line)));

    let mut out = Vec::new();
    for (a, la) in &set_g {
        for (b, lb) in &set_d {
            // When one class is a power of the other, lift lines coincide;
            // the bound concerns distinct lines only.
            if la.same_unoriented(lb, eps) {
                continue;
            }
            let rel = crate::geom::crossing_test(la, lb, eps);
            if rel == Relation::SharedEndpoint {
                return Err(Error::SharedEndpoint);
            }
            let instance = format!(
                "{} gamma={gamma} delta={delta} a={a} b={b}",
                rep.kind.name()
            );
            let proj = projection_interval(la, lb, eps)?;
            out.push(BoundReport::strict(
                Claim::TwoClassProjection,
                instance.clone(),
                proj.length(),
                sum,
            ));
            if rel == Relation::Crossing {
                for bis in bisectors(la, lb, eps)? {
                    let bproj = projection_interval(&bis.line, lb, eps)?;
                    out.push(BoundReport::strict(
                        Claim::TwoClassBisector,
                        instance.clone(),
                        bproj.length(),
                        sum,
                    ));
                }
                // Cut and paste: the product of the primitive stabilizers of
                // two crossing axes is hyperbolic with a shorter translation
                // length than the sum.
                let stab_a = rep.word_to_isometry(&root_gamma.conjugated_by(a))?;
                let stab_b = rep.word_to_isometry(&root_delta.conjugated_by(b))?;
                let product = stab_a.compose(&stab_b);
                out.push(BoundReport::strict(
                    Claim::CutAndPaste,
                    instance,
                    product.translation_length()?,
                    stab_a.translation_length()? + stab_b.translation_length()?,
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_EPS as EPS;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn theorem1_on_the_figure_eight() {
        let rep = SurfaceRep::three_punctured_sphere();
        let reports = check_theorem1(&rep, &cw("xY"), 3, EPS).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.holds), "{:?}", reports.iter().find(|r| !r.holds));
        // both half-length buckets actually occur at this radius
        assert!(reports.iter().any(|r| r.claim == Claim::HalfBoundDisjoint));
    }

    #[test]
    fn theorem1_simple_word_all_disjoint() {
        let rep = SurfaceRep::once_punctured_torus();
        let reports = check_theorem1(&rep, &cw("x"), 3, EPS).unwrap();
        assert!(reports.iter().all(|r| r.holds));
        assert!(reports.iter().all(|r| r.claim != Claim::HalfBoundCrossing));
        // simple geodesics have disjoint lifts, so margins are large
        assert!(min_margin(&reports).unwrap() > 0.5);
    }

    #[test]
    fn bisector_lemmas_hold_on_figure_eight() {
        let rep = SurfaceRep::three_punctured_sphere();
        let reports = check_bisector_lemmas(&rep, &cw("xY"), 3, EPS).unwrap();
        assert!(reports.iter().any(|r| r.claim == Claim::BisectorDisjoint));
        assert!(reports.iter().any(|r| r.claim == Claim::BisectorCrossingSum));
        assert!(reports.iter().all(|r| r.holds), "{:?}", reports.iter().find(|r| !r.holds));
    }

    #[test]
    fn angle_window_on_figure_eight() {
        let rep = SurfaceRep::three_punctured_sphere();
        let reports = check_angle_corollary(&rep, &cw("xY"), 3, EPS).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.holds));
    }

    #[test]
    fn angle_corollary_requires_self_intersections() {
        let rep = SurfaceRep::once_punctured_torus();
        assert!(matches!(
            check_angle_corollary(&rep, &cw("xy"), 3, EPS),
            Err(Error::NoSelfIntersections)
        ));
    }

    #[test]
    fn theorem2_rejects_same_class() {
        let rep = SurfaceRep::three_punctured_sphere();
        assert!(matches!(
            check_theorem2(&rep, &cw("xY"), &cw("xY"), 2, EPS),
            Err(Error::SameClass)
        ));
        // the inverse class is the same unoriented geodesic
        assert!(matches!(
            check_theorem2(&rep, &cw("xY"), &cw("yX"), 2, EPS),
            Err(Error::SameClass)
        ));
    }

    #[test]
    fn theorem2_on_distinct_classes() {
        let rep = SurfaceRep::three_punctured_sphere();
        let reports = check_theorem2(&rep, &cw("xY"), &cw("xxY"), 2, EPS).unwrap();
        assert!(reports.iter().all(|r| r.holds), "{:?}", reports.iter().find(|r| !r.holds));
        assert!(reports.iter().any(|r| r.claim == Claim::CutAndPaste));
        assert!(reports.iter().any(|r| r.claim == Claim::TwoClassBisector));
    }
}
