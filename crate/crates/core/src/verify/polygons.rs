//! Convex polygons bounded by lifts of a single closed geodesic, and the
//! side-length bounds they satisfy.

use crate::error::{Error, Result};
use crate::geom::{crossing_test, intersection_point, projection_interval, Geodesic, HPoint, Relation};
use crate::surfaces::SurfaceRep;
use crate::words::CyclicWord;

use super::{BoundReport, Claim};

/// Hard cap on polygon size; the tuple scan is combinatorial in the lift
/// count and the bounds for larger polygons follow the same recipe.
pub const MAX_POLYGON_SIDES: usize = 4;

/// Summary of one polygon scan.
#[derive(Debug, Clone)]
pub struct PolygonScan {
    pub reports: Vec<BoundReport>,
    pub triangles: usize,
    pub quadrilaterals: usize,
}

/// Enumerate triangles (and quadrilaterals up to `n_max`) bounded by
/// pairwise-crossing lifts, and check every side against (n - 2) times the
/// geodesic length plus the projection-sum route used to prove it.
///
/// Returns `NoPolygonsFound` when the scan finds nothing; some classes (the
/// figure eight among them) have tree-like lift arrangements with no
/// pairwise-crossing triple at any radius.
pub fn check_polygon_corollary(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    radius: usize,
    n_max: usize,
    eps: f64,
) -> Result<PolygonScan> {
    let base = rep.base_axis(gamma, eps)?;
    let length = rep.geodesic_length(gamma, eps)?;
    let mut lines: Vec<(String, Geodesic)> = vec![("e".into(), base)];
    for lift in rep.enumerate_lifts(gamma, radius, eps)? {
        lines.push((lift.g.to_string(), lift.line));
    }
    let n = lines.len();
    let mut crossing = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            if crossing_test(&lines[i].1, &lines[j].1, eps) == Relation::Crossing {
                crossing[i * n + j] = true;
                crossing[j * n + i] = true;
            }
        }
    }

    let mut scan = PolygonScan { reports: Vec::new(), triangles: 0, quadrilaterals: 0 };
    triangles(rep, gamma, &lines, &crossing, length, eps, &mut scan)?;
    if n_max.min(MAX_POLYGON_SIDES) >= 4 {
        quadrilaterals(rep, gamma, &lines, &crossing, length, eps, &mut scan)?;
    }
    if scan.triangles + scan.quadrilaterals == 0 {
        return Err(Error::NoPolygonsFound);
    }
    Ok(scan)
}

fn triangles(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    lines: &[(String, Geodesic)],
    crossing: &[bool],
    length: f64,
    eps: f64,
    scan: &mut PolygonScan,
) -> Result<()> {
    let n = lines.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if !crossing[i * n + j] {
                continue;
            }
            for k in (j + 1)..n {
                if !(crossing[i * n + k] && crossing[j * n + k]) {
                    continue;
                }
                let vij = intersection_point(&lines[i].1, &lines[j].1, eps)?;
                let vik = intersection_point(&lines[i].1, &lines[k].1, eps)?;
                let vjk = intersection_point(&lines[j].1, &lines[k].1, eps)?;
                if concurrent(vij, vik, eps) || concurrent(vij, vjk, eps) || concurrent(vik, vjk, eps)
                {
                    // concurrent triple: no triangle, not an error
                    continue;
                }
                scan.triangles += 1;
                let name = format!(
                    "{} gamma={gamma} triangle={}/{}/{}",
                    rep.kind.name(),
                    lines[i].0,
                    lines[j].0,
                    lines[k].0
                );
                // Each side sits on one of the lines; its length is checked
                // against (3 - 2) l and against the projections of the two
                // other lines onto it (halved: the sides are adjacent).
                let sides = [
                    (vij.dist(vik), i, j, k),
                    (vij.dist(vjk), j, i, k),
                    (vik.dist(vjk), k, i, j),
                ];
                for (side, on, other1, other2) in sides {
                    scan.reports.push(BoundReport::strict(
                        Claim::PolygonSide,
                        format!("{name} side_on={}", lines[on].0),
                        side,
                        length,
                    ));
                    let p1 = projection_interval(&lines[other1].1, &lines[on].1, eps)?.length();
                    let p2 = projection_interval(&lines[other2].1, &lines[on].1, eps)?.length();
                    scan.reports.push(BoundReport::nonstrict(
                        Claim::PolygonProjectionSum,
                        format!("{name} side_on={}", lines[on].0),
                        side,
                        0.5 * p1 + 0.5 * p2,
                    ));
                }
            }
        }
    }
    Ok(())
}

fn quadrilaterals(
    rep: &SurfaceRep,
    gamma: &CyclicWord,
    lines: &[(String, Geodesic)],
    crossing: &[bool],
    length: f64,
    eps: f64,
    scan: &mut PolygonScan,
) -> Result<()> {
    let n = lines.len();
    let all_crossing = |combo: &[usize]| {
        combo
            .iter()
            .enumerate()
            .all(|(t, &a)| combo[t + 1..].iter().all(|&b| crossing[a * n + b]))
    };
    for a in 0..n {
        for b in (a + 1)..n {
            if !crossing[a * n + b] {
                continue;
            }
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let combo = [a, b, c, d];
                    if !all_crossing(&combo) {
                        continue;
                    }
                    // Three cyclic orders are possible; a valid one has the
                    // four consecutive-intersection vertices in convex
                    // position (straight chords in the Klein disk).
                    for order in [[a, b, c, d], [a, b, d, c], [a, c, b, d]] {
                        if let Some(vs) = convex_vertices(lines, &order, eps)? {
                            scan.quadrilaterals += 1;
                            let name = format!(
                                "{} gamma={gamma} quad={}/{}/{}/{}",
                                rep.kind.name(),
                                lines[order[0]].0,
                                lines[order[1]].0,
                                lines[order[2]].0,
                                lines[order[3]].0
                            );
                            for t in 0..4 {
                                let side = vs[t].dist(vs[(t + 1) % 4]);
                                scan.reports.push(BoundReport::strict(
                                    Claim::PolygonSide,
                                    format!("{name} side_on={}", lines[order[(t + 1) % 4]].0),
                                    side,
                                    2.0 * length,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn concurrent(a: HPoint, b: HPoint, eps: f64) -> bool {
    (a.x - b.x).abs() <= eps && (a.y - b.y).abs() <= eps
}

/// Vertices of the quadrilateral with sides on the given cyclic order of
/// lines, when those vertices are distinct and in convex position.
fn convex_vertices(
    lines: &[(String, Geodesic)],
    order: &[usize; 4],
    eps: f64,
) -> Result<Option<[HPoint; 4]>> {
    let mut vs = [HPoint::I; 4];
    for t in 0..4 {
        vs[t] = intersection_point(&lines[order[t]].1, &lines[order[(t + 1) % 4]].1, eps)?;
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if concurrent(vs[i], vs[j], eps) {
                return Ok(None);
            }
        }
    }
    let k: Vec<(f64, f64)> = vs.iter().map(|v| v.to_klein()).collect();
    let mut sign = 0.0f64;
    for t in 0..4 {
        let (x1, y1) = k[t];
        let (x2, y2) = k[(t + 1) % 4];
        let (x3, y3) = k[(t + 2) % 4];
        let cross = (x2 - x1) * (y3 - y2) - (y2 - y1) * (x3 - x2);
        if cross.abs() < 1e-13 {
            return Ok(None);
        }
        if sign == 0.0 {
            sign = cross.signum();
        } else if cross.signum() != sign {
            return Ok(None);
        }
    }
    Ok(Some(vs))
}
