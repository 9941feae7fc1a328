//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use hyperproj::surfaces::{SurfaceKind, SurfaceRep};
use hyperproj::verify::scans::{
    gap_function_reports, gap_function_scan, gilman_compare, gilman_reports, sharpness_scan,
    SharpnessKind,
};
use hyperproj::verify::{min_margin, BoundReport, Claim};
use hyperproj::words::conjugacy_classes_up_to;
use hyperproj::{
    check_angle_corollary, check_bisector_lemmas, check_polygon_corollary, check_theorem1,
    check_theorem2, projection_interval, sweep_lemma_bounds, CyclicWord, Error, Geodesic,
    Isometry, Word, DEFAULT_EPS as EPS,
};

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

/// Non-peripheral conjugacy classes of cyclic length <= max_len under a rep.
fn corpus(rep: &SurfaceRep, max_len: usize) -> Vec<CyclicWord> {
    conjugacy_classes_up_to(max_len)
        .into_iter()
        .filter(|c| rep.geodesic_length(c, EPS).is_ok())
        .collect()
}

fn both_reps() -> [SurfaceRep; 2] {
    [SurfaceRep::three_punctured_sphere(), SurfaceRep::once_punctured_torus()]
}

fn assert_all_hold(reports: &[BoundReport], what: &str) {
    if let Some(bad) = reports.iter().find(|r| !r.holds) {
        panic!(
            "[FAIL] {what}: {} violated at {} (lhs={}, rhs={}, margin={})",
            bad.claim.name(),
            bad.instance,
            bad.lhs,
            bad.rhs,
            bad.margin
        );
    }
}

#[test]
fn acceptance_01_tree_overlap_reference_examples() {
    let o1 = hyperproj::axis_overlap(&w("xYxy"), &w("X")).unwrap();
    assert_eq!(o1.length, 1, "overlap of xYxy against X-translate must be one edge");
    assert!(!o1.orientation_agrees, "directions must disagree on the shared edge");
    let o2 = hyperproj::axis_overlap(&w("xyx"), &w("x")).unwrap();
    assert_eq!(o2.length, 1, "overlap of xyx against x-translate must be one edge");
    assert!(o2.orientation_agrees);
    println!("[PASS] criterion 01: tree overlap reference examples (exact lengths 1 and 1)");
}

#[test]
fn acceptance_02_tree_sweep_exhaustive() {
    let reports = sweep_lemma_bounds(6, 4);
    let bad: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
    assert!(
        bad.is_empty(),
        "[FAIL] criterion 02: {} violations, first {:?}",
        bad.len(),
        bad.first()
    );
    let part1 = reports.iter().filter(|r| r.bound == hyperproj::OverlapBound::Part1).count();
    assert!(part1 > 0, "sweep must exercise the disagreeing-direction bound");
    println!(
        "[PASS] criterion 02: exhaustive tree sweep, {} instances ({} opposed), zero violations",
        reports.len(),
        part1
    );
}

#[test]
fn acceptance_03_projection_bound_corpus() {
    let mut total = 0usize;
    let mut worst = f64::INFINITY;
    for rep in both_reps() {
        for class in corpus(&rep, 6) {
            let reports = check_theorem1(&rep, &class, 4, EPS).unwrap();
            let main: Vec<BoundReport> = reports
                .into_iter()
                .filter(|r| r.claim == Claim::ProjectionVsLength)
                .collect();
            assert_all_hold(&main, "criterion 03");
            total += main.len();
            worst = worst.min(min_margin(&main).unwrap_or(f64::INFINITY));
        }
    }
    assert!(total > 10_000, "corpus should be substantial, got {total}");
    println!(
        "[PASS] criterion 03: projection < length on {total} lift instances, min margin {worst:.6}"
    );
}

#[test]
fn acceptance_04_refined_half_bounds() {
    let mut opposed_disjoint = 0usize;
    let mut opposed_crossing = 0usize;
    for rep in both_reps() {
        for class in corpus(&rep, 6) {
            let reports = check_theorem1(&rep, &class, 4, EPS).unwrap();
            let halves: Vec<BoundReport> = reports
                .into_iter()
                .filter(|r| {
                    r.claim == Claim::HalfBoundDisjoint || r.claim == Claim::HalfBoundCrossing
                })
                .collect();
            assert_all_hold(&halves, "criterion 04");
            opposed_disjoint +=
                halves.iter().filter(|r| r.claim == Claim::HalfBoundDisjoint).count();
            opposed_crossing +=
                halves.iter().filter(|r| r.claim == Claim::HalfBoundCrossing).count();
        }
    }
    assert!(opposed_disjoint > 0 && opposed_crossing > 0, "both buckets must be exercised");
    println!(
        "[PASS] criterion 04: half-length bounds on {opposed_disjoint} disjoint and \
         {opposed_crossing} crossing oppositely-oriented instances"
    );
}

#[test]
fn acceptance_05_angle_window_corpus() {
    let mut angles = 0usize;
    for rep in both_reps() {
        for class in corpus(&rep, 6) {
            match check_angle_corollary(&rep, &class, 4, EPS) {
                Ok(reports) => {
                    assert_all_hold(&reports, "criterion 05");
                    angles += reports.len() / 2;
                }
                Err(Error::NoSelfIntersections) => {}
                Err(e) => panic!("[FAIL] criterion 05: unexpected error {e}"),
            }
        }
    }
    // The figure eight must contribute and pass.
    let sphere = SurfaceRep::three_punctured_sphere();
    let fig8 = check_angle_corollary(&sphere, &cw("xY"), 4, EPS).unwrap();
    assert!(!fig8.is_empty());
    assert_all_hold(&fig8, "criterion 05 (figure eight)");
    assert!(angles > 500, "corpus should see many angles, got {angles}");
    println!("[PASS] criterion 05: {angles} self-intersection angles inside the window");
}

#[test]
fn acceptance_06_polygon_bounds_figure_eight() {
    // As stated this requires a triangle of lifts of x y^{-1} at radius 4.
    // The lift arrangement of the figure eight has a tree-shaped crossing
    // graph (measured: crossing pairs = lines - 1 at radii 4, 5 and 6), so no
    // pairwise-crossing triple exists at any radius and the scan returns
    // NoPolygonsFound.  The polygon machinery and the side bounds themselves
    // are validated on classes that do bound polygons, e.g. x x y^{-1}; see
    // polygon_bounds_hold_where_polygons_exist in the geometry suite.
    let sphere = SurfaceRep::three_punctured_sphere();
    match check_polygon_corollary(&sphere, &cw("xY"), 4, 4, EPS) {
        Ok(scan) => {
            assert!(scan.triangles > 0, "criterion demands at least one triangle");
            assert_all_hold(&scan.reports, "criterion 06");
            println!(
                "[PASS] criterion 06: {} triangles, {} quadrilaterals, all sides bounded",
                scan.triangles, scan.quadrilaterals
            );
        }
        Err(e) => {
            println!(
                "[FAIL] criterion 06: no polygon among the lifts of xY at radius 4 ({e}); \
                 the figure-eight crossing graph is a tree, so the required triangle cannot \
                 exist; the polygon bounds are verified on other classes instead"
            );
            panic!(
                "criterion 06 is unattainable as stated: the lifts of xY never form a \
                 pairwise-crossing triple (crossing pairs = lines - 1 at every tested radius)"
            );
        }
    }
}

#[test]
fn acceptance_07_two_class_projection_corpus() {
    let mut total = 0usize;
    let mut cut_paste = 0usize;
    for rep in both_reps() {
        let classes = corpus(&rep, 4);
        for (i, gamma) in classes.iter().enumerate() {
            for delta in classes.iter().skip(i + 1) {
                if gamma.same_unoriented_class(delta) {
                    continue;
                }
                let reports = check_theorem2(&rep, gamma, delta, 3, EPS).unwrap();
                assert_all_hold(&reports, "criterion 07");
                total += reports.iter().filter(|r| r.claim == Claim::TwoClassProjection).count();
                cut_paste += reports.iter().filter(|r| r.claim == Claim::CutAndPaste).count();
            }
        }
    }
    assert!(total > 10_000 && cut_paste > 100, "corpus too small: {total}, {cut_paste}");
    println!(
        "[PASS] criterion 07: {total} two-class projections bounded, {cut_paste} cut-and-paste \
         inequalities strict"
    );
}

#[test]
fn acceptance_08_sharpness_families() {
    let crossing = sharpness_scan(SharpnessKind::Crossing, 12).unwrap();
    let disjoint = sharpness_scan(SharpnessKind::Disjoint, 12).unwrap();
    let two = sharpness_scan(SharpnessKind::TwoGeodesics, 12).unwrap();
    for (scan, reach) in [(&crossing, 12), (&disjoint, 11), (&two, 11)] {
        let reports = hyperproj::verify::scans::sharpness_reports(scan);
        assert_all_hold(&reports, "criterion 08");
        let last = scan.rows.last().expect("nonempty scan").n;
        assert!(
            last >= reach,
            "{} family should compute through n = {reach}, reached {last}",
            scan.kind.name()
        );
        // ratios grow toward 1 along each family
        for pair in scan.rows.windows(2) {
            assert!(
                pair[1].ratio >= pair[0].ratio,
                "{} family ratio not monotone at n = {}",
                scan.kind.name(),
                pair[1].n
            );
        }
    }
    println!(
        "[PASS] criterion 08: sharpness floors respected; crossing through n={}, disjoint n={}, \
         two-class n={}; all ratios < 1 and nondecreasing",
        crossing.rows.last().unwrap().n,
        disjoint.rows.last().unwrap().n,
        two.rows.last().unwrap().n,
    );
}

#[test]
fn acceptance_09_closed_form_cross_checks() {
    use hyperproj::{projection_length_closed_form, ProjectionCase};
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);

    let mut random_isometry = |rng: &mut rand_chacha::ChaCha8Rng| {
        let t: f64 = rng.gen_range(-2.0..2.0);
        let u: f64 = rng.gen_range(-1.2..1.2);
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
        let translate = Isometry::new(1.0, t, 0.0, 1.0).unwrap();
        let dilate = Isometry::new((u / 2.0).exp(), 0.0, 0.0, (-u / 2.0).exp()).unwrap();
        let rotate =
            Isometry::new((theta / 2.0).cos(), (theta / 2.0).sin(), -(theta / 2.0).sin(), (theta / 2.0).cos())
                .unwrap();
        translate.compose(&dilate).compose(&rotate)
    };

    let vertical = Geodesic { p: hyperproj::BoundaryPoint::Finite(0.0), q: hyperproj::BoundaryPoint::Infinity };
    let mut max_err: f64 = 0.0;
    for _ in 0..1000 {
        // crossing pair with a prescribed angle
        let phi: f64 = rng.gen_range(0.05..(std::f64::consts::PI - 0.05));
        let psi = std::f64::consts::FRAC_PI_2 - phi;
        let (c, r) = (psi.tan(), 1.0 / psi.cos().abs());
        let m = Geodesic::between(c - r, c + r);
        let t = random_isometry(&mut rng);
        let measured =
            projection_interval(&m.mapped(&t), &vertical.mapped(&t), EPS).unwrap().length();
        let closed = projection_length_closed_form(ProjectionCase::Crossing { phi }).unwrap();
        max_err = max_err.max((measured - closed).abs());

        // disjoint pair at a prescribed distance
        let d: f64 = rng.gen_range(0.05..4.0);
        let (a, b) = ((d / 2.0).tanh(), 1.0 / (d / 2.0).tanh());
        let m = Geodesic::between(a, b);
        let t = random_isometry(&mut rng);
        let measured =
            projection_interval(&m.mapped(&t), &vertical.mapped(&t), EPS).unwrap().length();
        let closed = projection_length_closed_form(ProjectionCase::Disjoint { d }).unwrap();
        max_err = max_err.max((measured - closed).abs());
    }
    assert!(max_err < 1e-10, "closed form vs endpoint projection drifted to {max_err:e}");

    // parallelism identities on the 0.1..10 grid
    for k in 1..=100 {
        let a = 0.1 * k as f64;
        let p = hyperproj::angle_of_parallelism(a).unwrap();
        assert!((p.cos() - a.tanh()).abs() < 1e-12);
        assert!((p.sin() - 1.0 / a.cosh()).abs() < 1e-12);
    }

    // the ln 2 anchor instance
    let anchor =
        projection_length_closed_form(ProjectionCase::Disjoint { d: 3.0f64.acosh() }).unwrap();
    assert!((anchor - 2.0f64.ln()).abs() < 1e-12);
    let direct = projection_interval(&Geodesic::between(1.0, 2.0), &vertical, EPS).unwrap();
    assert!((direct.length() - 2.0f64.ln()).abs() < 1e-12);

    println!("[PASS] criterion 09: closed forms agree within {max_err:.2e} over 2000 instances");
}

#[test]
fn acceptance_10_angle_floor_crossover() {
    let grid: Vec<f64> = (1..=40).map(|k| 0.5 * k as f64).collect();
    let scan = gilman_compare(&grid);
    let reports = gilman_reports(&scan);
    assert_all_hold(&reports, "criterion 10");
    assert!(scan.crossover >= 2.0 && scan.crossover <= 2.3);
    assert!((scan.crossover - scan.crossover_analytic).abs() < 1e-9);
    println!(
        "[PASS] criterion 10: angle-floor crossover at {:.9} (analytic {:.9})",
        scan.crossover, scan.crossover_analytic
    );
}

#[test]
fn acceptance_11_gap_ratio_scan() {
    let grid: Vec<f64> = (2..=80).map(|k| 0.25 * k as f64).collect();
    for c in [0.5, 1.44, 3.0] {
        let scan = gap_function_scan(c, &grid).unwrap();
        let reports = gap_function_reports(&scan);
        assert_all_hold(&reports, "criterion 11");
    }
    let scan = gap_function_scan(1.44, &grid).unwrap();
    assert!(scan.r_at_reference > 2.0);
    // Reported, not asserted: the two candidate reference lengths disagree.
    println!("[PASS] criterion 11: gap ratio increasing and above 1; note: {}", scan.note);
}

#[test]
fn acceptance_runtime_guard_criterion_01() {
    use std::time::Instant;
    let start = Instant::now();
    let _ = hyperproj::axis_overlap(&w("xYxy"), &w("X")).unwrap();
    let _ = hyperproj::axis_overlap(&w("xyx"), &w("x")).unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0, "reference examples must run in under a second");
}
