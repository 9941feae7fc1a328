//! Command-line verifier: enumerate lifts of closed geodesics on the two
//! cusped surfaces, check the projection/angle/bisector/polygon bounds, run
//! the sharpness and angle-floor scans, and emit CSV or JSON reports.

mod plot;

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperproj::surfaces::{SurfaceKind, SurfaceRep};
use hyperproj::verify::scans::{
    gap_function_reports, gap_function_scan, gilman_compare, gilman_reports, sharpness_reports,
    sharpness_scan, SharpnessKind,
};
use hyperproj::verify::BoundReport;
use hyperproj::{
    check_angle_corollary, check_bisector_lemmas, check_polygon_corollary, check_theorem1,
    check_theorem2, sweep_lemma_bounds, CyclicWord, Error,
};

#[derive(Parser)]
#[command(name = "hyperproj", version, about, long_about = None)]
struct Cli {
    /// Endpoint/trace tolerance.
    #[arg(long, global = true, default_value_t = hyperproj::DEFAULT_EPS)]
    eps: f64,
    /// Report format written to stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Csv)]
    out: OutFormat,
    /// Write an SVG chart of the run (ratio or margin curves).
    #[arg(long, global = true, value_name = "FILE.svg")]
    plot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    Sphere,
    Torus,
}

impl Surface {
    fn rep(self) -> SurfaceRep {
        match self {
            Surface::Sphere => SurfaceRep::by_kind(SurfaceKind::ThreePuncturedSphere),
            Surface::Torus => SurfaceRep::by_kind(SurfaceKind::OncePuncturedTorus),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Crossing,
    Disjoint,
    Two,
}

#[derive(Subcommand)]
enum Command {
    /// Check a bound family on enumerated lifts.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Tabulate a scan-style study.
    #[command(subcommand)]
    Scan(ScanCommand),
}

#[derive(Args)]
struct ClassArgs {
    /// Surface representation.
    #[arg(long, value_enum, default_value_t = Surface::Sphere)]
    surface: Surface,
    /// Cyclic word of the closed geodesic, over x, X, y, Y.
    #[arg(long, default_value = "xY")]
    word: String,
    /// Coset radius for lift enumeration.
    #[arg(long, default_value_t = 4)]
    radius: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Projection of every lift onto the base axis versus the length, with
    /// the half-length refinements, plus the bisector bounds.
    Theorem1(ClassArgs),
    /// Projections between the lift sets of two distinct classes versus the
    /// length sum, with the bisector and cut-and-paste refinements.
    Theorem2 {
        #[command(flatten)]
        class: ClassArgs,
        /// Second cyclic word, a different unoriented class.
        #[arg(long)]
        word2: String,
    },
    /// Self-intersection angles inside the parallelism window.
    Angles(ClassArgs),
    /// Convex polygons bounded by lifts and their side bounds.
    Polygons {
        #[command(flatten)]
        class: ClassArgs,
        /// Largest polygon size to search for (3..=4).
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
    /// Exhaustive overlap bounds for axes in the dual tree.
    TreeLemmas {
        /// Largest cyclic length of the translated class.
        #[arg(long = "max-alpha", default_value_t = 6)]
        max_alpha: usize,
        /// Largest conjugator length.
        #[arg(long = "max-g", default_value_t = 4)]
        max_g: usize,
    },
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Families of lift pairs whose projection-to-length ratio approaches 1.
    Sharpness {
        #[arg(long, value_enum, default_value_t = Kind::Crossing)]
        kind: Kind,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
    /// The two lower bounds for self-intersection angle sines and their
    /// crossover.
    Gilman {
        #[arg(long, default_value_t = 20.0)]
        lmax: f64,
    },
    /// The parallelism-ratio function R(l) behind the conjectured gap.
    Gapfn {
        #[arg(long, default_value_t = 1.44)]
        c: f64,
        #[arg(long, default_value_t = 20.0)]
        lmax: f64,
    },
}

fn parse_class(word: &str) -> anyhow::Result<CyclicWord> {
    CyclicWord::parse(word).with_context(|| format!("invalid cyclic word {word:?}"))
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let eps = cli.eps;

    // Every branch produces report rows plus an optional JSON payload with
    // the scan-specific table.
    let mut payload: Option<serde_json::Value> = None;
    let mut plot_series: Vec<plot::Series> = Vec::new();

    let reports: Vec<BoundReport> = match &cli.command {
        Command::Verify(VerifyCommand::Theorem1(args)) => {
            let rep = args.surface.rep();
            let class = parse_class(&args.word)?;
            let mut reports = check_theorem1(&rep, &class, args.radius, eps)?;
            reports.extend(check_bisector_lemmas(&rep, &class, args.radius, eps)?);
            reports
        }
        Command::Verify(VerifyCommand::Theorem2 { class, word2 }) => {
            let rep = class.surface.rep();
            let gamma = parse_class(&class.word)?;
            let delta = parse_class(word2)?;
            check_theorem2(&rep, &gamma, &delta, class.radius, eps)?
        }
        Command::Verify(VerifyCommand::Angles(args)) => {
            let rep = args.surface.rep();
            let class = parse_class(&args.word)?;
            match check_angle_corollary(&rep, &class, args.radius, eps) {
                Ok(reports) => reports,
                Err(Error::NoSelfIntersections) => {
                    eprintln!(
                        "note: {} has no self-intersections at radius {}",
                        args.word, args.radius
                    );
                    Vec::new()
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Verify(VerifyCommand::Polygons { class, nmax }) => {
            let rep = class.surface.rep();
            let word = parse_class(&class.word)?;
            match check_polygon_corollary(&rep, &word, class.radius, *nmax, eps) {
                Ok(scan) => {
                    eprintln!(
                        "found {} triangles and {} quadrilaterals",
                        scan.triangles, scan.quadrilaterals
                    );
                    scan.reports
                }
                Err(Error::NoPolygonsFound) => {
                    eprintln!(
                        "note: no polygon among the lifts of {} at radius {}",
                        class.word, class.radius
                    );
                    Vec::new()
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Verify(VerifyCommand::TreeLemmas { max_alpha, max_g }) => {
            let lemma_reports = sweep_lemma_bounds(*max_alpha, *max_g);
            if matches!(cli.out, OutFormat::Json) {
                // The tree reports carry their own schema.
                println!("{}", serde_json::to_string_pretty(&lemma_reports)?);
                let violations = lemma_reports.iter().filter(|r| !r.holds).count();
                eprintln!("{} overlaps checked, {} violations", lemma_reports.len(), violations);
                std::process::exit(i32::from(violations > 0));
            }
            lemma_reports.iter().map(tree_report_to_bound).collect()
        }
        Command::Scan(ScanCommand::Sharpness { kind, nmax }) => {
            let kind = match kind {
                Kind::Crossing => SharpnessKind::Crossing,
                Kind::Disjoint => SharpnessKind::Disjoint,
                Kind::Two => SharpnessKind::TwoGeodesics,
            };
            let scan = sharpness_scan(kind, *nmax)?;
            if let Some(n) = scan.capped_at {
                eprintln!("conditioning cap reached at n = {n}; earlier members reported");
            }
            plot_series.push(plot::Series {
                label: "ratio".into(),
                points: scan.rows.iter().map(|r| (r.n as f64, r.ratio)).collect(),
            });
            plot_series.push(plot::Series {
                label: "floor".into(),
                points: scan.rows.iter().map(|r| (r.n as f64, r.floor)).collect(),
            });
            let reports = sharpness_reports(&scan);
            payload = Some(serde_json::to_value(&scan)?);
            reports
        }
        Command::Scan(ScanCommand::Gilman { lmax }) => {
            let grid: Vec<f64> = grid_to(0.5, *lmax, 0.25);
            let scan = gilman_compare(&grid);
            eprintln!(
                "crossover at {:.9} (closed form {:.9})",
                scan.crossover, scan.crossover_analytic
            );
            plot_series.push(plot::Series {
                label: "sech(L/2)".into(),
                points: scan.rows.iter().map(|r| (r.0, r.1)).collect(),
            });
            plot_series.push(plot::Series {
                label: "1/sinh^2(L/2)".into(),
                points: scan.rows.iter().map(|r| (r.0, r.2)).collect(),
            });
            let reports = gilman_reports(&scan);
            payload = Some(serde_json::to_value(&scan)?);
            reports
        }
        Command::Scan(ScanCommand::Gapfn { c, lmax }) => {
            let grid: Vec<f64> = grid_to(0.5, *lmax, 0.25);
            let scan = gap_function_scan(*c, &grid)?;
            eprintln!("note: {}", scan.note);
            plot_series.push(plot::Series {
                label: format!("R(l) at c={c}"),
                points: scan.rows.clone(),
            });
            let reports = gap_function_reports(&scan);
            payload = Some(serde_json::to_value(&scan)?);
            reports
        }
    };

    if let Some(path) = &cli.plot {
        if plot_series.is_empty() {
            // For verify runs, chart the sorted margins.
            let mut margins: Vec<f64> = reports.iter().map(|r| r.margin).collect();
            margins.sort_by(f64::total_cmp);
            plot_series.push(plot::Series {
                label: "sorted margins".into(),
                points: margins.iter().enumerate().map(|(i, m)| (i as f64, *m)).collect(),
            });
        }
        plot::line_chart(path, &chart_title(&cli.command), &plot_series)
            .with_context(|| format!("writing {}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }

    match cli.out {
        OutFormat::Csv => {
            println!("claim,instance,lhs,rhs,margin,holds");
            for r in &reports {
                if r.instance.contains(',') {
                    bail!("instance string contains a comma: {}", r.instance);
                }
                println!(
                    "{},{},{},{},{},{}",
                    r.claim.name(),
                    r.instance,
                    r.lhs,
                    r.rhs,
                    r.margin,
                    r.holds
                );
            }
        }
        OutFormat::Json => {
            let doc = serde_json::json!({
                "reports": reports,
                "table": payload,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }

    let violations = reports.iter().filter(|r| !r.holds).count();
    eprintln!("{} bounds checked, {} violations", reports.len(), violations);
    std::process::exit(i32::from(violations > 0));
}

fn grid_to(from: f64, to: f64, step: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut x = from;
    while x <= to + 1e-12 {
        out.push(x);
        x += step;
    }
    out
}

fn tree_report_to_bound(r: &hyperproj::LemmaReport) -> BoundReport {
    use hyperproj::verify::Claim;
    let (claim, rhs) = match r.bound {
        hyperproj::OverlapBound::Part1 => {
            (Claim::TreeOverlapOpposed, (r.l_alpha as f64 - 1.0) / 2.0)
        }
        hyperproj::OverlapBound::Part2 => (Claim::TreeOverlapDistinct, r.l_alpha as f64 - 1.0),
    };
    let agree = match r.directions_agree {
        Some(true) => "agree",
        Some(false) => "disagree",
        None => "n/a",
    };
    BoundReport::strict(
        claim,
        format!("alpha={} g={} L={} directions={agree}", r.alpha, r.g, r.l_alpha),
        r.overlap_len as f64,
        rhs,
    )
}

fn chart_title(cmd: &Command) -> String {
    match cmd {
        Command::Verify(VerifyCommand::Theorem1(a)) => {
            format!("projection bounds: {} at radius {}", a.word, a.radius)
        }
        Command::Verify(VerifyCommand::Theorem2 { class, word2 }) => {
            format!("two-class projection bounds: {} vs {word2}", class.word)
        }
        Command::Verify(VerifyCommand::Angles(a)) => format!("angle window: {}", a.word),
        Command::Verify(VerifyCommand::Polygons { class, .. }) => {
            format!("polygon sides: {}", class.word)
        }
        Command::Verify(VerifyCommand::TreeLemmas { max_alpha, max_g }) => {
            format!("tree overlap bounds: L<={max_alpha}, |g|<={max_g}")
        }
        Command::Scan(ScanCommand::Sharpness { kind, .. }) => format!(
            "sharpness family ({})",
            match kind {
                Kind::Crossing => "crossing",
                Kind::Disjoint => "disjoint",
                Kind::Two => "two classes",
            }
        ),
        Command::Scan(ScanCommand::Gilman { .. }) => "self-intersection angle floors".into(),
        Command::Scan(ScanCommand::Gapfn { c, .. }) => format!("parallelism ratio at c={c}"),
    }
}
