//! Command-line front end: deterministic instance generation, the
//! selection and subset pipelines, certificate verification, brute-force
//! baselines, and a batch suite that enforces the containment, diameter,
//! and volume bounds over seeded corpora.
//!
//! Machine-readable JSON goes to `--output` (or stdout when omitted);
//! human-readable summaries go to stderr, except the suite table, which
//! is the suite's primary output and prints to stdout.  Exit codes:
//! 0 success, 1 a checked bound or verification failed, 2 operational
//! error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use sparsehull::corpus::{self, BodyKind};
use sparsehull::geom::{HPolytope, VPolytope};
use sparsehull::helly::{self, HellyReport};
use sparsehull::io::{
    self, CertificateJson, CheckReportJson, HellyReportJson, JohnOutputJson, PolytopeJson,
    SubsetSearchJson,
};
use sparsehull::select::{self, SimplexMode};
use sparsehull::{john, oracle};

#[derive(Parser)]
#[command(
    name = "sparsehull",
    version,
    about = "Sparse vertex selection for polytopes with re-checkable certificates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a deterministic test body as JSON.
    Generate(GenerateArgs),
    /// Select few vertices covering a V-polytope after reflection and
    /// scaling; emits the selection certificate.
    Select(SelectArgs),
    /// Pick a small halfspace subfamily with bounded diameter and
    /// volume blow-up; emits the full report.
    Helly(HellyArgs),
    /// Compute the maximal inscribed ellipsoid and normalizing map of
    /// an H-polytope.
    John(JohnArgs),
    /// Brute-force baselines: best subset by diameter, volume, or
    /// containment factor.
    Oracle(OracleArgs),
    /// Re-check a selection certificate against its body.
    Verify(VerifyArgs),
    /// Run seeded corpora through the pipelines and enforce every
    /// advertised bound; nonzero exit on any violation.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// cube | cross | simplex-john | tangent-halfspaces | random-vpoly |
    /// random-symmetric-vpoly
    #[arg(long)]
    kind: String,
    #[arg(long)]
    dim: usize,
    /// Rows or points for the random kinds; exact kinds ignore it.
    #[arg(short = 'n', long, default_value_t = 12)]
    size: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Instance index within the seed (independent RNG stream).
    #[arg(long, default_value_t = 0)]
    index: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeFlag {
    Exhaustive,
    Swap,
}

impl From<ModeFlag> for SimplexMode {
    fn from(m: ModeFlag) -> Self {
        match m {
            ModeFlag::Exhaustive => SimplexMode::GlobalExhaustive,
            ModeFlag::Swap => SimplexMode::LocalSwap,
        }
    }
}

#[derive(Args)]
struct SelectArgs {
    /// V-polytope JSON (`vrep` required).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeFlag::Swap)]
    mode: ModeFlag,
    /// Reflection constant to certify; measured from the body when
    /// omitted (the measured value always takes precedence if larger).
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct HellyArgs {
    /// Halfspace-family JSON (`hrep` required).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeFlag::Swap)]
    mode: ModeFlag,
    /// Seed for the optional Monte Carlo volume cross-check.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sample count for the Monte Carlo cross-check; 0 disables it.
    #[arg(long, default_value_t = 0)]
    mc_samples: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct JohnArgs {
    /// H-polytope JSON (`hrep` required).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Objective {
    /// Minimize subfamily diameter (halfspace input).
    Diam,
    /// Minimize subfamily volume (halfspace input).
    Vol,
    /// Minimize the reflected containment factor (vertex input).
    Factor,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    objective: Objective,
    /// Subset size to search; defaults to 2·dim.
    #[arg(short = 'k', long)]
    subset_size: Option<usize>,
    /// Enumeration budget for the exhaustive search.
    #[arg(long, default_value_t = oracle::SUBSET_BUDGET)]
    budget: u128,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// The body the certificate talks about (`vrep` required).
    #[arg(long)]
    input: PathBuf,
    /// Selection-certificate JSON.
    #[arg(long)]
    certificate: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Instances per corpus; seeds run seed..seed+count-1.
    #[arg(long, default_value_t = 50)]
    count: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ModeFlag::Swap)]
    mode: ModeFlag,
    /// Points per random V-polytope; defaults to 4·dim.
    #[arg(long)]
    points: Option<usize>,
    /// Rows per tangent-halfspace family; defaults to 12/20/24 for
    /// d = 2/3/4 and 6·dim otherwise.
    #[arg(long)]
    family_rows: Option<usize>,
    /// Write the full machine-readable report here.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<bool> {
    match Cli::parse().cmd {
        Cmd::Generate(a) => cmd_generate(a),
        Cmd::Select(a) => cmd_select(a),
        Cmd::Helly(a) => cmd_helly(a),
        Cmd::John(a) => cmd_john(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Suite(a) => cmd_suite(a),
    }
}

fn read_polytope(path: &Path) -> Result<PolytopeJson> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    io::from_json_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn require_vrep(json: &PolytopeJson, path: &Path) -> Result<VPolytope> {
    json.to_vpolytope()
        .with_context(|| format!("{} must carry a vertex representation", path.display()))
}

fn require_hrep(json: &PolytopeJson, path: &Path) -> Result<HPolytope> {
    json.to_hpolytope()
        .with_context(|| format!("{} must carry a halfspace representation", path.display()))
}

fn emit<T: Serialize>(value: &T, output: Option<&Path>) -> Result<()> {
    let text = io::to_json_string(value)?;
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_generate(a: GenerateArgs) -> Result<bool> {
    let kind: BodyKind = a.kind.parse()?;
    let inst = corpus::generate(kind, a.dim, a.size, a.seed, a.index)?;
    emit(&PolytopeJson::from_instance(&inst), a.output.as_deref())?;
    Ok(true)
}

fn cmd_select(a: SelectArgs) -> Result<bool> {
    let json = read_polytope(&a.input)?;
    let q = require_vrep(&json, &a.input)?;
    let cert = select::sparse_approx(&q, a.mode.into(), a.lambda)?;
    eprintln!(
        "selected {} of {} vertices; reflection constant {:.6}, certified factor {:.6}",
        cert.qprime_indices.len(),
        q.len(),
        cert.lambda_used,
        cert.factor
    );
    emit(&CertificateJson::from(&cert), a.output.as_deref())?;
    Ok(true)
}

fn cmd_helly(a: HellyArgs) -> Result<bool> {
    let json = read_polytope(&a.input)?;
    let h = require_hrep(&json, &a.input)?;
    let report = helly::helly_subset(&h, a.mode.into())?;
    print_helly_table(&report);
    if a.mc_samples > 0 {
        let sub_rows: Vec<_> = report
            .sigma
            .iter()
            .map(|&i| h.halfspaces()[i].clone())
            .collect();
        let sub = HPolytope::new(h.dim(), sub_rows)?;
        for (label, body, exact) in [
            ("family", &h, report.vol_k),
            ("subfamily", &sub, report.vol_sigma),
        ] {
            let (est, se) = oracle::monte_carlo_volume(body, a.mc_samples, a.seed)?;
            let dev = if se > 0.0 { (est - exact).abs() / se } else { 0.0 };
            eprintln!(
                "monte carlo {label}: estimate {est:.6} vs exact {exact:.6} ({dev:.2} sigma, {} samples)",
                a.mc_samples
            );
        }
    }
    emit(&HellyReportJson::from(&report), a.output.as_deref())?;
    Ok(true)
}

fn print_helly_table(r: &HellyReport) {
    eprintln!("dimension            {}", r.dim);
    eprintln!("kept rows            {:?}", r.sigma);
    eprintln!("reflection constant  {:.6}", r.lambda_tilde);
    eprintln!(
        "diameter             {:.6} -> {:.6} (bound {:.6}, ratio {:.4})",
        r.diam_k,
        r.diam_sigma,
        r.diam_bound,
        r.diam_sigma / r.diam_bound
    );
    eprintln!(
        "volume               {:.6} -> {:.6} (bound {:.6e}, ratio {:.4e})",
        r.vol_k,
        r.vol_sigma,
        r.vol_bound,
        r.vol_sigma / r.vol_bound
    );
    eprintln!(
        "containment transfer {}",
        if r.containment_transfer_ok { "ok" } else { "VIOLATED" }
    );
    match r.santalo_ok {
        Some(true) => eprintln!("volume product check ok"),
        Some(false) => eprintln!("volume product check VIOLATED"),
        None => {}
    }
}

fn cmd_john(a: JohnArgs) -> Result<bool> {
    let json = read_polytope(&a.input)?;
    let h = require_hrep(&json, &a.input)?;
    let ins = john::maximal_inscribed_ellipsoid(&h)?;
    let pos = john::to_john_position(&h)?;
    let outer = john::outer_radius_by_vertices(&pos.body).ok();
    eprintln!(
        "inscribed ellipsoid found in {} barrier steps; normalized quality {:.6}",
        ins.newton_steps, pos.quality
    );
    if let Some(r) = outer {
        eprintln!("normalized outer radius {r:.6} (dimension bound {})", h.dim());
    }
    let out = JohnOutputJson {
        ellipsoid: (&ins.ellipsoid).into(),
        transform: (&pos.map).into(),
        quality: pos.quality,
        outer_radius: outer,
    };
    emit(&out, a.output.as_deref())?;
    Ok(true)
}

fn cmd_oracle(a: OracleArgs) -> Result<bool> {
    let json = read_polytope(&a.input)?;
    let k = a.subset_size.unwrap_or(2 * json.dim);
    let search = match a.objective {
        Objective::Diam => oracle::best_halfspace_subset_with_budget(
            &require_hrep(&json, &a.input)?,
            k,
            oracle::SubsetScore::Diameter,
            a.budget,
        )?,
        Objective::Vol => oracle::best_halfspace_subset_with_budget(
            &require_hrep(&json, &a.input)?,
            k,
            oracle::SubsetScore::Volume,
            a.budget,
        )?,
        Objective::Factor => oracle::best_vertex_subset_with_budget(
            &require_vrep(&json, &a.input)?,
            k,
            a.budget,
        )?,
    };
    eprintln!(
        "searched {} subsets of size {k}; best {:?} scored {}",
        search.enumerated, search.indices, search.score
    );
    emit(&SubsetSearchJson::from(&search), a.output.as_deref())?;
    Ok(true)
}

fn cmd_verify(a: VerifyArgs) -> Result<bool> {
    let json = read_polytope(&a.input)?;
    let q = require_vrep(&json, &a.input)?;
    let cert_text = fs::read_to_string(&a.certificate)
        .with_context(|| format!("cannot read {}", a.certificate.display()))?;
    let cert_json: CertificateJson = io::from_json_str(&cert_text)
        .with_context(|| format!("cannot parse {}", a.certificate.display()))?;
    let cert = cert_json.to_certificate()?;
    let report = select::verify_certificate(&q, &cert)?;
    for (id, ok) in &report.details {
        eprintln!("{id:<28} {}", if *ok { "ok" } else { "FAIL" });
    }
    emit(&CheckReportJson::from(&report), a.output.as_deref())?;
    Ok(report.passed)
}

// ---------------------------------------------------------------------------
// Suite

#[derive(Serialize, Deserialize)]
struct SuiteConfigJson {
    dim: usize,
    count: u64,
    seed: u64,
    mode: String,
    points: usize,
    family_rows: usize,
}

#[derive(Serialize, Deserialize, Clone)]
struct SelectionRowJson {
    seed: u64,
    points: usize,
    selected: usize,
    lambda_measured: f64,
    factor: f64,
    bound: f64,
    verified: bool,
    passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize, Deserialize, Clone)]
struct FamilyRowJson {
    seed: u64,
    rows: usize,
    kept: usize,
    diam_ratio: f64,
    diam_bound: f64,
    vol_ratio: f64,
    vol_bound: f64,
    transfer_ok: bool,
    volume_product_ok: Option<bool>,
    passed: bool,
    skipped_unbounded: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct SuiteAggregateJson {
    symmetric_max_factor_over_bound: f64,
    general_max_factor_over_bound: f64,
    family_max_diam_over_bound: f64,
    family_max_vol_over_bound: f64,
    passes: u64,
    failures: u64,
    skipped: u64,
}

#[derive(Serialize, Deserialize)]
struct SuiteReportJson {
    config: SuiteConfigJson,
    symmetric: Vec<SelectionRowJson>,
    general: Vec<SelectionRowJson>,
    families: Vec<FamilyRowJson>,
    aggregate: SuiteAggregateJson,
    all_bounds_hold: bool,
}

/// Tolerance on the certified factor against the closed-form bound:
/// covers float roundoff in the measured reflection constant only.
const SUITE_REL_TOL: f64 = 1e-3;

struct SuiteUnit {
    symmetric: SelectionRowJson,
    general: SelectionRowJson,
    family: FamilyRowJson,
}

fn cmd_suite(a: SuiteArgs) -> Result<bool> {
    if a.dim < 2 {
        bail!("suite requires dimension at least 2");
    }
    if a.dim > 6 {
        bail!("suite is sized for dimensions up to 6");
    }
    let points = a.points.unwrap_or(4 * a.dim);
    let family_rows = a.family_rows.unwrap_or(match a.dim {
        2 => 12,
        3 => 20,
        4 => 24,
        d => 6 * d,
    });
    let mode: SimplexMode = a.mode.into();

    let seeds: Vec<u64> = (0..a.count).map(|i| a.seed + i).collect();
    let units = run_units(&seeds, a.dim, points, family_rows, mode)?;

    let mut report = SuiteReportJson {
        config: SuiteConfigJson {
            dim: a.dim,
            count: a.count,
            seed: a.seed,
            mode: mode.to_string(),
            points,
            family_rows,
        },
        symmetric: units.iter().map(|u| u.symmetric.clone()).collect(),
        general: units.iter().map(|u| u.general.clone()).collect(),
        families: units.iter().map(|u| u.family.clone()).collect(),
        aggregate: SuiteAggregateJson {
            symmetric_max_factor_over_bound: 0.0,
            general_max_factor_over_bound: 0.0,
            family_max_diam_over_bound: 0.0,
            family_max_vol_over_bound: 0.0,
            passes: 0,
            failures: 0,
            skipped: 0,
        },
        all_bounds_hold: true,
    };

    let agg = &mut report.aggregate;
    for row in report.symmetric.iter() {
        agg.symmetric_max_factor_over_bound =
            agg.symmetric_max_factor_over_bound.max(row.factor / row.bound);
        if row.passed {
            agg.passes += 1;
        } else {
            agg.failures += 1;
        }
    }
    for row in report.general.iter() {
        agg.general_max_factor_over_bound =
            agg.general_max_factor_over_bound.max(row.factor / row.bound);
        if row.passed {
            agg.passes += 1;
        } else {
            agg.failures += 1;
        }
    }
    for row in report.families.iter() {
        if row.skipped_unbounded {
            agg.skipped += 1;
            continue;
        }
        agg.family_max_diam_over_bound = agg.family_max_diam_over_bound.max(row.diam_ratio);
        agg.family_max_vol_over_bound = agg.family_max_vol_over_bound.max(row.vol_ratio);
        if row.passed {
            agg.passes += 1;
        } else {
            agg.failures += 1;
        }
    }
    report.all_bounds_hold = report.aggregate.failures == 0;

    print_suite_table(&report);
    if let Some(path) = a.output.as_deref() {
        let text = io::to_json_string(&report)?;
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(report.all_bounds_hold)
}

fn run_units(
    seeds: &[u64],
    dim: usize,
    points: usize,
    family_rows: usize,
    mode: SimplexMode,
) -> Result<Vec<SuiteUnit>> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(seeds.len().max(1));
    let mut out: Vec<Option<SuiteUnit>> = Vec::new();
    out.resize_with(seeds.len(), || None);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<&mut Option<SuiteUnit>>> =
        out.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= seeds.len() {
                    break;
                }
                let unit = run_unit(seeds[i], dim, points, family_rows, mode);
                **slots[i].lock().unwrap() = Some(unit);
            });
        }
    });
    Ok(out.into_iter().map(|u| u.unwrap()).collect())
}

fn run_unit(seed: u64, dim: usize, points: usize, family_rows: usize, mode: SimplexMode) -> SuiteUnit {
    SuiteUnit {
        symmetric: selection_row(seed, dim, points, mode, true),
        general: selection_row(seed, dim, points, mode, false),
        family: family_row(seed, dim, family_rows, mode),
    }
}

fn selection_row(seed: u64, dim: usize, points: usize, mode: SimplexMode, symmetric: bool) -> SelectionRowJson {
    let mut row = SelectionRowJson {
        seed,
        points,
        selected: 0,
        lambda_measured: f64::NAN,
        factor: f64::NAN,
        bound: f64::NAN,
        verified: false,
        passed: false,
        error: None,
    };
    let kind = if symmetric {
        BodyKind::RandomSymmetricVpoly
    } else {
        BodyKind::RandomVpoly
    };
    let mut attempt = || -> Result<()> {
        let inst = corpus::generate(kind, dim, points, seed, 0)?;
        let q = inst.vrep.ok_or_else(|| anyhow!("generator produced no vertices"))?;
        let lambda = symmetric.then_some(1.0);
        let cert = select::sparse_approx(&q, mode, lambda)?;
        let report = select::verify_certificate(&q, &cert)?;
        row.selected = cert.qprime_indices.len();
        row.lambda_measured = cert.lambda_measured;
        row.factor = cert.factor;
        // Symmetric corpus: the reflection constant is 1, so the
        // certified factor must stay at 3d up to roundoff.  General
        // corpus: the bound is (lambda + 2)d with the measured lambda.
        row.bound = if symmetric {
            3.0 * dim as f64
        } else {
            (cert.lambda_used + 2.0) * dim as f64
        };
        row.verified = report.passed;
        row.passed = report.passed
            && row.selected <= 2 * dim
            && row.factor <= row.bound * (1.0 + SUITE_REL_TOL);
        Ok(())
    };
    if let Err(e) = attempt() {
        row.error = Some(format!("{e:#}"));
        row.passed = false;
    }
    row
}

fn family_row(seed: u64, dim: usize, rows: usize, mode: SimplexMode) -> FamilyRowJson {
    let mut row = FamilyRowJson {
        seed,
        rows,
        kept: 0,
        diam_ratio: f64::NAN,
        diam_bound: f64::NAN,
        vol_ratio: f64::NAN,
        vol_bound: f64::NAN,
        transfer_ok: false,
        volume_product_ok: None,
        passed: false,
        skipped_unbounded: false,
        error: None,
    };
    let attempt = |row: &mut FamilyRowJson| -> Result<()> {
        let inst = corpus::generate(BodyKind::TangentHalfspaces, dim, rows, seed, 0)?;
        let h = inst.hrep.ok_or_else(|| anyhow!("generator produced no halfspaces"))?;
        match helly::helly_subset(&h, mode) {
            Ok(report) => {
                row.kept = report.sigma.len();
                row.diam_ratio = report.diam_sigma / report.diam_bound;
                row.diam_bound = report.diam_bound;
                row.vol_ratio = report.vol_sigma / report.vol_bound;
                row.vol_bound = report.vol_bound;
                row.transfer_ok = report.containment_transfer_ok;
                row.volume_product_ok = report.santalo_ok;
                row.passed = row.kept <= 2 * dim
                    && row.diam_ratio <= 1.0 + SUITE_REL_TOL
                    && row.vol_ratio <= 1.0 + SUITE_REL_TOL
                    && row.transfer_ok
                    && row.volume_product_ok.unwrap_or(true);
                Ok(())
            }
            // An unbounded draw falls outside the theorem's
            // precondition; record the skip rather than failing.
            Err(sparsehull::Error::Unbounded) => {
                row.skipped_unbounded = true;
                Ok(())
            }
            Err(e) => Err(e.into()),
        }
    };
    if let Err(e) = attempt(&mut row) {
        row.error = Some(format!("{e:#}"));
        row.passed = false;
    }
    row
}

fn print_suite_table(r: &SuiteReportJson) {
    let c = &r.config;
    println!(
        "suite: dim {} | {} seeds from {} | mode {} | {} points | {} family rows",
        c.dim, c.count, c.seed, c.mode, c.points, c.family_rows
    );
    println!();
    println!("corpus     seed  selected  factor      bound      status");
    for (label, rows) in [("symmetric", &r.symmetric), ("general", &r.general)] {
        for row in rows.iter() {
            let status = match &row.error {
                Some(e) => format!("ERROR: {e}"),
                None if row.passed => "ok".into(),
                None => "BOUND VIOLATED".into(),
            };
            println!(
                "{label:<10} {:>4}  {:>8}  {:>9.5}  {:>9.5}  {status}",
                row.seed, row.selected, row.factor, row.bound
            );
        }
    }
    println!();
    println!("corpus     seed  kept  diam/bound  vol/bound   status");
    for row in r.families.iter() {
        let status = match &row.error {
            Some(e) => format!("ERROR: {e}"),
            None if row.skipped_unbounded => "skipped (unbounded draw)".into(),
            None if row.passed => "ok".into(),
            None => "BOUND VIOLATED".into(),
        };
        println!(
            "family     {:>4}  {:>4}  {:>10.6}  {:>9.3e}  {status}",
            row.seed, row.kept, row.diam_ratio, row.vol_ratio
        );
    }
    println!();
    let a = &r.aggregate;
    println!(
        "aggregate: factor/bound max {:.6} (symmetric) {:.6} (general); diam/bound max {:.6}; vol/bound max {:.3e}",
        a.symmetric_max_factor_over_bound,
        a.general_max_factor_over_bound,
        a.family_max_diam_over_bound,
        a.family_max_vol_over_bound
    );
    println!(
        "{} passed, {} failed, {} skipped -> {}",
        a.passes,
        a.failures,
        a.skipped,
        if r.all_bounds_hold { "all bounds hold" } else { "BOUNDS VIOLATED" }
    );
}
