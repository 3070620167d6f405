//! Command-line front end for the curvelab library.
//!
//! Subcommands:
//!
//! - `curve analyze` — implicit equation, singular locus, and double-point
//!   classification of a parametrized preset or an explicit plane curve;
//! - `resolve` — blow-up tree of a curve germ, with optional DOT output of
//!   the dual graph;
//! - `lct` — log canonical threshold of a plane germ, optionally with the
//!   cone-construction divisor ledger for a chosen surface degree;
//! - `verdict` — characteristic-zero lifting verdict for an even-index
//!   double point;
//! - `surface census` — singular points and exceptional totals of the
//!   supersingular double planes;
//! - `lattice pullback` / `lattice contract` — Mumford intersection numbers
//!   on chains or on lattices read from a text file;
//! - `verify` — recompute every tracked quantity and compare it with the
//!   checked-in expectations manifest.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use curvelab::curve::{
    c_q, c_q2, implicitize, singular_points, ParamCurve, ProjPlaneCurve, DEFAULT_K_MAX,
};
use curvelab::field::Field;
use curvelab::invariants::{lct_plane_germ, lct_xg, lifting_verdict, xg_ledger, Verdict};
use curvelab::poly::MultiPoly;
use curvelab::resolve::{
    classify, dual_graph, resolution_tree, CurveGerm, GermKind, ResolveMode,
};
use curvelab::surfaces::lattice::{
    contraction_check, mumford_pullback, BarCurve, IntersectionLattice,
};
use curvelab::surfaces::{exceptional_count, jacobian_census, DoublePlane};
use curvelab::verify::{parse_manifest, run_verification, VerifyConfig, DEFAULT_MANIFEST};

#[derive(Parser)]
#[command(
    name = "curvelab",
    version,
    about = "Exact-arithmetic toolkit for plane curves over small finite fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Plane-curve analysis.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Blow-up resolution of a curve germ.
    Resolve(ResolveArgs),
    /// Log canonical threshold of a plane-curve germ.
    Lct(LctArgs),
    /// Characteristic-zero lifting verdict for an even-index double point.
    Verdict(VerdictArgs),
    /// Double-plane surface computations.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Intersection-lattice computations.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Recompute every tracked quantity and compare with the manifest.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Implicitize, find the singular locus, and classify each point.
    Analyze(AnalyzeArgs),
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Singular points of the double plane with the given index.
    Census(CensusArgs),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Mumford pullback of curves attached to an exceptional configuration.
    Pullback(PullbackArgs),
    /// Contract all but the kept curves; report cluster types and numbers.
    Contract(ContractArgs),
}

/// Selection of a built-in curve family member.
#[derive(Args, Clone)]
struct PresetOpt {
    /// Built-in family: `cq2` (degree 2^n+2) or `cq` (degree 2^n).
    #[arg(long)]
    preset: Option<String>,
    /// Family index n.
    #[arg(long)]
    n: Option<u32>,
}

impl PresetOpt {
    fn build(&self) -> Result<Option<(String, ParamCurve)>, String> {
        match (&self.preset, self.n) {
            (Some(name), Some(n)) => {
                let curve = match name.as_str() {
                    "cq2" => c_q2(n),
                    "cq" => c_q(n),
                    other => return Err(format!("unknown preset `{other}` (try cq2 or cq)")),
                }
                .map_err(|e| e.to_string())?;
                Ok(Some((format!("{name} n={n}"), curve)))
            }
            (Some(_), None) => Err("--preset needs --n".into()),
            (None, Some(_)) => Err("--n needs --preset".into()),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    preset: PresetOpt,
    /// Explicit homogeneous equation in x, y, z (alternative to --preset).
    #[arg(long)]
    equation: Option<String>,
    /// Coefficient characteristic for --equation; 0 means the rationals.
    #[arg(long)]
    p: Option<u64>,
    /// Extension degree for --equation (field F_{p^k}).
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Largest extension degree searched for singular points.
    #[arg(long, default_value_t = DEFAULT_K_MAX)]
    kmax: u32,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ResolveArgs {
    #[command(flatten)]
    preset: PresetOpt,
    /// Local germ equation in x, z (alternative to --preset).
    #[arg(long)]
    germ: Option<String>,
    /// Coefficient characteristic for --germ; 0 means the rationals.
    #[arg(long)]
    p: Option<u64>,
    /// Extension degree for --germ (field F_{p^k}).
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Stop at the normalization or continue to an embedded resolution.
    #[arg(long, default_value = "normalization")]
    mode: String,
    /// Truncation order for non-polynomial input handling.
    #[arg(long)]
    precision: Option<u64>,
    /// Write the dual graph in DOT format to this path.
    #[arg(long)]
    dot: Option<String>,
}

#[derive(Args)]
struct LctArgs {
    /// Local germ equation in x, z.
    #[arg(long)]
    germ: String,
    /// Coefficient characteristic; 0 means the rationals.
    #[arg(long, default_value_t = 0)]
    p: u64,
    /// Extension degree (field F_{p^k}).
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Also print the cone-construction ledger for this surface degree.
    #[arg(long)]
    degree: Option<u64>,
}

#[derive(Args)]
struct VerdictArgs {
    #[command(flatten)]
    preset: PresetOpt,
    /// Curve degree (alternative to --preset, together with --m).
    #[arg(long)]
    degree: Option<u64>,
    /// Double-point index m (must be even).
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Args)]
struct CensusArgs {
    /// Double-plane index r (branch curve degree 4r+2).
    #[arg(long)]
    r: u64,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PullbackArgs {
    /// Chain configuration, e.g. `A15` for fifteen (-2)-curves in a row.
    #[arg(long)]
    chain: Option<String>,
    /// Lattice description file (`name self-int` / `name name mult` lines).
    #[arg(long)]
    file: Option<String>,
    /// Comma-separated 1-based chain positions the curves pass through.
    #[arg(long)]
    attach: String,
    /// Self-intersection of each attached curve on the smooth model.
    #[arg(long, default_value = "-2", allow_hyphen_values = true)]
    self_int: String,
}

#[derive(Args)]
struct ContractArgs {
    /// Chain configuration, e.g. `A15`.
    #[arg(long)]
    chain: Option<String>,
    /// Lattice description file (`name self-int` / `name name mult` lines).
    #[arg(long)]
    file: Option<String>,
    /// Comma-separated names of the curves to keep.
    #[arg(long)]
    keep: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest curve-family index to evaluate.
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    /// Largest double-plane index to evaluate.
    #[arg(long, default_value_t = 4)]
    r_max: u64,
    /// Expectations file; defaults to the manifest built into the binary.
    #[arg(long)]
    manifest: Option<String>,
    /// Emit the report as JSON (deterministic; runtimes omitted).
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("curvelab: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Curve(CurveCmd::Analyze(args)) => cmd_analyze(args),
        Cmd::Resolve(args) => cmd_resolve(args),
        Cmd::Lct(args) => cmd_lct(args),
        Cmd::Verdict(args) => cmd_verdict(args),
        Cmd::Surface(SurfaceCmd::Census(args)) => cmd_census(args),
        Cmd::Lattice(LatticeCmd::Pullback(args)) => cmd_pullback(args),
        Cmd::Lattice(LatticeCmd::Contract(args)) => cmd_contract(args),
        Cmd::Verify(args) => cmd_verify(args),
    }
}

fn coefficient_field(p: u64, k: u32) -> Result<Field, String> {
    if p == 0 {
        if k != 1 {
            return Err("--k only applies to finite fields".into());
        }
        Ok(Field::rationals())
    } else {
        Field::finite(p, k).map_err(|e| e.to_string())
    }
}

fn kind_label(kind: &GermKind, m: u64) -> String {
    match kind {
        GermKind::Am => format!("A_{m}"),
        GermKind::Dm => "D-type".into(),
        GermKind::Other => "unclassified".into(),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, String> {
    let curve: ProjPlaneCurve = if let Some((_, param)) = args.preset.build()? {
        implicitize(&param).map_err(|e| e.to_string())?.curve
    } else if let Some(text) = &args.equation {
        let p = args.p.ok_or("--equation needs --p (0 for the rationals)")?;
        let field = coefficient_field(p, args.k)?;
        let form =
            MultiPoly::parse(&field, &["x", "y", "z"], text).map_err(|e| e.to_string())?;
        ProjPlaneCurve::new(form).map_err(|e| e.to_string())?
    } else {
        return Err("pick a curve: --preset cq2 --n 2, or --equation with --p".into());
    };
    let locus = singular_points(&curve, args.kmax).map_err(|e| e.to_string())?;
    let certified = locus.certificate.complete && locus.certificate.cross_chart_consistent;

    let mut point_reports = Vec::new();
    for pt in &locus.points {
        let germ = CurveGerm::from_curve_point(&curve, pt).map_err(|e| e.to_string())?;
        let cls = classify(&germ).map_err(|e| e.to_string())?;
        let embedded =
            resolution_tree(&germ, ResolveMode::Embedded).map_err(|e| e.to_string())?;
        let lct = lct_plane_germ(&embedded).map_err(|e| e.to_string())?;
        point_reports.push((pt.display(), pt.multiplicity(), cls, lct.value));
    }

    if args.json {
        let points: Vec<Value> = point_reports
            .iter()
            .map(|(display, mult, cls, lct)| {
                json!({
                    "branches": cls.branches,
                    "delta": cls.delta,
                    "lct": lct.to_string(),
                    "multiplicity": mult,
                    "point": display,
                    "type": kind_label(&cls.kind, cls.m),
                })
            })
            .collect();
        let report = json!({
            "certified": certified,
            "degree": curve.degree(),
            "equation": curve.form().to_string(),
            "field": curve.field().to_string(),
            "points": points,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        );
    } else {
        println!("degree    {}", curve.degree());
        println!("equation  {} = 0  over {}", curve.form(), curve.field());
        println!(
            "singular points ({}; search certified: {})",
            locus.points.len(),
            certified
        );
        for (display, mult, cls, lct) in &point_reports {
            println!(
                "  {display}  multiplicity {mult}  {}  delta {}  branches {}  lct {lct}",
                kind_label(&cls.kind, cls.m),
                cls.delta,
                cls.branches
            );
            if let Some(form) = &cls.char2_normal_form {
                if let (Some(a), Some(b)) = (form.ord_a, form.ord_b) {
                    println!("    reduced form z^2 + z*x^{a} + (unit)*x^{b}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn germ_from_args(
    preset: &PresetOpt,
    germ: &Option<String>,
    p: Option<u64>,
    k: u32,
    precision: Option<u64>,
) -> Result<(String, CurveGerm), String> {
    if let Some((label, param)) = preset.build()? {
        let done = implicitize(&param).map_err(|e| e.to_string())?;
        let locus = singular_points(&done.curve, DEFAULT_K_MAX).map_err(|e| e.to_string())?;
        let pt = locus
            .points
            .first()
            .ok_or("the preset curve has no singular point")?;
        let germ =
            CurveGerm::from_curve_point(&done.curve, pt).map_err(|e| e.to_string())?;
        Ok((format!("{label} at {}", pt.display()), germ))
    } else if let Some(text) = germ {
        let p = p.ok_or("--germ needs --p (0 for the rationals)")?;
        let field = coefficient_field(p, k)?;
        let poly = MultiPoly::parse(&field, &["x", "z"], text).map_err(|e| e.to_string())?;
        let germ = CurveGerm::new(&poly, precision).map_err(|e| e.to_string())?;
        Ok((text.clone(), germ))
    } else {
        Err("pick a germ: --preset cq2 --n 2, or --germ with --p".into())
    }
}

fn cmd_resolve(args: ResolveArgs) -> Result<ExitCode, String> {
    let mode = match args.mode.as_str() {
        "normalization" => ResolveMode::Normalization,
        "embedded" => ResolveMode::Embedded,
        other => return Err(format!("unknown mode `{other}` (normalization or embedded)")),
    };
    if args.dot.is_some() && mode != ResolveMode::Embedded {
        return Err("the dual graph is defined for --mode embedded".into());
    }
    let (label, germ) =
        germ_from_args(&args.preset, &args.germ, args.p, args.k, args.precision)?;
    let tree = resolution_tree(&germ, mode).map_err(|e| e.to_string())?;
    println!("germ      {label}");
    println!("mode      {}", args.mode);
    println!("blow-ups  {}", tree.nodes().len());
    println!(
        "multiplicities  {}",
        tree.multiplicities()
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!("delta     {}", tree.delta());
    print!("{}", tree.to_ascii());
    if let Some(path) = &args.dot {
        let graph = dual_graph(&tree).map_err(|e| e.to_string())?;
        fs::write(path, graph.to_dot()).map_err(|e| format!("writing {path}: {e}"))?;
        println!("dual graph written to {path}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lct(args: LctArgs) -> Result<ExitCode, String> {
    let field = coefficient_field(args.p, args.k)?;
    let poly =
        MultiPoly::parse(&field, &["x", "z"], &args.germ).map_err(|e| e.to_string())?;
    let germ = CurveGerm::new(&poly, None).map_err(|e| e.to_string())?;
    let embedded = resolution_tree(&germ, ResolveMode::Embedded).map_err(|e| e.to_string())?;
    let lct = lct_plane_germ(&embedded).map_err(|e| e.to_string())?;
    println!("lct = {}", lct.value);
    if let Some(degree) = args.degree {
        let tree = resolution_tree(&germ, ResolveMode::Normalization)
            .map_err(|e| e.to_string())?;
        let ledger = xg_ledger(degree, &tree).map_err(|e| e.to_string())?;
        let min = lct_xg(&ledger);
        println!("cone ledger for surface degree {degree}:");
        for entry in &ledger {
            println!(
                "  entry {:>2}: a = {:>4}, k = {:>3}, candidate (k+1)/a = {}",
                entry.id, entry.a, entry.k, entry.lct_candidate
            );
        }
        println!("ledger min = {} at entry {}", min.value, min.argmin);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verdict(args: VerdictArgs) -> Result<ExitCode, String> {
    let (label, degree, m) = if let Some((label, param)) = args.preset.build()? {
        let done = implicitize(&param).map_err(|e| e.to_string())?;
        let locus = singular_points(&done.curve, DEFAULT_K_MAX).map_err(|e| e.to_string())?;
        let pt = locus
            .points
            .first()
            .ok_or("the preset curve has no singular point")?;
        let germ =
            CurveGerm::from_curve_point(&done.curve, pt).map_err(|e| e.to_string())?;
        let cls = classify(&germ).map_err(|e| e.to_string())?;
        (label, done.curve.degree(), cls.m)
    } else if let (Some(degree), Some(m)) = (args.degree, args.m) {
        (format!("degree-{degree} curve"), degree, m)
    } else {
        return Err("pick a curve: --preset cq2 --n 3, or --degree with --m".into());
    };
    let verdict = lifting_verdict(&label, degree, m).map_err(|e| e.to_string())?;
    println!("curve     {label}: degree {degree}, A_{m}");
    println!(
        "needed    index {} in characteristic zero; ceiling for degree {} is {}",
        m - 1,
        degree,
        verdict.char0_max
    );
    let word = match verdict.verdict {
        Verdict::Obstructed => "obstructed",
        Verdict::NotObstructed => "not-obstructed",
    };
    println!("verdict   {word}");
    println!("reason    {}", verdict.reason);
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(args: CensusArgs) -> Result<ExitCode, String> {
    let plane = DoublePlane::new(args.r).map_err(|e| e.to_string())?;
    let census = jacobian_census(&plane).map_err(|e| e.to_string())?;
    let totals = exceptional_count(&plane).ok();
    if args.json {
        let entries: Vec<Value> = census
            .entries
            .iter()
            .map(|e| {
                json!({
                    "count": e.count,
                    "field": e.field,
                    "index": e.type_index,
                    "location": e.location,
                })
            })
            .collect();
        let mut report = json!({
            "entries": entries,
            "exceptional": census.total_exceptional,
            "picard_lower_bound": census.picard_lower_bound,
            "r": census.r,
        });
        if let Some(t) = &totals {
            report["betti2"] = json!(t.betti2);
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
        );
    } else {
        println!(
            "double plane S_{}: branch curve degree {}",
            census.r,
            4 * census.r + 2
        );
        for e in &census.entries {
            println!(
                "  {:<10} {:>3} point(s) of type A_{:<4} over {}",
                e.location, e.count, e.type_index, e.field
            );
        }
        println!("exceptional curves   {}", census.total_exceptional);
        println!("picard lower bound   {}", census.picard_lower_bound);
        if let Some(t) = &totals {
            println!("second betti number  {}", t.betti2);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_exact_rational(text: &str) -> Result<BigRational, String> {
    let make = |num: &str, den: &str| -> Result<BigRational, String> {
        let n: BigInt = num.parse().map_err(|_| format!("bad number `{num}`"))?;
        let d: BigInt = den.parse().map_err(|_| format!("bad number `{den}`"))?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(n, d))
    };
    match text.split_once('/') {
        Some((n, d)) => make(n, d),
        None => make(text, "1"),
    }
}

fn lattice_from_args(
    chain: &Option<String>,
    file: &Option<String>,
) -> Result<IntersectionLattice, String> {
    match (chain, file) {
        (Some(label), None) => {
            let n: usize = label
                .strip_prefix('A')
                .and_then(|digits| digits.parse().ok())
                .ok_or_else(|| format!("bad chain `{label}` (expected A<n>, e.g. A15)"))?;
            if n == 0 {
                return Err("chains need at least one vertex".into());
            }
            Ok(IntersectionLattice::a_chain(n))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
            IntersectionLattice::parse(&text).map_err(|e| e.to_string())
        }
        (Some(_), Some(_)) => Err("pick one of --chain and --file".into()),
        (None, None) => Err("pick a lattice: --chain A15 or --file PATH".into()),
    }
}

fn cmd_pullback(args: PullbackArgs) -> Result<ExitCode, String> {
    let lattice = lattice_from_args(&args.chain, &args.file)?;
    let self_int = parse_exact_rational(&args.self_int)?;
    let mut curves = Vec::new();
    for (i, token) in args.attach.split(',').enumerate() {
        let position: usize = token
            .trim()
            .parse()
            .map_err(|_| format!("bad attach position `{token}`"))?;
        if position == 0 || position > lattice.len() {
            return Err(format!(
                "attach position {position} is outside the {}-vertex lattice",
                lattice.len()
            ));
        }
        curves.push(BarCurve {
            name: format!("B{}", i + 1),
            self_int: self_int.clone(),
            attached: vec![lattice.name(position - 1).to_string()],
        });
    }
    if curves.is_empty() {
        return Err("--attach needs at least one position".into());
    }
    let report = mumford_pullback(&lattice, &curves, &[]).map_err(|e| e.to_string())?;
    for (i, curve) in curves.iter().enumerate() {
        for (j, other) in curves.iter().enumerate().skip(i) {
            println!(
                "({} . {}) = {}",
                curve.name, other.name, report.intersections[i][j]
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_contract(args: ContractArgs) -> Result<ExitCode, String> {
    let lattice = lattice_from_args(&args.chain, &args.file)?;
    let keep: Vec<&str> = args
        .keep
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .collect();
    if keep.is_empty() {
        return Err("--keep needs at least one curve name".into());
    }
    let report = contraction_check(&lattice, &keep).map_err(|e| e.to_string())?;
    println!("contracted clusters  {}", report.summary());
    for (i, name) in report.kept.iter().enumerate() {
        for (j, other) in report.kept.iter().enumerate().skip(i) {
            println!("({name}' . {other}') = {}", report.intersections[i][j]);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.n_max < 1 || args.r_max < 1 {
        return Err("--n-max and --r-max must be at least 1".into());
    }
    let text = match &args.manifest {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
        }
        None => DEFAULT_MANIFEST.to_string(),
    };
    let manifest = parse_manifest(&text).map_err(|e| e.to_string())?;
    let cfg = VerifyConfig {
        n_max: args.n_max,
        r_max: args.r_max,
    };
    let report = run_verification(&manifest, &cfg);
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
