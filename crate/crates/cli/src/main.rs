//! `htheta`: command line surface over the library. Every subcommand is
//! deterministic — identical arguments produce byte-identical stdout.
//!
//! Exit codes: 0 on success (including negative answers like a failed
//! verification), 2 when a precondition on the inputs is violated, 3 when
//! a search exhausted its budget without deciding, 1 for internal
//! consistency failures.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use hamming_theta::asym::region;
use hamming_theta::delsarte::{levenshtein_primal, plotkin_dual, theta_s_hamming};
use hamming_theta::exact::{format_rat, parse_rat, Rat, SpectrumPoly};
use hamming_theta::graphs::{
    closed_walk_count, find_homomorphism, independence_number, odd_girth, GraphSpec,
    HammingGraphSpec, HomSearch, ProductKind,
};
use hamming_theta::maps::{
    count_violating_pairs, distance_profile, identity_map, linear_map, majority_map,
    repetition_map, separation_map, verify_map, MapTable,
};
use hamming_theta::product_lp::{theta_s_product, DomainSets};
use hamming_theta::projective::{
    check_ab_condition, fano_config, find_bad_hyperplane, generator_matrix, hyperplane_stats,
    AbVariant, ProjectiveConfig,
};
use hamming_theta::{Error, Result};

#[derive(Parser)]
#[command(name = "htheta", version, about = "Exact LP bounds and map checkers on Hamming spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Homomorphic product of two complemented Hamming graphs.
    Hom,
    /// Strong product of a complemented with a plain Hamming graph.
    Strong,
}

impl KindArg {
    fn kind(self) -> ProductKind {
        match self {
            KindArg::Hom => ProductKind::Homomorphic,
            KindArg::Strong => ProductKind::Strong,
        }
    }

    fn label(self) -> &'static str {
        match self {
            KindArg::Hom => "hom",
            KindArg::Strong => "strong",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Map,
    Ltimes,
    Boxtimes,
}

impl VariantArg {
    fn variant(self) -> AbVariant {
        match self {
            VariantArg::Map => AbVariant::Map,
            VariantArg::Ltimes => AbVariant::Ltimes,
            VariantArg::Boxtimes => AbVariant::Boxtimes,
        }
    }

    fn label(self) -> &'static str {
        match self {
            VariantArg::Map => "map",
            VariantArg::Ltimes => "ltimes",
            VariantArg::Boxtimes => "boxtimes",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact optimum of the distance LP for codes avoiding distances 1..=d.
    Theta {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Also print the primal and dual spectra.
        #[arg(long)]
        certificates: bool,
    },
    /// Exact optimum of the bivariate LP for the chosen product of Hamming
    /// graphs on k and n coordinates with thresholds a and b.
    ThetaProduct {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum, default_value_t = KindArg::Hom)]
        kind: KindArg,
        /// Also print the primal and dual spectrum grids.
        #[arg(long)]
        certificates: bool,
    },
    /// Branch-and-bound independence number with witness. Without
    /// --product this is the Hamming graph on n coordinates with edges at
    /// distances 1..=d (complemented with --complement); with --product it
    /// is the canonical product built from --k/--a and --n/--b.
    Alpha(AlphaArgs),
    /// Search for an edge-preserving map from the complement graph on k
    /// coordinates (distances over a) to the one on n coordinates
    /// (distances over b).
    HomSearch {
        k: u32,
        a: u32,
        n: u32,
        b: u32,
        /// Node budget; exceeding it exits with status 3.
        #[arg(long, default_value_t = 200_000_000)]
        budget: u64,
    },
    /// Length of a shortest odd closed walk, if any.
    OddCycle {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        complement: bool,
    },
    /// Closed walks of length m at a fixed vertex of the complement graph
    /// (edges at distances over d), via spectral moments.
    Walks {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
    },
    /// Lower-bound and achievability curves over a beta grid, as CSV.
    Region {
        /// Output-to-input length ratio n/k; accepts "p/q" or a decimal.
        #[arg(long)]
        rho: String,
        /// Grid spacing; rows are at beta = step, 2*step, ... below 1.
        #[arg(long, default_value_t = 0.01)]
        beta_step: f64,
        #[arg(long)]
        beta_min: Option<f64>,
        #[arg(long)]
        beta_max: Option<f64>,
        /// Prefix the CSV with a '#' metadata header.
        #[arg(long)]
        meta: bool,
    },
    /// Map tables: construction and exact checking.
    Map {
        #[command(subcommand)]
        cmd: MapCmd,
    },
    /// Projective point configurations and their hyperplane conditions.
    Projective {
        #[command(subcommand)]
        cmd: ProjCmd,
    },
    /// Closed-form LP certificates: the degree-1 dual bound
    /// 2(d+1)/(2d+2-n) and the matching degree-(d+1) primal.
    LpCertify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        /// Also solve the LP exactly and report whether the dual bound is
        /// attained.
        #[arg(long)]
        theta: bool,
        /// Also print the certificate spectra.
        #[arg(long)]
        certificates: bool,
    },
}

#[derive(Args)]
struct AlphaArgs {
    #[arg(long)]
    n: u32,
    /// Edge distances 1..=d (plain graph form).
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    complement: bool,
    /// Product form to use instead of a single graph.
    #[arg(long, value_enum)]
    product: Option<KindArg>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    /// Node budget; an inexact result exits with status 3.
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionKind {
    Identity,
    Repetition,
    Majority,
    Separation,
    Linear,
}

#[derive(Args)]
struct MapNewArgs {
    #[arg(long, value_enum)]
    kind: ConstructionKind,
    /// Input length.
    #[arg(long)]
    k: u32,
    /// Output length (separation and linear kinds).
    #[arg(long)]
    n: Option<u32>,
    /// Copies of the input (repetition kind).
    #[arg(long)]
    rho: Option<u32>,
    /// Covering radius of the domain cells (separation kind).
    #[arg(long)]
    a_radius: Option<u32>,
    /// Required codebook separation (separation kind).
    #[arg(long)]
    b: Option<u32>,
    /// Comma-separated lowercase hex codewords (separation kind).
    #[arg(long, value_delimiter = ',')]
    codebook: Option<Vec<String>>,
    /// Comma-separated hex cover centers; greedy cover when absent.
    #[arg(long, value_delimiter = ',')]
    centers: Option<Vec<String>>,
    /// Comma-separated hex generator rows, row i = image of unit vector i
    /// (linear kind).
    #[arg(long, value_delimiter = ',')]
    rows: Option<Vec<String>>,
}

/// Distance thresholds given either as absolute integers or as fractions
/// of the respective length.
#[derive(Args)]
struct Thresholds {
    /// Input-side fraction "p/q"; alpha * k must be an integer.
    #[arg(long, conflicts_with = "a")]
    alpha: Option<String>,
    /// Input-side threshold as an absolute distance.
    #[arg(long)]
    a: Option<u32>,
    /// Output-side fraction "p/q"; beta * n must be an integer.
    #[arg(long, conflicts_with = "b")]
    beta: Option<String>,
    /// Output-side threshold as an absolute distance.
    #[arg(long)]
    b: Option<u32>,
}

impl Thresholds {
    fn resolve(&self, k: u32, n: u32) -> Result<(u32, u32)> {
        let a = resolve_threshold(&self.alpha, self.a, k, "alpha")?;
        let b = resolve_threshold(&self.beta, self.b, n, "beta")?;
        Ok((a, b))
    }
}

#[derive(Subcommand)]
enum MapCmd {
    /// Build a standard construction and print its JSON table.
    New(MapNewArgs),
    /// Check that input pairs farther than a land farther than b; prints
    /// OK or the first violating pair.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        thresholds: Thresholds,
    },
    /// Least image distance per input-distance threshold, as CSV.
    Profile {
        #[arg(long)]
        file: PathBuf,
    },
    /// Count input pairs violating the expansion property.
    Violations {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        thresholds: Thresholds,
        /// Restrict to pairs within this comma-separated hex point set.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<String>>,
    },
}

#[derive(Subcommand)]
enum ProjCmd {
    /// Per-hyperplane containment counts, as CSV.
    Stats {
        #[arg(long)]
        file: PathBuf,
    },
    /// Check the hyperplane condition for the given thresholds.
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Map)]
        variant: VariantArg,
        /// Search for a literally-bad hyperplane (many output points,
        /// few-or-all input points) instead of checking a variant.
        #[arg(long)]
        bad_hyperplane: bool,
    },
    /// The seven-point planar configuration.
    Fano {
        /// Also print the generator rows of its linear map, in hex.
        #[arg(long)]
        generator: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Theta { n, d, certificates } => run_theta(n, d, certificates),
        Cmd::ThetaProduct { k, a, n, b, kind, certificates } => {
            run_theta_product(k, a, n, b, kind, certificates)
        }
        Cmd::Alpha(args) => run_alpha(args),
        Cmd::HomSearch { k, a, n, b, budget } => run_hom_search(k, a, n, b, budget),
        Cmd::OddCycle { n, d, complement } => run_odd_cycle(n, d, complement),
        Cmd::Walks { n, d, m } => run_walks(n, d, m),
        Cmd::Region { rho, beta_step, beta_min, beta_max, meta } => {
            run_region(&rho, beta_step, beta_min, beta_max, meta)
        }
        Cmd::Map { cmd } => run_map(cmd),
        Cmd::Projective { cmd } => run_projective(cmd),
        Cmd::LpCertify { n, d, theta, certificates } => run_lp_certify(n, d, theta, certificates),
    }
}

/// 17 significant digits, scientific; enough to round-trip any f64.
fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn rat_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational fits a double approximation")
}

fn fmt_spectrum(p: &SpectrumPoly) -> String {
    p.coeffs().iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

fn fmt_rat_row(row: &[Rat]) -> String {
    row.iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

fn read_file(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_hex_list(items: &[String], what: &str) -> Result<Vec<u64>> {
    items
        .iter()
        .map(|h| {
            u64::from_str_radix(h, 16)
                .map_err(|_| Error::Parse(format!("bad hex {what} entry {h:?}")))
        })
        .collect()
}

fn resolve_threshold(frac: &Option<String>, raw: Option<u32>, len: u32, what: &str) -> Result<u32> {
    if let Some(v) = raw {
        return Ok(v);
    }
    let Some(s) = frac else {
        return Err(Error::Domain(format!(
            "give --{what} or --{}",
            &what[..1]
        )));
    };
    let r = parse_rat(s)?;
    let scaled = &r * Rat::from_integer(len.into());
    if !scaled.is_integer() {
        return Err(Error::Domain(format!(
            "{what} * {len} = {} is not an integer",
            format_rat(&scaled)
        )));
    }
    scaled
        .to_integer()
        .to_u32()
        .filter(|&v| v <= len)
        .ok_or_else(|| Error::Domain(format!("{what} must scale into 0..={len}, got {s}")))
}

fn run_theta(n: u32, d: u32, certificates: bool) -> Result<ExitCode> {
    let t = theta_s_hamming(n, d)?;
    println!("n: {n}");
    println!("d: {d}");
    println!("theta: {}", format_rat(&t.value));
    println!("theta_decimal: {}", fmt_f64(rat_f64(&t.value)));
    if certificates {
        println!("primal_spectrum: {}", fmt_spectrum(&t.primal));
        println!("dual_spectrum: {}", fmt_spectrum(&t.dual));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_theta_product(
    k: u32,
    a: u32,
    n: u32,
    b: u32,
    kind: KindArg,
    certificates: bool,
) -> Result<ExitCode> {
    let t = theta_s_product(k, a, n, b, kind.kind())?;
    println!("k: {k}");
    println!("a: {a}");
    println!("n: {n}");
    println!("b: {b}");
    println!("kind: {}", kind.label());
    println!("theta: {}", format_rat(&t.value));
    println!("theta_decimal: {}", fmt_f64(rat_f64(&t.value)));
    if certificates {
        for (i, row) in t.primal.coeffs().iter().enumerate() {
            println!("primal_spectrum {i}: {}", fmt_rat_row(row));
        }
        for (i, row) in t.dual.coeffs().iter().enumerate() {
            println!("dual_spectrum {i}: {}", fmt_rat_row(row));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_alpha(args: AlphaArgs) -> Result<ExitCode> {
    let spec = match args.product {
        None => {
            let d = args
                .d
                .ok_or_else(|| Error::Domain("--d is required without --product".into()))?;
            if args.k.is_some() || args.a.is_some() || args.b.is_some() {
                return Err(Error::Domain("--k/--a/--b apply only with --product".into()));
            }
            let h = if args.complement {
                HammingGraphSpec::new_complement(args.n, d)?
            } else {
                HammingGraphSpec::new(args.n, d)?
            };
            GraphSpec::Hamming(h)
        }
        Some(kind) => {
            if args.d.is_some() || args.complement {
                return Err(Error::Domain(
                    "--d/--complement apply only without --product".into(),
                ));
            }
            let (Some(k), Some(a), Some(b)) = (args.k, args.a, args.b) else {
                return Err(Error::Domain("--product needs --k, --a and --b".into()));
            };
            let domains = DomainSets::new(k, a, args.n, b, kind.kind())?;
            GraphSpec::Product(domains.product_spec()?)
        }
    };
    let res = independence_number(&spec, args.budget)?;
    println!("vertices: {}", spec.vertex_count());
    println!("alpha: {}", res.value);
    println!("exact: {}", res.exact);
    println!("nodes: {}", res.nodes);
    let witness: Vec<String> = res.witness.iter().map(|v| format!("{v:x}")).collect();
    println!("witness: {}", witness.join(" "));
    Ok(if res.exact { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn run_hom_search(k: u32, a: u32, n: u32, b: u32, budget: u64) -> Result<ExitCode> {
    let src = HammingGraphSpec::new_complement(k, a)?;
    let dst = HammingGraphSpec::new_complement(n, b)?;
    println!("k: {k}");
    println!("a: {a}");
    println!("n: {n}");
    println!("b: {b}");
    match find_homomorphism(&src, &dst, budget)? {
        HomSearch::Found(map) => {
            println!("result: found");
            println!("map: {}", map.to_json());
            Ok(ExitCode::SUCCESS)
        }
        HomSearch::Impossible => {
            println!("result: none");
            Ok(ExitCode::SUCCESS)
        }
        HomSearch::Undecided => {
            println!("result: undecided");
            Ok(ExitCode::from(3))
        }
    }
}

fn run_odd_cycle(n: u32, d: u32, complement: bool) -> Result<ExitCode> {
    let h = if complement {
        HammingGraphSpec::new_complement(n, d)?
    } else {
        HammingGraphSpec::new(n, d)?
    };
    println!("n: {n}");
    println!("d: {d}");
    println!("complement: {complement}");
    match odd_girth(&GraphSpec::Hamming(h))? {
        Some(g) => println!("odd_girth: {g}"),
        None => println!("odd_girth: none"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_walks(n: u32, d: u32, m: u32) -> Result<ExitCode> {
    let count = closed_walk_count(n, d, m)?;
    println!("n: {n}");
    println!("d: {d}");
    println!("m: {m}");
    println!("walks: {count}");
    Ok(ExitCode::SUCCESS)
}

fn parse_rho(s: &str) -> Result<f64> {
    if let Ok(r) = parse_rat(s) {
        return Ok(rat_f64(&r));
    }
    s.parse::<f64>()
        .map_err(|_| Error::Parse(format!("bad ratio {s:?}; use \"p/q\" or a decimal")))
}

fn run_region(
    rho_s: &str,
    step: f64,
    beta_min: Option<f64>,
    beta_max: Option<f64>,
    meta: bool,
) -> Result<ExitCode> {
    let rho = parse_rho(rho_s)?;
    if !(step.is_finite() && step > 0.0 && step < 1.0) {
        return Err(Error::Domain(format!("beta step {step} outside (0, 1)")));
    }
    let lo = beta_min.unwrap_or(step);
    let hi = beta_max.unwrap_or(f64::INFINITY);
    let mut grid = Vec::new();
    for i in 1.. {
        let beta = i as f64 * step;
        if beta >= 1.0 - 1e-12 || beta > hi + 1e-12 {
            break;
        }
        if beta >= lo - 1e-12 {
            grid.push(beta);
        }
    }
    if grid.is_empty() {
        return Err(Error::Domain("empty beta grid".into()));
    }
    let rows = region(rho, &grid)?;
    let extrapolated = grid[0] < 0.05;
    if meta {
        println!("# htheta {} rho={rho_s} beta-step={step}", env!("CARGO_PKG_VERSION"));
        if extrapolated {
            println!("# note: rows with small beta extrapolate curves whose guarantees need beta bounded away from 0");
        }
    }
    println!("beta,lb_ccb,lb_ccsam,lb_it,lb_tm3,ach_repetition,ach_majority,ach_separation");
    let cell = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
    for r in rows {
        println!(
            "{},{},{},{},{},{},{},{}",
            fmt_f64(r.beta),
            fmt_f64(r.lb_ccb),
            fmt_f64(r.lb_ccsam),
            fmt_f64(r.lb_it),
            cell(r.lb_tm3),
            cell(r.ach_repetition),
            cell(r.ach_majority),
            cell(r.ach_separation),
        );
    }
    if extrapolated {
        eprintln!("note: rows with small beta extrapolate curves whose guarantees need beta bounded away from 0");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_map(cmd: MapCmd) -> Result<ExitCode> {
    match cmd {
        MapCmd::New(args) => run_map_new(args),
        MapCmd::Verify { file, thresholds } => {
            let map = MapTable::from_json(&read_file(&file)?)?;
            let (a, b) = thresholds.resolve(map.k(), map.n())?;
            if verify_map(&map, a, b) {
                println!("OK");
            } else {
                let (x, y) = first_violating_pair(&map, a, b)
                    .expect("failed verification has a violating pair");
                println!(
                    "FAIL: inputs {x:x} and {y:x} at distance {} map to distance {}",
                    (x ^ y).count_ones(),
                    (map.image(x) ^ map.image(y)).count_ones()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        MapCmd::Profile { file } => {
            let map = MapTable::from_json(&read_file(&file)?)?;
            let profile = distance_profile(&map);
            println!("a,min_image_dist");
            for (a, least) in profile.min_image_dist.iter().enumerate() {
                match least {
                    Some(v) => println!("{a},{v}"),
                    None => println!("{a},"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        MapCmd::Violations { file, thresholds, subset } => {
            let map = MapTable::from_json(&read_file(&file)?)?;
            let (a, b) = thresholds.resolve(map.k(), map.n())?;
            let points = match &subset {
                Some(items) => Some(parse_hex_list(items, "subset")?),
                None => None,
            };
            if let Some(p) = &points {
                if let Some(bad) = p.iter().find(|&&x| x >= map.inputs()) {
                    return Err(Error::Domain(format!(
                        "subset point {bad:x} outside the {}-bit domain",
                        map.k()
                    )));
                }
            }
            let count = count_violating_pairs(&map, a, b, points.as_deref());
            println!("violating_pairs: {count}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn first_violating_pair(map: &MapTable, a: u32, b: u32) -> Option<(u64, u64)> {
    let size = map.inputs();
    for x in 0..size {
        for y in x + 1..size {
            if (x ^ y).count_ones() > a && (map.image(x) ^ map.image(y)).count_ones() <= b {
                return Some((x, y));
            }
        }
    }
    None
}

fn run_map_new(args: MapNewArgs) -> Result<ExitCode> {
    let need = |v: Option<u32>, flag: &str| {
        v.ok_or_else(|| Error::Domain(format!("this kind needs --{flag}")))
    };
    let map = match args.kind {
        ConstructionKind::Identity => identity_map(args.k)?,
        ConstructionKind::Repetition => repetition_map(args.k, need(args.rho, "rho")?)?,
        ConstructionKind::Majority => majority_map(args.k)?,
        ConstructionKind::Separation => {
            let codebook = args
                .codebook
                .as_deref()
                .ok_or_else(|| Error::Domain("this kind needs --codebook".into()))?;
            let codebook = parse_hex_list(codebook, "codebook")?;
            let centers = match &args.centers {
                Some(items) => Some(parse_hex_list(items, "centers")?),
                None => None,
            };
            separation_map(
                args.k,
                need(args.n, "n")?,
                need(args.a_radius, "a-radius")?,
                need(args.b, "b")?,
                &codebook,
                centers.as_deref(),
            )?
        }
        ConstructionKind::Linear => {
            let rows = args
                .rows
                .as_deref()
                .ok_or_else(|| Error::Domain("this kind needs --rows".into()))?;
            linear_map(args.k, need(args.n, "n")?, &parse_hex_list(rows, "rows")?)?
        }
    };
    println!("{}", map.to_json());
    Ok(ExitCode::SUCCESS)
}

fn run_projective(cmd: ProjCmd) -> Result<ExitCode> {
    match cmd {
        ProjCmd::Stats { file } => {
            let cfg = ProjectiveConfig::from_json(&read_file(&file)?)?;
            println!("hyperplane,z_u,z_v");
            for s in hyperplane_stats(&cfg)? {
                println!("{},{},{}", s.hyperplane, s.z_u, s.z_v);
            }
            Ok(ExitCode::SUCCESS)
        }
        ProjCmd::Check { file, a, b, variant, bad_hyperplane } => {
            let cfg = ProjectiveConfig::from_json(&read_file(&file)?)?;
            println!("m: {}", cfg.m);
            println!("k: {}", cfg.k());
            println!("n: {}", cfg.n());
            println!("a: {a}");
            println!("b: {b}");
            if bad_hyperplane {
                match find_bad_hyperplane(&cfg, a, b)? {
                    Some(s) => {
                        println!("bad_hyperplane: {}", s.hyperplane);
                        println!("z_u: {}", s.z_u);
                        println!("z_v: {}", s.z_v);
                    }
                    None => println!("bad_hyperplane: none"),
                }
                return Ok(ExitCode::SUCCESS);
            }
            let res = check_ab_condition(&cfg, a, b, variant.variant())?;
            println!("variant: {}", variant.label());
            println!("holds: {}", res.holds);
            if let Some(s) = res.witness {
                println!("witness_hyperplane: {}", s.hyperplane);
                println!("witness_z_u: {}", s.z_u);
                println!("witness_z_v: {}", s.z_v);
            }
            Ok(ExitCode::SUCCESS)
        }
        ProjCmd::Fano { generator } => {
            let cfg = fano_config();
            println!("{}", cfg.to_json());
            if generator {
                let rows: Vec<String> =
                    generator_matrix(&cfg)?.iter().map(|r| format!("{r:x}")).collect();
                println!("generator: {}", rows.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_lp_certify(n: u32, d: u32, theta: bool, certificates: bool) -> Result<ExitCode> {
    let (dual, bound) = plotkin_dual(n, d)?;
    println!("n: {n}");
    println!("d: {d}");
    println!("plotkin_bound: {}", format_rat(&bound));
    println!("plotkin_bound_decimal: {}", fmt_f64(rat_f64(&bound)));
    let primal = match levenshtein_primal(n, d) {
        Ok(lp) => {
            println!("levenshtein_feasible: {}", lp.feasible);
            println!("levenshtein_bound: {}", format_rat(&lp.bound));
            println!("levenshtein_bound_decimal: {}", fmt_f64(rat_f64(&lp.bound)));
            Some(lp)
        }
        Err(Error::Domain(msg)) => {
            println!("levenshtein: inapplicable ({msg})");
            None
        }
        Err(e) => return Err(e),
    };
    if theta {
        let t = theta_s_hamming(n, d)?;
        println!("theta: {}", format_rat(&t.value));
        println!("theta_decimal: {}", fmt_f64(rat_f64(&t.value)));
        println!("tight: {}", t.value == bound);
    }
    if certificates {
        println!("plotkin_dual_spectrum: {}", fmt_spectrum(&dual));
        if let Some(lp) = &primal {
            println!("levenshtein_primal_spectrum: {}", fmt_spectrum(&lp.spectrum));
        }
    }
    Ok(ExitCode::SUCCESS)
}
