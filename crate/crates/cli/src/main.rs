//! `crossnum`: exact crossing-number constructions, counts, bounds, and
//! Monte Carlo estimates for complete multipartite graphs.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity,
//! 2 on usage or input errors. Identical arguments and seed produce
//! byte-identical output (no timestamps are emitted).

use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crossnum_core::bounds_search::{
    counting_bound, flag_extrapolation, minimize_crossings, naive_density_bound,
};
use crossnum_core::constructions::{alternating_3line, convex_max, export_svg, two_line, SvgOptions};
use crossnum_core::exact_geom::{count_crossings, count_crossings_listing, RectilinearDrawing};
use crossnum_core::formulas::bound_table;
use crossnum_core::scalar::{format_ratio, parse_ratio, ratio_to_f64, ExactScalar};
use crossnum_core::spherical::{
    exact_expected_crossings, monte_carlo_s_with_workers, ratio_to_max,
};

mod verify;

#[derive(Parser)]
#[command(name = "crossnum", version, about = "Crossing numbers of complete multipartite graph drawings: exact counts, constructions, bounds, and spherical Monte Carlo")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every closed-form bound that applies to a part-size profile
    Formulas(FormulasArgs),
    /// Generate a drawing (JSON, optionally SVG)
    Draw(DrawArgs),
    /// Count the crossings of a drawing file
    Count(CountArgs),
    /// Monte Carlo estimate of the expected crossings of a random geodesic
    /// spherical drawing, with the exact values alongside
    Sphere(SphereArgs),
    /// Random-restart local search for low-crossing drawings
    Search(SearchArgs),
    /// Lower-bound arithmetic
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Run the identity and construction verification suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct FormulasArgs {
    /// Comma-separated part sizes, e.g. 5,5,5
    #[arg(long)]
    profile: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DrawKind {
    /// Alternating 3-line drawing (tripartite profiles)
    Alt3,
    /// Two perpendicular lines (bipartite profiles)
    Twoline,
    /// Convex position with consecutive partite blocks (balanced profiles)
    Convex,
}

#[derive(Args)]
struct DrawArgs {
    #[arg(long, value_enum)]
    kind: DrawKind,
    /// Comma-separated part sizes; arity must match the kind
    #[arg(long)]
    profile: String,
    /// Write the drawing JSON here (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
    /// Also render an SVG to this path
    #[arg(long)]
    svg: Option<String>,
    /// Skip crossing markers in the SVG
    #[arg(long)]
    no_markers: bool,
}

#[derive(Args)]
struct CountArgs {
    /// Drawing JSON file
    #[arg(long = "in")]
    input: String,
    /// Include the list of crossing edge pairs
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct SphereArgs {
    /// Number of partite sets
    #[arg(long)]
    r: u64,
    /// Size of each partite set
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    /// RNG seed (falls back to $CROSSNUM_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// Comma-separated part sizes (at most 12 vertices total)
    #[arg(long)]
    profile: String,
    #[arg(long, default_value_t = 50_000)]
    iters: u64,
    #[arg(long, default_value_t = 8)]
    restarts: u64,
    /// RNG seed (falls back to $CROSSNUM_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Write the best drawing JSON here
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// Finite-n counting lower bound for cr(K_{n,n,n})
    Counting(CountingArgs),
    /// Asymptotic coefficient 6c/35 implied by an average 7-point crossing
    /// count c
    Flag(FlagArgs),
    /// Naive density coefficient 6*min_c/35 from the minimum 7-point
    /// crossing count
    Naive(NaiveArgs),
}

#[derive(Args)]
struct CountingArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FlagArgs {
    /// Average crossing count over 7-point sub-drawings, in [0, 35];
    /// decimals are parsed exactly (e.g. 5.6767)
    #[arg(long)]
    c: String,
}

#[derive(Args)]
struct NaiveArgs {
    /// Minimum crossing count over 7-point sub-drawings, in [0, 35]
    #[arg(long)]
    min_c: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Smaller ranges; a few seconds instead of a minute
    #[arg(long)]
    quick: bool,
    /// RNG seed for the stochastic checks (falls back to $CROSSNUM_SEED,
    /// then 0)
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Formulas(args) => cmd_formulas(args)?,
        Command::Draw(args) => cmd_draw(args)?,
        Command::Count(args) => cmd_count(args)?,
        Command::Sphere(args) => cmd_sphere(args)?,
        Command::Search(args) => cmd_search(args)?,
        Command::Bound(args) => cmd_bound(args)?,
        Command::Verify(args) => return cmd_verify(args),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_profile(s: &str) -> Result<Vec<u64>> {
    let sizes: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().with_context(|| format!("bad part size `{t}`")))
        .collect::<Result<_>>()?;
    if sizes.len() < 2 {
        bail!("a profile needs at least 2 parts, got `{s}`");
    }
    if sizes.iter().any(|&v| v == 0) {
        bail!("part sizes must be positive, got `{s}`");
    }
    Ok(sizes)
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("CROSSNUM_SEED") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .with_context(|| format!("CROSSNUM_SEED is not a valid seed: `{v}`")),
        Err(_) => Ok(0),
    }
}

/// Rational rendered exactly, with a decimal approximation when it is not an
/// integer.
fn pretty_ratio(x: &ExactScalar) -> String {
    if x.denom() == &num_bigint::BigInt::from(1) {
        format_ratio(x)
    } else {
        format!("{} (~{:.6})", format_ratio(x), ratio_to_f64(x))
    }
}

fn cmd_formulas(args: FormulasArgs) -> Result<()> {
    let sizes = parse_profile(&args.profile)?;
    let table = bound_table(&sizes);
    if table.entries.is_empty() {
        bail!(
            "no closed forms apply to profile {:?} (supported: bipartite, tripartite, balanced)",
            sizes
        );
    }
    match args.format {
        Format::Text => {
            println!("profile: {}", args.profile.trim());
            for (name, value) in &table.entries {
                println!("{name:>8}  {}", pretty_ratio(value));
            }
        }
        Format::Csv => {
            println!("quantity,value");
            for (name, value) in &table.entries {
                println!("{name},{}", format_ratio(value));
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("schema".into(), 1u32.into());
            map.insert(
                "profile".into(),
                serde_json::Value::from(table.parameters.clone()),
            );
            let mut entries = serde_json::Map::new();
            for (name, value) in &table.entries {
                entries.insert((*name).into(), format_ratio(value).into());
            }
            map.insert("entries".into(), entries.into());
            println!("{}", serde_json::to_string_pretty(&map)?);
        }
    }
    Ok(())
}

fn cmd_draw(args: DrawArgs) -> Result<()> {
    let sizes = parse_profile(&args.profile)?;
    let drawing = match args.kind {
        DrawKind::Alt3 => {
            if sizes.len() != 3 {
                bail!("--kind alt3 needs exactly 3 part sizes, got {:?}", sizes);
            }
            alternating_3line(sizes[0] as usize, sizes[1] as usize, sizes[2] as usize)
        }
        DrawKind::Twoline => {
            if sizes.len() != 2 {
                bail!("--kind twoline needs exactly 2 part sizes, got {:?}", sizes);
            }
            two_line(sizes[0] as usize, sizes[1] as usize)
        }
        DrawKind::Convex => {
            if sizes.iter().any(|&s| s != sizes[0]) {
                bail!("--kind convex needs a balanced profile, got {:?}", sizes);
            }
            let (r, n) = (sizes.len(), sizes[0] as usize);
            if r * n < 3 {
                bail!("--kind convex needs at least 3 vertices");
            }
            convex_max(r, n)
        }
    };
    let json = drawing.to_json_string();
    match &args.out {
        Some(path) => fs::write(path, json).with_context(|| format!("writing {path}"))?,
        None => println!("{json}"),
    }
    if let Some(path) = &args.svg {
        let svg = export_svg(
            &drawing,
            &SvgOptions {
                mark_crossings: !args.no_markers,
                ..SvgOptions::default()
            },
        );
        fs::write(path, svg).with_context(|| format!("writing {path}"))?;
    }
    Ok(())
}

fn cmd_count(args: CountArgs) -> Result<()> {
    let text = fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input))?;
    let drawing = RectilinearDrawing::from_json_str(&text)?;
    let report = if args.list {
        count_crossings_listing(&drawing)?
    } else {
        count_crossings(&drawing)?
    };
    let mut value = serde_json::to_value(&report)?;
    value
        .as_object_mut()
        .expect("report serializes to an object")
        .insert("schema".into(), 1u32.into());
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(())
}

fn cmd_sphere(args: SphereArgs) -> Result<()> {
    if args.r < 2 || args.n < 1 {
        bail!("need --r >= 2 and --n >= 1");
    }
    if args.trials < 1 || args.workers < 1 {
        bail!("need --trials >= 1 and --workers >= 1");
    }
    let seed = resolve_seed(args.seed)?;
    let est = monte_carlo_s_with_workers(
        args.r as usize,
        args.n as usize,
        args.trials,
        seed,
        args.workers,
    );
    let exact = exact_expected_crossings(args.r, args.n);
    let ratio = match ratio_to_max(args.r, args.n) {
        Ok(v) => format_ratio(&v),
        Err(_) => "NA".to_string(),
    };
    let zeta = crossnum_core::formulas::zeta(args.r);
    println!("r,n,trials,mean,std_error,exact,ratio,zeta");
    println!(
        "{},{},{},{},{},{},{},{}",
        args.r,
        args.n,
        est.trials,
        est.mean,
        est.std_error,
        format_ratio(&exact),
        ratio,
        format_ratio(&zeta)
    );
    Ok(())
}

fn cmd_search(args: SearchArgs) -> Result<()> {
    let sizes = parse_profile(&args.profile)?;
    let total: u64 = sizes.iter().sum();
    if total > 12 {
        bail!("search handles at most 12 vertices, profile {:?} has {total}", sizes);
    }
    if args.iters < 1 || args.restarts < 1 {
        bail!("need --iters >= 1 and --restarts >= 1");
    }
    let seed = resolve_seed(args.seed)?;
    let part_sizes: Vec<usize> = sizes.iter().map(|&v| v as usize).collect();
    let result = minimize_crossings(&part_sizes, args.iters, args.restarts, seed);
    if let Some(path) = &args.out {
        fs::write(path, result.best_drawing.to_json_string())
            .with_context(|| format!("writing {path}"))?;
    }
    let summary = serde_json::json!({
        "schema": 1,
        "profile": sizes,
        "best_count": result.best_count,
        "iterations": result.iterations,
        "seed": result.seed,
        "degenerate_retries": result.degenerate_retries,
        "history": result.history,
    });
    println!("{}", serde_json::to_string_pretty(&summary)?);
    Ok(())
}

fn cmd_bound(cmd: BoundCommand) -> Result<()> {
    match cmd {
        BoundCommand::Counting(args) => {
            if args.n < 3 {
                bail!("counting bound needs --n >= 3");
            }
            let cb = counting_bound(args.n);
            match args.format {
                Format::Text => {
                    println!("n:            {}", cb.n);
                    println!("total_weight: {}", pretty_ratio(&cb.total_weight));
                    println!("mult_22:      {}", pretty_ratio(&cb.mult_22));
                    println!("mult_211:     {}", pretty_ratio(&cb.mult_211));
                    println!("bound:        {}", pretty_ratio(&cb.bound));
                    println!("ratio_to_A:   {}", pretty_ratio(&cb.ratio_to_a));
                }
                Format::Csv => {
                    println!("n,total_weight,mult_22,mult_211,bound,ratio_to_A");
                    println!(
                        "{},{},{},{},{},{}",
                        cb.n,
                        format_ratio(&cb.total_weight),
                        format_ratio(&cb.mult_22),
                        format_ratio(&cb.mult_211),
                        format_ratio(&cb.bound),
                        format_ratio(&cb.ratio_to_a)
                    );
                }
                Format::Json => {
                    let summary = serde_json::json!({
                        "schema": 1,
                        "n": cb.n,
                        "total_weight": format_ratio(&cb.total_weight),
                        "mult_22": format_ratio(&cb.mult_22),
                        "mult_211": format_ratio(&cb.mult_211),
                        "bound": format_ratio(&cb.bound),
                        "ratio_to_A": format_ratio(&cb.ratio_to_a),
                        "ratio_to_A_approx": ratio_to_f64(&cb.ratio_to_a),
                    });
                    println!("{}", serde_json::to_string_pretty(&summary)?);
                }
            }
        }
        BoundCommand::Flag(args) => {
            let c = parse_ratio(&args.c).map_err(|e| anyhow::anyhow!("bad --c: {e}"))?;
            if c < ExactScalar::new(0.into(), 1.into()) || c > ExactScalar::new(35.into(), 1.into())
            {
                bail!("--c must lie in [0, 35], got {}", args.c);
            }
            let coeff = flag_extrapolation(&c);
            println!("coefficient 6c/35 = {}", pretty_ratio(&coeff));
        }
        BoundCommand::Naive(args) => {
            if args.min_c > 35 {
                bail!("--min-c must lie in [0, 35], got {}", args.min_c);
            }
            let coeff = naive_density_bound(args.min_c);
            println!("coefficient 6*min_c/35 = {}", pretty_ratio(&coeff));
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let seed = resolve_seed(args.seed)?;
    let failures = verify::run_suite(args.quick, seed);
    if failures == 0 {
        println!("verify: all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verify: {failures} check(s) FAILED");
        Ok(ExitCode::from(1))
    }
}
