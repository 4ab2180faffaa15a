//! `blend`: command-line front end for the blends library.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 2 malformed spec or points, 3 I/O failure.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use blends::analysis::{binomial_overflows, lebesgue};
use blends::calculus::quadrature_weights;
use blends::generators;
use blends::io;
use blends::Blend;
use blends::BlendString;
use num_traits::ToPrimitive;

#[derive(Parser)]
#[command(
    name = "blend",
    about = "Work with blends: two-point Hermite interpolational polynomials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a blend (and derivatives) on a grid, CSV to stdout
    Eval(EvalArgs),
    /// Integrate a blend over its interval
    Integrate(IntegrateArgs),
    /// Print the exact quadrature weights of a grade-(m,n) rule
    Weights(WeightsArgs),
    /// Evaluate the Lebesgue function of a grade-(m,n) basis, CSV to stdout
    Lebesgue(LebesgueArgs),
    /// Emit a built-in blend spec as JSON
    Gen(GenArgs),
    /// Emit the antiderivative blend of a spec as JSON
    Antiderivative(AntiderivativeArgs),
    /// Evaluate a string of blends on a grid, CSV to stdout
    StringEval(StringEvalArgs),
    /// Integrate a string of blends over its knot range
    StringIntegrate(StringIntegrateArgs),
}

#[derive(Args)]
struct PointsArgs {
    /// Grid as start:end:count (inclusive endpoints, count >= 2)
    #[arg(long, conflicts_with = "at")]
    points: Option<String>,
    /// A single point; may be repeated
    #[arg(long = "at")]
    at: Vec<f64>,
}

#[derive(Args)]
struct EvalArgs {
    /// Blend spec file (JSON)
    #[arg(long)]
    spec: String,
    #[command(flatten)]
    points: PointsArgs,
    /// Number of derivatives to compute
    #[arg(long, default_value_t = 0)]
    nder: usize,
}

#[derive(Args)]
struct IntegrateArgs {
    #[arg(long)]
    spec: String,
    /// Print the exact rational instead of a decimal
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct WeightsArgs {
    m: i64,
    n: i64,
    #[arg(long, value_enum, default_value_t = Format::Fractions)]
    format: Format,
}

#[derive(Args)]
struct LebesgueArgs {
    m: i64,
    n: i64,
    #[command(flatten)]
    points: PointsArgs,
}

#[derive(Args)]
struct GenArgs {
    /// Generator name
    #[arg(value_enum)]
    name: GenName,
    m: i64,
    n: i64,
}

#[derive(Args)]
struct AntiderivativeArgs {
    #[arg(long)]
    spec: String,
    /// Value of the antiderivative at the left endpoint
    #[arg(long, default_value_t = 0.0)]
    initial: f64,
}

#[derive(Args)]
struct StringEvalArgs {
    /// String spec file (JSON)
    #[arg(long)]
    spec: String,
    #[command(flatten)]
    points: PointsArgs,
    #[arg(long, default_value_t = 0)]
    nder: usize,
}

#[derive(Args)]
struct StringIntegrateArgs {
    #[arg(long)]
    spec: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Fractions,
    Decimals,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenName {
    Step,
    Cospi,
    ExpRecip,
}

/// Failure modes with their process exit codes.
enum Failure {
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("blend: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// BLEND_THREADS caps grid parallelism; 0 or unset means automatic.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("BLEND_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        } else {
            eprintln!("blend: ignoring unparsable BLEND_THREADS={v:?}");
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Integrate(args) => cmd_integrate(args),
        Command::Weights(args) => cmd_weights(args),
        Command::Lebesgue(args) => cmd_lebesgue(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Antiderivative(args) => cmd_antiderivative(args),
        Command::StringEval(args) => cmd_string_eval(args),
        Command::StringIntegrate(args) => cmd_string_integrate(args),
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
}

fn load_blend(path: &str) -> Result<Blend, Failure> {
    let text = read_file(path)?;
    io::parse_blend_spec(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_string(path: &str) -> Result<BlendString, Failure> {
    let text = read_file(path)?;
    io::parse_string_spec(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

/// Expand a points spec into explicit grid values.
///
/// `start:end:count` places `count` points with both endpoints exact:
/// `start + i*(end-start)/(count-1)`, the last forced to `end`.
fn grid_points(args: &PointsArgs) -> Result<Vec<f64>, Failure> {
    match (&args.points, args.at.is_empty()) {
        (Some(spec), true) => {
            let parts: Vec<&str> = spec.split(':').collect();
            let bad = || Failure::Usage(format!("bad points spec {spec:?} (want start:end:count)"));
            if parts.len() != 3 {
                return Err(bad());
            }
            let start: f64 = parts[0].parse().map_err(|_| bad())?;
            let end: f64 = parts[1].parse().map_err(|_| bad())?;
            let count: usize = parts[2].parse().map_err(|_| bad())?;
            if count < 2 || !start.is_finite() || !end.is_finite() {
                return Err(bad());
            }
            let step = (end - start) / (count - 1) as f64;
            Ok((0..count)
                .map(|i| {
                    if i == count - 1 {
                        end
                    } else {
                        start + i as f64 * step
                    }
                })
                .collect())
        }
        (None, false) => Ok(args.at.clone()),
        (None, true) => Err(Failure::Usage("need --points or --at".into())),
        (Some(_), false) => Err(Failure::Usage("--points conflicts with --at".into())),
    }
}

fn print_csv_grid(zs: &[f64], rows: &[Vec<f64>], nder: usize) {
    let mut header = String::from("z");
    for k in 0..=nder {
        let _ = write!(header, ",h{k}");
    }
    println!("{header}");
    for (z, row) in zs.iter().zip(rows) {
        let mut line = format_value(*z);
        for v in row {
            line.push(',');
            line.push_str(&format_value(*v));
        }
        println!("{line}");
    }
}

fn format_value(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v}")
    }
}

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    let blend = load_blend(&args.spec)?;
    let zs = grid_points(&args.points)?;
    if binomial_overflows(blend.m(), blend.n()) {
        eprintln!(
            "blend: warning: grade ({},{}) implies binomial coefficients beyond binary64; \
             expect NaNs in flat regions",
            blend.m(),
            blend.n()
        );
    }
    let h = blend.h();
    let ss: Vec<f64> = zs.iter().map(|z| (z - blend.a()) / h).collect();
    let rows = blend.eval_grid(&ss, args.nder);
    print_csv_grid(&zs, &rows, args.nder);
    Ok(())
}

fn cmd_integrate(args: IntegrateArgs) -> Result<(), Failure> {
    if args.exact {
        let text = read_file(&args.spec)?;
        let exact = io::parse_blend_spec_exact(&text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", args.spec)))?;
        println!("{}", exact.integrate());
    } else {
        let blend = load_blend(&args.spec)?;
        println!("{}", format_value(blend.integrate()));
    }
    Ok(())
}

fn cmd_weights(args: WeightsArgs) -> Result<(), Failure> {
    if args.m < 0 || args.n < 0 {
        return Err(Failure::Usage("grades must be nonnegative".into()));
    }
    let rule = quadrature_weights(args.m, args.n);
    let render = |ws: &[num_rational::BigRational]| -> Vec<String> {
        ws.iter()
            .map(|w| match args.format {
                Format::Fractions | Format::Csv => format!("{w}"),
                Format::Decimals => format_value(w.to_f64().unwrap_or(f64::NAN)),
            })
            .collect()
    };
    println!("wp,{}", render(rule.wp()).join(","));
    println!("wq,{}", render(rule.wq()).join(","));
    Ok(())
}

fn cmd_lebesgue(args: LebesgueArgs) -> Result<(), Failure> {
    if args.m < 0 || args.n < 0 {
        return Err(Failure::Usage("grades must be nonnegative".into()));
    }
    let ss = grid_points(&args.points)?;
    println!("s,L");
    for s in ss {
        println!(
            "{},{}",
            format_value(s),
            format_value(lebesgue(args.m, args.n, s))
        );
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    if args.m < 0 || args.n < 0 {
        return Err(Failure::Usage("grades must be nonnegative".into()));
    }
    let blend = match args.name {
        GenName::Step => generators::step(args.m, args.n),
        GenName::Cospi => generators::cospi(args.m, args.n),
        GenName::ExpRecip => generators::exp_recip(args.m, args.n),
    };
    println!("{}", io::blend_to_json(&blend));
    Ok(())
}

fn cmd_antiderivative(args: AntiderivativeArgs) -> Result<(), Failure> {
    let blend = load_blend(&args.spec)?;
    println!("{}", io::blend_to_json(&blend.antiderivative(args.initial)));
    Ok(())
}

fn cmd_string_eval(args: StringEvalArgs) -> Result<(), Failure> {
    let bs = load_string(&args.spec)?;
    let zs = grid_points(&args.points)?;
    let rows = zs
        .iter()
        .map(|&z| bs.eval(z, args.nder))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    print_csv_grid(&zs, &rows, args.nder);
    Ok(())
}

fn cmd_string_integrate(args: StringIntegrateArgs) -> Result<(), Failure> {
    let bs = load_string(&args.spec)?;
    println!("{}", format_value(bs.integrate()));
    Ok(())
}
