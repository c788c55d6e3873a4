//! `g1split` — analyze Brauer classes of the rationals, plan the
//! index-4/5 constructions, build certified genus-one curves, and
//! re-verify stored certificates.
//!
//! Exit codes: 0 success, 2 input error, 3 range/precondition error,
//! 4 resource or retry exhaustion, 5 verification mismatch.

use clap::{Args, Parser, Subcommand, ValueEnum};
use g1split_core::brauer::{quaternion_class, BrauerClassQ, QuaternionPair};
use g1split_core::constructions::{
    build_index2_cfg, build_index3_cfg, build_index4_split_cfg, build_index5_pfaffian_cfg,
    plan_index4, plan_index5, verify_certificate_with_budget, BuildConfig, ConstructionPlan,
    CurveCertificate, Index3Mode,
};
use g1split_core::error::Error;
use g1split_core::rational::{parse_rational, Rational};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

const EXIT_INPUT: i32 = 2;
const EXIT_RANGE: i32 = 3;
const EXIT_RESOURCE: i32 = 4;
const EXIT_MISMATCH: i32 = 5;

#[derive(Parser)]
#[command(
    name = "g1split",
    version,
    about = "Construct and certify genus-one curves splitting Brauer classes of index at most 5 over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a central simple algebra over Q
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Emit the construction plan for an index-4 or index-5 class
    Plan(PlanArgs),
    /// Build or verify certified curves
    Curve {
        #[command(subcommand)]
        command: CurveCommand,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Print invariants, period, index, Severi-Brauer dimension, and construction case
    Analyze(AnalyzeArgs),
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Build a certified curve for the chosen construction case
    Build(Box<BuildArgs>),
    /// Re-certify a stored certificate from scratch
    Verify(VerifyArgs),
}

/// How a Brauer class is specified on the command line.
#[derive(Args)]
struct ClassSpec {
    /// Quaternion algebra (a, b): two nonzero rationals, comma-separated
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    quaternion: Option<String>,
    /// Local invariants, shorthand ('{2:1/4, 3:3/4}') or full JSON
    #[arg(long, value_name = "SPEC")]
    invariants: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Text,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    class: ClassSpec,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
}

#[derive(Args)]
struct PlanArgs {
    #[command(flatten)]
    class: ClassSpec,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
}

#[derive(Args)]
struct BuildArgs {
    /// Construction case
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=5))]
    case: u8,
    /// Case 2: quaternion pair (a, b), two nonzero rationals
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    quaternion: Option<String>,
    /// Case 3: random plane cubic in the split model
    #[arg(long)]
    split: bool,
    /// Case 3: diagonal cubic a*x^3 + b*y^3 + z^3 for the cyclic algebra (a, b)
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    cyclic: Option<String>,
    /// RNG seed (default: fresh entropy, echoed in the certificate)
    #[arg(long)]
    seed: Option<u64>,
    /// Coefficient height bound for random forms
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    height: u32,
    /// Attempts before giving up
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    max_retries: u32,
    /// Buchberger pair-queue bound
    #[arg(long, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    pair_budget: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputMode::Json)]
    output: OutputMode,
    /// Write the certificate here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Certificate JSON file
    #[arg(value_name = "FILE")]
    path: PathBuf,
    /// Buchberger pair-queue bound for the re-check
    #[arg(long, default_value_t = 20_000, value_parser = clap::value_parser!(u64).range(1..))]
    pair_budget: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
}

/// A command failure: exit code plus a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::RetriesExhausted(_)
            | Error::PairBudgetExceeded(_)
            | Error::FactorizationLimit(_) => EXIT_RESOURCE,
            Error::WrongIndex { .. } | Error::InfeasibleClass(_) => EXIT_RANGE,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Algebra { command: AlgebraCommand::Analyze(args) } => cmd_analyze(&args),
        Command::Plan(args) => cmd_plan(&args),
        Command::Curve { command: CurveCommand::Build(args) } => cmd_build(&args),
        Command::Curve { command: CurveCommand::Verify(args) } => cmd_verify(&args),
    };
    if let Err(failure) = outcome {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}

fn parse_rational_pair(s: &str) -> Result<(Rational, Rational), Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::new(EXIT_INPUT, format!("expected 'a,b', got '{s}'")));
    }
    let a = parse_rational(parts[0].trim())?;
    let b = parse_rational(parts[1].trim())?;
    Ok((a, b))
}

fn parse_integer_pair(s: &str) -> Result<(BigInt, BigInt), Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::new(EXIT_INPUT, format!("expected 'a,b', got '{s}'")));
    }
    let parse = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| Failure::new(EXIT_INPUT, format!("'{t}' is not an integer")))
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}

fn resolve_class(spec: &ClassSpec) -> Result<BrauerClassQ, Failure> {
    match (&spec.quaternion, &spec.invariants) {
        (Some(q), None) => {
            let (a, b) = parse_rational_pair(q)?;
            let pair = QuaternionPair::new(a, b)?;
            Ok(quaternion_class(&pair)?)
        }
        (None, Some(s)) => Ok(BrauerClassQ::parse_spec(s)?),
        _ => Err(Failure::new(
            EXIT_INPUT,
            "specify the class with exactly one of --quaternion or --invariants",
        )),
    }
}

fn biguint_json(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> CmdResult {
    let class = resolve_class(&args.class)?;
    let index = class.index();
    if index > BigUint::from(5u32) {
        return Err(Failure::new(
            EXIT_RANGE,
            format!(
                "index {index} is out of range: the constructions cover Severi-Brauer \
                 varieties of dimension at most 4, i.e. index at most 5"
            ),
        ));
    }
    let case = index.to_u64().filter(|n| (2..=5).contains(n));
    match args.output {
        OutputMode::Text => {
            println!("class: {class}");
            println!("period: {}", class.period());
            println!("index: {index}");
            println!("severi_brauer_dimension: {}", class.sb_dimension());
            match case {
                Some(c) => println!("case: {c}"),
                None => println!("case: none (trivial class; already split)"),
            }
        }
        OutputMode::Json => {
            let v = json!({
                "class": class.to_json_value(),
                "period": biguint_json(&class.period()),
                "index": biguint_json(&index),
                "severi_brauer_dimension": biguint_json(&class.sb_dimension()),
                "case": case,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("static JSON"));
        }
    }
    Ok(())
}

/// Render the obstruction sum term by term, e.g. "2α + 2α = 4α = 0".
fn obstruction_arithmetic(plan: &ConstructionPlan) -> String {
    let Some(bundle) = &plan.bundle else {
        return format!("{}", plan.obstruction);
    };
    let first = match bundle.m {
        1 => "α".to_string(),
        m => format!("{m}α"),
    };
    let second = match bundle.n {
        1 => "2α".to_string(),
        n => format!("{n}(2α)"),
    };
    let total = bundle.m + 2 * bundle.n;
    if plan.obstruction_vanishes {
        format!("{first} + {second} = {total}α = 0")
    } else {
        format!("{first} + {second} = {total}α = {}", plan.obstruction)
    }
}

fn cmd_plan(args: &PlanArgs) -> CmdResult {
    let class = resolve_class(&args.class)?;
    let plan = match class.index().to_u64() {
        Some(4) => plan_index4(&class)?,
        Some(5) => plan_index5(&class)?,
        Some(2) => {
            return Err(Failure::new(
                EXIT_RANGE,
                "index 2 has no product plan; use `curve build --case 2 --quaternion a,b`",
            ))
        }
        Some(3) => {
            return Err(Failure::new(
                EXIT_RANGE,
                "index 3 has no product plan; use `curve build --case 3 --split` or `--cyclic a,b`",
            ))
        }
        Some(1) => {
            return Err(Failure::new(
                EXIT_RANGE,
                "the trivial class is already split; nothing to plan",
            ))
        }
        _ => {
            return Err(Failure::new(
                EXIT_RANGE,
                format!("index {} is out of range: plans exist for index 4 and 5", class.index()),
            ))
        }
    };
    match args.output {
        OutputMode::Json => {
            println!("{}", serde_json::to_string_pretty(&plan.to_json_value()).expect("plan JSON"));
        }
        OutputMode::Text => {
            println!("alpha: {}", plan.alpha);
            println!("index: {}", plan.index_case);
            if let Some(y) = &plan.y_class {
                println!("y_class: {y}");
            }
            let y_dim = plan.y_dim.unwrap_or(0);
            println!("ambient: P^{} x Y with dim Y = {y_dim}", plan.x_dim);
            if let Some(b) = &plan.bundle {
                let twist = if b.omega_twist { ", cotangent twist" } else { "" };
                println!("bundle: O({}, {}){twist}", b.m, b.n);
            }
            if let Some(r) = plan.bundle_rank {
                println!("pushforward_rank: {r}");
            }
            if let Some(s) = plan.expected_sections {
                println!("expected_sections: {s}");
            }
            println!("obstruction: {}", obstruction_arithmetic(&plan));
            println!("obstruction_vanishes: {}", plan.obstruction_vanishes);
        }
    }
    Ok(())
}

fn reject_algebra_inputs(args: &BuildArgs) -> CmdResult {
    if args.quaternion.is_some() || args.cyclic.is_some() || args.split {
        return Err(Failure::new(
            EXIT_INPUT,
            format!(
                "case {} builds the split model and takes no --quaternion/--split/--cyclic",
                args.case
            ),
        ));
    }
    Ok(())
}

fn cmd_build(args: &BuildArgs) -> CmdResult {
    let seed = args.seed.unwrap_or_else(rand::random::<u64>);
    let cfg = BuildConfig {
        height: args.height,
        seed,
        max_retries: args.max_retries,
        pair_budget: args.pair_budget as usize,
    };
    let cert = match args.case {
        2 => {
            if args.split || args.cyclic.is_some() {
                return Err(Failure::new(EXIT_INPUT, "case 2 takes --quaternion only"));
            }
            let spec = args
                .quaternion
                .as_ref()
                .ok_or_else(|| Failure::new(EXIT_INPUT, "case 2 needs --quaternion a,b"))?;
            let (a, b) = parse_rational_pair(spec)?;
            build_index2_cfg(&a, &b, &cfg)?
        }
        3 => {
            if args.quaternion.is_some() {
                return Err(Failure::new(
                    EXIT_INPUT,
                    "case 3 takes --split or --cyclic, not --quaternion",
                ));
            }
            let mode = match (args.split, &args.cyclic) {
                (true, None) => Index3Mode::Split,
                (false, Some(c)) => {
                    let (a, b) = parse_integer_pair(c)?;
                    Index3Mode::Cyclic { a, b }
                }
                (false, None) => {
                    return Err(Failure::new(EXIT_INPUT, "case 3 needs --split or --cyclic a,b"))
                }
                (true, Some(_)) => {
                    return Err(Failure::new(EXIT_INPUT, "choose one of --split / --cyclic"))
                }
            };
            build_index3_cfg(&mode, &cfg)?
        }
        4 => {
            reject_algebra_inputs(args)?;
            build_index4_split_cfg(&cfg)?
        }
        5 => {
            reject_algebra_inputs(args)?;
            build_index5_pfaffian_cfg(&cfg)?
        }
        _ => unreachable!("clap restricts --case to 2..=5"),
    };

    let body = match args.output {
        OutputMode::Json => cert.to_json_string(),
        OutputMode::Text => render_certificate_text(&cert),
    };
    match &args.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| {
            Failure::new(EXIT_INPUT, format!("cannot write {}: {e}", path.display()))
        })?,
        None => print!("{body}"),
    }
    Ok(())
}

fn render_certificate_text(cert: &CurveCertificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "construction: {}", cert.construction);
    let _ = writeln!(
        s,
        "ambient: P^{} ({})",
        cert.ambient_vars.len().saturating_sub(1),
        cert.ambient_vars.join(", ")
    );
    let _ = writeln!(s, "generators:");
    for g in &cert.generators {
        let _ = writeln!(s, "  {g}");
    }
    let _ = writeln!(s, "dimension: {}", cert.report.dimension);
    let _ = writeln!(s, "degree: {}", cert.report.degree);
    let _ = writeln!(s, "genus: {}", cert.report.genus);
    let _ = writeln!(s, "smooth: {}", cert.report.smooth);
    let _ = writeln!(s, "irreducibility_certified: {}", cert.irreducibility_certified);
    let _ = writeln!(s, "seed: {}", cert.seed);
    let _ = writeln!(s, "retries: {}", cert.retries);
    if let Some(plan) = &cert.plan {
        let _ = writeln!(s, "obstruction: {}", obstruction_arithmetic(plan));
    }
    s
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let raw = std::fs::read_to_string(&args.path).map_err(|e| {
        Failure::new(EXIT_INPUT, format!("cannot read {}: {e}", args.path.display()))
    })?;
    let cert = CurveCertificate::from_json_str(&raw)?;
    let report = verify_certificate_with_budget(&cert, args.pair_budget as usize)?;
    match args.output {
        OutputMode::Json => {
            let v = json!({ "matches": report.matches, "diffs": report.diffs });
            println!("{}", serde_json::to_string_pretty(&v).expect("report JSON"));
        }
        OutputMode::Text => {
            if report.matches {
                println!(
                    "certificate verified: dimension, degree, genus, and smoothness reproduced"
                );
            } else {
                println!("certificate rejected:");
                for d in &report.diffs {
                    println!("  {d}");
                }
            }
        }
    }
    if report.matches {
        Ok(())
    } else {
        Err(Failure::new(EXIT_MISMATCH, "re-certification found mismatches"))
    }
}
