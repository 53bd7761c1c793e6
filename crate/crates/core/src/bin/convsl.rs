use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use convsl::io::{join_points, load_instance, membership, solve_params, ErrorReport, ParamMode, SupportAnswer};
use convsl::mutants::MutantKind;
use convsl::riesz::support_embed;
use convsl::suite::{parse_law_selector, run_suite, write_bundle, SuiteConfig};
use convsl::{Polytope, QVector, Rational, Result};

#[derive(Parser)]
#[command(name = "convsl", version, about = "Exact checks and queries for convex semilattices over Q^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the law suite against an instance; exit 0 iff every law passes.
    Check(CheckArgs),
    /// Decide membership of a point in the generated subspace.
    Membership {
        instance: PathBuf,
        /// Comma-separated coordinates, e.g. 2,1/2
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Extended join of two points of the generated subspace.
    Join {
        instance: PathBuf,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Support function of a polytope file at the given directions.
    Support {
        polytope: PathBuf,
        #[arg(required = true, allow_hyphen_values = true)]
        directions: Vec<String>,
    },
    /// Parameter solutions for composing perspective shifts.
    SolveParams(SolveArgs),
}

#[derive(Args)]
struct CheckArgs {
    instance: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    cases: usize,
    /// Comma-separated law groups, or "all".
    #[arg(long, default_value = "all")]
    laws: String,
    #[arg(long, default_value_t = 64)]
    denominator_bound: u64,
    /// Directory for the report bundle.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, hide = true)]
    mutate: Option<String>,
}

#[derive(Args)]
struct SolveArgs {
    /// (p, q) -> (r, s) for exchanging two shift centers.
    #[arg(long, conflicts_with = "from_pr")]
    swap: bool,
    /// Treat the second argument as r instead of q.
    #[arg(long)]
    from_pr: bool,
    #[arg(allow_hyphen_values = true)]
    a: Rational,
    #[arg(allow_hyphen_values = true)]
    b: Rational,
}

fn parse_point(s: &str) -> Result<QVector> {
    let coords = s.split(',').map(|c| c.trim().parse::<Rational>()).collect::<Result<Vec<_>>>()?;
    QVector::new(coords)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check(args) => {
            let inst = load_instance(&args.instance)?;
            let cfg = SuiteConfig {
                seed: args.seed,
                cases: args.cases,
                laws: parse_law_selector(&args.laws)?,
                denominator_bound: args.denominator_bound,
                mutation: args.mutate.as_deref().map(str::parse::<MutantKind>).transpose()?,
            };
            let outcome = run_suite(&inst, &cfg)?;
            for r in &outcome.reports {
                eprintln!("{}", r.summary_line());
            }
            if let Some(dir) = &args.out {
                write_bundle(&outcome, dir)?;
            }
            print_json(&outcome.summary)?;
            Ok(ExitCode::from(outcome.exit_code() as u8))
        }
        Command::Membership { instance, point } => {
            let inst = load_instance(instance)?;
            print_json(&membership(&inst, &parse_point(&point)?)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Join { instance, x, y } => {
            let inst = load_instance(instance)?;
            print_json(&join_points(&inst, &parse_point(&x)?, &parse_point(&y)?)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Support { polytope, directions } => {
            let p: Polytope = serde_json::from_str(&std::fs::read_to_string(polytope)?)?;
            let dirs = directions.iter().map(|d| parse_point(d)).collect::<Result<Vec<_>>>()?;
            print_json(&SupportAnswer { values: support_embed(&p, &dirs)? })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::SolveParams(args) => {
            let mode = match (args.swap, args.from_pr) {
                (true, _) => ParamMode::Swap,
                (false, true) => ParamMode::FromPr,
                (false, false) => ParamMode::FromPq,
            };
            print_json(&solve_params(mode, &args.a, &args.b)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            let report = ErrorReport::from(&e);
            match serde_json::to_string(&report) {
                Ok(s) => println!("{s}"),
                Err(_) => eprintln!("{e}"),
            }
            ExitCode::from(2)
        }
    }
}

