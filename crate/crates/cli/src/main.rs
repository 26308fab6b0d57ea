use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use superindex::algebra::parse_superpoly;
use superindex::genera::{rhs_index, series, CurvatureData};
use superindex::hochschild::tau;
use superindex::local_index::{average, closed_form, closed_form_evaluated, pn_direct, pn_graphsum};
use superindex::verify::{self, RunConfig, Suite, TypeSpec};
use superindex::Error;

#[derive(Parser)]
#[command(name = "superindex", version, about = "Exact checks for the superalgebraic index identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Evaluate a single exact quantity.
    #[command(subcommand)]
    Eval(EvalCommand),
}

#[derive(Args)]
struct VerifyArgs {
    /// bernoulli, algebra, trace, cocycle, local-index, genera or all
    suite: Suite,
    /// Restrict to one type, written `2n,a,b`.
    #[arg(long = "type")]
    kind: Option<TypeSpec>,
    /// Degree of the local index polynomial.
    #[arg(long = "n")]
    degree: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override the number of random samples per check.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EvalCommand {
    /// The trace cocycle on a chain of slots separated by `|`.
    Tau {
        #[arg(long = "type")]
        kind: TypeSpec,
        #[arg(long)]
        chain: String,
    },
    /// The local index polynomial of degree `n`; the type defaults to `(2n|0,0)`.
    Pn {
        #[arg(long = "n")]
        degree: usize,
        #[arg(long = "type")]
        kind: Option<TypeSpec>,
        #[arg(long, value_enum, default_value_t = Method::Graphsum)]
        method: Method,
        /// Average over the symmetric group before printing.
        #[arg(long)]
        average: bool,
    },
    /// A named characteristic series.
    Series {
        name: String,
        #[arg(long)]
        order: u32,
        /// Comma-separated variable names (two for BChat).
        #[arg(long, default_value = "t")]
        vars: String,
    },
    /// The right-hand side of the index formula in generic curvature symbols.
    Rhs {
        #[arg(long = "type")]
        kind: TypeSpec,
        /// Degree; defaults to `n` of the type.
        #[arg(long = "n")]
        degree: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Graphsum,
    Direct,
    ClosedForm,
    Evaluated,
}

enum Failure {
    Config(String),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Eval(cmd) => run_eval(cmd).map(|s| println!("{s}")).map_err(Failure::from),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let cfg = RunConfig {
        kind: args.kind,
        degree: args.degree,
        seed: args.seed,
        samples: args.samples,
    };
    let report = verify::run(args.suite, &cfg)?;
    let text = if args.json { report.to_json() + "\n" } else { report.to_text() };
    match args.out {
        Some(path) => {
            fs::write(&path, &text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
            println!("{}: {} of {} checks passed", report.suite, report.total - report.failed, report.total);
        }
        None => print!("{text}"),
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn run_eval(cmd: EvalCommand) -> Result<String, Error> {
    match cmd {
        EvalCommand::Tau { kind, chain } => {
            let ctx = kind.context()?;
            let slots = chain
                .split('|')
                .map(|s| parse_superpoly(&ctx, s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(tau(&ctx, &slots)?.display_with(&["hbar".to_string()]))
        }
        EvalCommand::Pn { degree, kind, method, average: avg } => {
            let ctx = kind.unwrap_or(TypeSpec::new(degree, 0, 0)).context()?;
            let p = match method {
                Method::Graphsum => pn_graphsum(&ctx, degree)?,
                Method::Direct => pn_direct(&ctx, degree)?,
                Method::ClosedForm => closed_form(&ctx, degree)?,
                Method::Evaluated => closed_form_evaluated(&ctx, degree)?,
            };
            Ok(if avg { average(&p) } else { p }.to_string())
        }
        EvalCommand::Series { name, order, vars } => {
            let vars: Vec<&str> = vars.split(',').map(str::trim).collect();
            Ok(series(&name, &vars, order)?.to_string())
        }
        EvalCommand::Rhs { kind, degree } => {
            let ctx = kind.context()?;
            let n = degree.unwrap_or(kind.n);
            Ok(rhs_index(&ctx, n, &CurvatureData::generic(&ctx))?.to_string())
        }
    }
}
