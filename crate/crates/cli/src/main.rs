//! `germ`: classify germs of polynomials at rational points.

mod commands;
mod demo;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use germ_core::report::{Report, TOOL_NAME};

use commands::{CliError, Outcome};

/// Default truncation order for all series computations.
const DEFAULT_ORDER: u32 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "germ",
    version,
    about = "Irreducibility of polynomial germs at rational points"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the germ of a polynomial at a point.
    Analyze(AnalyzeArgs),
    /// Classify germs along a rational curve through a base point.
    Scan(ScanArgs),
    /// Weierstrass preparation of the germ at a point.
    Prepare(AnalyzeArgs),
    /// Resultant of two polynomials with respect to a variable.
    Resultant(PairArgs),
    /// Discriminant of a polynomial with respect to a variable.
    Discriminant(DiscriminantArgs),
    /// Coprimality of two germs at a point, witnessed by a resultant.
    Coprime(CoprimeArgs),
    /// Built-in worked examples.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Debug, Subcommand)]
enum DemoCommand {
    /// z3^2 - z1*z2^2: irreducible at the origin, reducible nearby.
    Counterexample {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: u32,
    },
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Polynomial in z1, z2, ...
    #[arg(long)]
    poly: String,
    /// Comma-separated rational coordinates; the origin when omitted.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Distinguished variable; the last one when omitted.
    #[arg(long)]
    var: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: u32,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long)]
    poly: String,
    /// Base point; the origin when omitted.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Comma-separated coordinate polynomials in t, e.g. "t^2,t^3".
    #[arg(long, allow_hyphen_values = true)]
    curve: String,
    /// Comma-separated parameter values.
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: u32,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long)]
    var: String,
}

#[derive(Debug, Args)]
struct DiscriminantArgs {
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long)]
    var: String,
}

#[derive(Debug, Args)]
struct CoprimeArgs {
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    #[arg(long)]
    var: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

enum Output {
    Single(Box<Outcome>),
    Demo(demo::Demo),
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let start = Instant::now();
    let output = match &cli.command {
        Command::Analyze(a) => Output::Single(Box::new(commands::analyze(
            &a.poly,
            a.point.as_deref(),
            a.var.as_deref(),
            a.order,
        )?)),
        Command::Prepare(a) => Output::Single(Box::new(commands::prepare(
            &a.poly,
            a.point.as_deref(),
            a.var.as_deref(),
            a.order,
        )?)),
        Command::Scan(a) => Output::Single(Box::new(commands::scan(
            &a.poly,
            a.point.as_deref(),
            &a.curve,
            &a.t,
            a.order,
        )?)),
        Command::Resultant(a) => Output::Single(Box::new(commands::resultant(&a.f, &a.g, &a.var)?)),
        Command::Discriminant(a) => {
            Output::Single(Box::new(commands::discriminant(&a.poly, &a.var)?))
        }
        Command::Coprime(a) => Output::Single(Box::new(commands::coprime(
            &a.f,
            &a.g,
            a.point.as_deref(),
            a.var.as_deref(),
        )?)),
        Command::Demo {
            which: DemoCommand::Counterexample { order },
        } => Output::Demo(demo::counterexample(*order)?),
    };
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;

    let report = |o: Outcome| Report {
        tool: TOOL_NAME.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: o.command,
        input: o.input,
        result: o.result,
        timing_ms: elapsed,
    };
    let mut text = match (output, cli.json) {
        (Output::Single(o), false) => return Ok(o.text),
        (Output::Demo(d), false) => return Ok(d.render()),
        (Output::Single(o), true) => serde_json::to_string_pretty(&report(*o))?,
        (Output::Demo(d), true) => {
            let reports: Vec<Report> = d.steps.into_iter().map(|(_, o)| report(o)).collect();
            serde_json::to_string_pretty(&reports)?
        }
    };
    text.push('\n');
    Ok(text)
}
