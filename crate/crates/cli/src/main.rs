mod commands;
mod error;
mod input;
mod worked;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mvlat::duality::Limits;

#[derive(Parser, Debug)]
#[command(name = "mvlat", version, about = "Finite MV-lattices, their dual ordered MV-spaces and the checks between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input JSON file; repeat for commands that take several algebras.
    #[arg(long, short, global = true)]
    input: Vec<PathBuf>,

    /// Denominator bound for hom enumeration.
    #[arg(long, global = true)]
    bound: Option<u64>,

    /// Output format; each command has its own default.
    #[arg(long, short, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,

    /// Carrier size limit for superset searches.
    #[arg(long, global = true, default_value_t = mvlat::order::H_COMPLETE_LIMIT)]
    max_carrier: usize,

    /// Limit on the number of opens of a generated topology.
    #[arg(long, global = true, default_value_t = mvlat::mvtop::OPENS_LIMIT)]
    max_opens: usize,

    #[arg(long, env = "MVLAT_COLOR", default_value = "auto", value_enum, hide = true)]
    color: ColorMode,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an algebra (axioms) or a space (topology axioms, compactness, Priestley).
    Check,
    /// Homomorphisms into [0,1] and their pointwise order.
    Homs,
    /// Maximal ideals of an MV-algebra.
    MaxIdeals,
    /// Traces of the maximal ideals of B on A, ordered by inclusion (inputs: A, B).
    MaxLe,
    /// The dual ordered MV-space of an MV-lattice.
    Dual,
    /// Clopens and increasing clopens of a space (or of the dual of an algebra).
    Clopens,
    /// Duality verdict for an algebra or a space.
    DualityCheck,
    /// Compare the dual of an MV-algebra with its maximal spectrum.
    StoneCompare,
    /// Whether A and E induce the same order on the homs of B (inputs: A, E, B).
    Compatible,
    /// Whether A admits no strictly larger compatible subreduct of B (inputs: A, B).
    HComplete,
    /// Neg-free term sending x to 0 and y to 1; without arguments, a seeded random run.
    Separate {
        x: Option<String>,
        y: Option<String>,
        /// Number of random pairs.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Largest denominator of random pairs.
        #[arg(long, default_value_t = 20)]
        max_denom: u64,
    },
    /// Hasse diagram of homs, of maximal-ideal traces, or of the induced order.
    Hasse {
        #[arg(long, value_enum, default_value = "homs")]
        of: Diagram,
    },
    /// Replay the worked examples and diff the diagrams against the stored goldens.
    PaperExamples,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Diagram {
    Homs,
    MaxLe,
    Compat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ColorMode {
    Auto,
    Always,
    Never,
}

/// What a command produced, in every format it supports.
pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    pub dot: Option<String>,
    pub passed: bool,
    pub default_format: Format,
}

impl Report {
    pub fn new(json: serde_json::Value, text: String, passed: bool) -> Report {
        Report {
            json,
            text,
            dot: None,
            passed,
            default_format: Format::Json,
        }
    }

    pub fn with_dot(mut self, dot: String) -> Report {
        self.dot = Some(dot);
        self
    }

    pub fn default_to(mut self, format: Format) -> Report {
        self.default_format = format;
        self
    }
}

pub struct Context {
    pub inputs: Vec<PathBuf>,
    pub bound: Option<u64>,
    pub seed: u64,
    pub limits: Limits,
}

fn run(cli: &Cli) -> Result<Report> {
    let ctx = Context {
        inputs: cli.input.clone(),
        bound: cli.bound,
        seed: cli.seed,
        limits: Limits {
            carrier: cli.max_carrier,
            opens: cli.max_opens,
        },
    };
    match &cli.command {
        Command::Check => commands::check(&ctx),
        Command::Homs => commands::homs(&ctx),
        Command::MaxIdeals => commands::max_ideals(&ctx),
        Command::MaxLe => commands::max_le(&ctx),
        Command::Dual => commands::dual(&ctx),
        Command::Clopens => commands::clopens(&ctx),
        Command::DualityCheck => commands::duality_check(&ctx),
        Command::StoneCompare => commands::stone_compare(&ctx),
        Command::Compatible => commands::compatible(&ctx),
        Command::HComplete => commands::h_complete(&ctx),
        Command::Separate { x, y, count, max_denom } => {
            commands::separate(&ctx, x.as_deref(), y.as_deref(), *count, *max_denom)
        }
        Command::Hasse { of } => commands::hasse(&ctx, *of),
        Command::PaperExamples => worked::run(),
    }
}

pub use error::{CliError, Result};

fn paint(text: &str, passed: bool, color: bool) -> String {
    if !color {
        return text.to_string();
    }
    let code = if passed { "32" } else { "31" };
    format!("\x1b[{code}m{text}\x1b[0m")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = match cli.color {
        ColorMode::Always => true,
        ColorMode::Never => false,
        ColorMode::Auto => std::io::stdout().is_terminal(),
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let format = cli.format.unwrap_or(report.default_format);
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("json values serialize") + "\n",
        Format::Dot => match &report.dot {
            Some(d) => d.clone(),
            None => {
                eprintln!("error: this command has no DOT output");
                return ExitCode::from(2);
            }
        },
        Format::Text => {
            let status = if report.passed { "PASS" } else { "FAIL" };
            format!("{}{}\n", report.text, paint(status, report.passed, color))
        }
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(body.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
