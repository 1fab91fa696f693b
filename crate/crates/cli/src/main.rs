//! `maxai`: enumerate, classify and verify even-variable symmetric Boolean
//! functions of maximum algebraic immunity.

mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "maxai", version, about)]
struct Cli {
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every max-AI symmetric function of n variables.
    Enumerate {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the algebraic immunity of a symmetric function.
    Ai {
        #[command(flatten)]
        input: SvvArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Recover construction parameters of a max-AI function.
    Classify {
        #[command(flatten)]
        input: SvvArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Convert between value vector and symmetric ANF.
    Convert {
        /// Value vector, v(0) first; `-` reads stdin.
        #[arg(long, conflicts_with = "sanf", required_unless_present = "sanf")]
        svv: Option<String>,
        /// Symmetric ANF coefficients, λ(0) first; `-` reads stdin.
        #[arg(long)]
        sanf: Option<String>,
    },
    /// Print the partition of {0..n} and the exempt set.
    Sets {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check the enumeration against the brute-force oracle.
    Verify {
        #[command(flatten)]
        range: Range,
        /// Check every symmetric function (n ≤ 12).
        #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
        exhaustive: bool,
        /// Check this many random non-enumerated functions (n ≤ 16).
        #[arg(long, value_name = "N")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Flip this value-vector position of the first enumerated function.
        #[arg(long, hide = true, value_name = "POS")]
        inject_fault: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the closed-form Hamming weights of the max-AI functions.
    Weights {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Clone, Copy)]
struct Range {
    #[arg(short = 'n')]
    n: usize,
    /// Run every even n from -n up to this value.
    #[arg(long, value_name = "M")]
    to: Option<usize>,
}

impl Range {
    fn values(self) -> impl Iterator<Item = usize> {
        let hi = self.to.unwrap_or(self.n).max(self.n);
        (self.n..=hi).step_by(2)
    }
}

#[derive(Args)]
struct SvvArg {
    /// Value vector, v(0) first; `-` reads stdin.
    #[arg(long)]
    svv: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Capacity(String),
    #[error("verification failed")]
    Verification,
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<maxai::Error> for CliError {
    fn from(e: maxai::Error) -> Self {
        match e {
            maxai::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = match cli.command {
        Command::Enumerate { range, format } => {
            commands::enumerate(&mut out, range.values(), format)
        }
        Command::Ai { input, format } => commands::ai(&mut out, &input.svv, format),
        Command::Classify { input, format } => commands::classify(&mut out, &input.svv, format),
        Command::Convert { svv, sanf } => commands::convert(&mut out, svv, sanf),
        Command::Sets { n, format } => commands::sets(&mut out, n, format),
        Command::Verify {
            range,
            exhaustive,
            sample,
            seed,
            inject_fault,
            format,
        } => {
            let mode = match sample {
                Some(count) if !exhaustive => commands::Mode::Sample { count, seed },
                _ => commands::Mode::Exhaustive,
            };
            commands::verify(&mut out, range.values(), mode, inject_fault, format)
        }
        Command::Weights { n, format } => commands::weights(&mut out, n, format),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verification) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
