use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod report;

use report::{Failure, Report};

#[derive(Parser, Debug)]
#[command(
    name = "quadmon",
    version,
    about = "Quadratic algebras, discriminants and the Artin-Schreier action"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; defaults to json, or text for `verify`.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Isomorphism classes of free quadratic algebras over a finite ring.
    Classify {
        #[arg(long)]
        ring: String,
    },
    /// Discriminant classes and the fibers of the discriminant map.
    Disc {
        #[arg(long)]
        ring: String,
    },
    /// The Artin-Schreier action on discriminant fibers.
    Fibers {
        #[arg(long)]
        ring: String,
        /// Restrict to the fiber over this discriminant.
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<String>,
    },
    /// The group R[4] / wp(R)[4].
    AsGroup {
        #[arg(long)]
        ring: String,
    },
    /// The product (t, n) * (s, m).
    Product {
        #[arg(long)]
        ring: String,
        /// First algebra as `t,n`.
        #[arg(long = "s", allow_hyphen_values = true)]
        first: String,
        /// Second algebra as `s,m`.
        #[arg(long = "t", allow_hyphen_values = true)]
        second: String,
    },
    /// Checks the polynomial identity catalogue.
    Verify {
        #[arg(long)]
        identity: Option<String>,
    },
    /// Sec elements of a ring.
    Sec {
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Classify { ring } => report::classify(ring),
        Command::Disc { ring } => report::disc(ring),
        Command::Fibers { ring, disc } => report::fibers(ring, disc.as_deref()),
        Command::AsGroup { ring } => report::as_group(ring),
        Command::Product {
            ring,
            first,
            second,
        } => report::product(ring, first, second),
        Command::Verify { identity } => report::verify(identity.as_deref()),
        Command::Sec { ring, element } => report::sec(ring, element.as_deref()),
    }
}

fn emit(cli: &Cli, report: &Report) -> io::Result<()> {
    let default = match cli.command {
        Command::Verify { .. } => Format::Text,
        _ => Format::Json,
    };
    let bytes = report.render(cli.format.unwrap_or(default))?;
    match &cli.output {
        Some(path) => File::create(path)?.write_all(&bytes),
        None => io::stdout().lock().write_all(&bytes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli, &report) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
