use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use enrichkit::report::Report;
use enrichkit::run::{run, Command, Options};
use enrichkit::spec::parse_spec_file;
use enrichkit_core::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

/// Validate finite enriched-category declarations and check Yoneda and weighted-colimit properties on them.
#[derive(Debug, Parser)]
#[command(name = "enrichkit", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input file (JSON); required by every command except `fuzz`.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Run only the checks or instances with this name.
    #[arg(long)]
    check: Option<String>,
    /// Seed for the random corpus of `fuzz`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Caps set cardinalities and search nodes.
    #[arg(long)]
    max_size: Option<usize>,
    /// Also write the machine-readable report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Format of the report on standard output.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let spec = match (&args.spec, args.command) {
        (Some(path), _) => match parse_spec_file(path) {
            Ok(s) => Some(s),
            Err(e) => {
                eprintln!("enrichkit: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        (None, Command::Fuzz) => None,
        (None, c) => {
            eprintln!("enrichkit: `{}` needs --spec <path>", c.name());
            return ExitCode::from(2);
        }
    };
    let mut limits = Limits::default();
    if let Some(n) = args.max_size {
        limits.max_card = n;
        limits.max_candidates = n as u64;
    }
    let opts = Options {
        check: args.check,
        seed: args.seed,
        limits,
        ..Options::default()
    };
    let report: Report = run(args.command, spec.as_ref(), &opts);
    match args.format {
        Format::Human => print!("{}", report.human()),
        Format::Machine => print!("{}", report.machine()),
    }
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, report.machine()) {
            eprintln!("enrichkit: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
