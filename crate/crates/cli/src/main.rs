use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mobile_hook_core::oracle::DEFAULT_CAP;

use mobile_hook_cli::commands::{self, CorpusSize, Kind, Report};
use mobile_hook_cli::error::CliError;
use mobile_hook_cli::schema;

/// Exact linear-extension counts and q-analogues for mobile posets.
#[derive(Parser, Debug)]
#[command(name = "mobile-hook", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of linear extensions from the hook formula.
    Count { input: Input },
    /// e_q^maj under the reversed Schur labeling.
    MajPoly { input: Input },
    /// e_q^inv under the inversion labeling (tree hangings only).
    InvPoly { input: Input },
    /// Excited diagrams with their w, w' and p_D exponents.
    Excited { input: Input },
    /// Plain and modified hook lengths of every cell of λ.
    Hooks { input: Input },
    /// Brute-force count and both q-polynomials for a mobile or raw poset.
    Oracle {
        input: Input,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Lower and upper bounds on the count from the initial excited diagram.
    Bounds { input: Input },
    /// Checks every formula against the oracle on a seeded corpus sample.
    Verify {
        #[arg(long, value_enum, default_value_t = CorpusSize::Small)]
        corpus: CorpusSize,
        #[arg(long, default_value_t = 200)]
        sample: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zigzag strips with chains (c) or points (a) on every valley.
    EulerFamily {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

/// A file path, or `-` for standard input.
#[derive(Clone, Debug)]
struct Input(PathBuf);

impl std::str::FromStr for Input {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Input(PathBuf::from(s)))
    }
}

impl Input {
    fn read(&self) -> Result<String, CliError> {
        if self.0.as_os_str() == "-" {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        } else {
            Ok(std::fs::read_to_string(&self.0)?)
        }
    }

    fn mobile(&self) -> Result<mobile_hook_core::mobile::MobilePoset, CliError> {
        schema::parse_mobile(&self.read()?)
    }
}

fn render(report: &Report, format: Format) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            for doc in &report.json {
                writeln!(out, "{doc}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&report.header)?;
            for row in &report.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let report = match &cli.command {
        Command::Count { input } => commands::count(&input.mobile()?)?,
        Command::MajPoly { input } => commands::maj_poly(&input.mobile()?)?,
        Command::InvPoly { input } => commands::inv_poly(&input.mobile()?)?,
        Command::Excited { input } => commands::excited(&input.mobile()?)?,
        Command::Hooks { input } => commands::hooks(&input.mobile()?)?,
        Command::Oracle { input, cap } => {
            commands::oracle(&schema::parse_any(&input.read()?)?, *cap)?
        }
        Command::Bounds { input } => commands::bounds_report(&input.mobile()?)?,
        Command::Verify {
            corpus,
            sample,
            seed,
        } => {
            let (report, failures) = commands::verify(*corpus, *sample, *seed)?;
            render(&report, cli.format)?;
            if failures > 0 {
                return Err(CliError::Mismatch(failures));
            }
            return Ok(());
        }
        Command::EulerFamily { kind, p, k, cap } => commands::euler(*kind, *p, *k, *cap)?,
    };
    render(&report, cli.format)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
