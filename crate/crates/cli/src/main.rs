mod count;
mod error;
mod moments;
mod output;
mod simulate;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use error::{CliError, CliResult};
use output::{Format, Rendered};

/// Exact moments of free products and orthogonally mixed diagonal laws,
/// non-crossing partition counts, identity checks and Monte Carlo comparison.
///
/// Exit codes: 0 every check held, 1 a mathematical check failed, 2 usage or
/// input error.
#[derive(Debug, Parser)]
#[command(name = "freemix", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads for parallel trials; results do not depend on it.
    #[arg(long, global = true, env = "FREEMIX_THREADS")]
    threads: Option<usize>,

    /// Omit the timestamp and wall time so that reruns are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact even-moment tables for the mixing operation and Fuss-Catalan chains.
    Moments(moments::MomentsArgs),
    /// Closed-form sizes of non-crossing partition families.
    Count(count::CountArgs),
    /// Run the exhaustive identity suites.
    Verify(verify::VerifyArgs),
    /// Estimate normalized trace powers of random matrices.
    Simulate(simulate::SimulateArgs),
}

fn run(cli: &Cli) -> CliResult<Rendered> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    match &cli.command {
        Command::Moments(a) => moments::run(a),
        Command::Count(a) => count::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Simulate(a) => simulate::run(a, !cli.no_timestamp),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = rendered.text(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if rendered.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
