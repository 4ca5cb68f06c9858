use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hopfkit::output::Format;
use hopfkit::suite::{run_suite, Options, SuiteName};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

/// Exact verification of finite-dimensional Hopf algebra structures.
#[derive(Parser, Debug)]
#[command(name = "hopfkit", version)]
struct Cli {
    /// Ground field: Q or "Fp <p>".
    #[arg(long, default_value = "Q")]
    field: String,
    /// A structure file or a catalog name (k, c<n>, c2xc2, monoid_s, sweedler, taft:n:q).
    #[arg(long)]
    input: Option<String>,
    /// Suite to run: hopf-check, pair-involution, double, rmatrix, trimodule, boolean, mackey, crossed,
    /// reconstruction or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on brute-force enumeration over finite fields.
    #[arg(long, default_value_t = 1 << 16)]
    budget: u128,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("unknown suite `{0}`")]
    Suite(String),
    #[error(transparent)]
    Core(#[from] hopfkit_core::Error),
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let field = hopfkit::format::parse_field(&cli.field)?;
    let suite = SuiteName::parse(&cli.suite).ok_or_else(|| CliError::Suite(cli.suite.clone()))?;
    let opts = Options { field, input: cli.input.clone(), seed: cli.seed, budget: cli.budget };
    let report = run_suite(suite, &opts)?;
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Structured => Format::Structured,
    };
    Ok((report.render(format), report.exit_code()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
