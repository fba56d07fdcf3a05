//! `ush`: command-line front end for the unit Shiha toolkit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::CliError;

#[derive(Parser, Debug)]
#[command(name = "ush", version, about = "Unit Shiha distribution: evaluation, fitting, model comparison and simulation")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Master seed for every random draw.
    #[arg(long, global = true, default_value_t = 20240601)]
    seed: u64,

    /// Decimals in tables (default 4) or significant digits for `dist` (default 6).
    #[arg(long, global = true)]
    precision: Option<usize>,

    /// Output file; a directory for `--format plot-data`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// Versioned JSON.
    Structured,
    /// CSV columns with a header row.
    PlotData,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the USh law at given parameters.
    Dist(commands::DistArgs),
    /// Fit families to a dataset and compare them.
    Fit(commands::FitArgs),
    /// Criteria and KS test at given parameters, without fitting.
    Gof(commands::GofArgs),
    /// Descriptives, all-family comparison and plot data for a dataset.
    Analyze(commands::AnalyzeArgs),
    /// Monte Carlo study of the USh estimators.
    Simulate(commands::SimulateArgs),
    /// List the bundled datasets, or print one.
    Datasets(commands::DatasetsArgs),
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Dist(a) => commands::dist(g, a),
        Command::Fit(a) => commands::fit(g, a),
        Command::Gof(a) => commands::gof(g, a),
        Command::Analyze(a) => commands::analyze(g, a),
        Command::Simulate(a) => commands::simulate(g, a),
        Command::Datasets(a) => commands::datasets(g, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
