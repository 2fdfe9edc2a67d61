//! `zprc`: file-driven analyses of convolutional encoders over Z_{p^r}.

mod commands;
mod matrix_file;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "zprc", version, about = "Primeness and distance analysis of convolutional codes over Z_{p^r}")]
struct Cli {
    /// Emit a key-sorted JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zero-prime and factor-prime verdicts, certificates, b-degree.
    Analyze {
        file: PathBuf,
        /// Entry degree bound for the left-factor search.
        #[arg(long, default_value_t = 2)]
        deg_bound: usize,
    },
    /// Free distance, column distances and MDP verdict.
    Distance(DistanceArgs),
    /// Polynomial parity-check matrix of a noncatastrophic encoder.
    Paritycheck { file: PathBuf },
    /// Embed a Z_p encoder into Z_{p^r}.
    Lift {
        file: PathBuf,
        /// Target ring, as `p^r` or the modulus itself.
        #[arg(long)]
        to: String,
        /// Write the lifted encoder here as a matrix file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Finite-weight output from an infinite-weight input of a catastrophic encoder.
    DemoCatastrophic {
        file: PathBuf,
        /// Highest power of d kept in the truncated series.
        #[arg(long, default_value_t = 8)]
        horizon: usize,
    },
}

#[derive(Args, Debug)]
struct DistanceArgs {
    file: PathBuf,
    /// Free distance.
    #[arg(long)]
    free: bool,
    /// Column distances for j = 0..=J.
    #[arg(long, value_name = "J", visible_alias = "max-j")]
    column: Option<usize>,
    /// MDP verdict and L-index.
    #[arg(long)]
    mdp: bool,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Distance(_) => "distance",
            Command::Paritycheck { .. } => "paritycheck",
            Command::Lift { .. } => "lift",
            Command::DemoCatastrophic { .. } => "demo-catastrophic",
        }
    }
}

fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Analyze { file, deg_bound } => commands::analyze(file, *deg_bound),
        Command::Distance(a) => commands::distance(&a.file, a.free, a.column, a.mdp),
        Command::Paritycheck { file } => commands::paritycheck(file),
        Command::Lift { file, to, output } => commands::lift(file, to, output.as_deref()),
        Command::DemoCatastrophic { file, horizon } => commands::demo_catastrophic(file, *horizon),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            let body = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let _ = std::io::stdout().write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            if cli.json {
                let _ = writeln!(std::io::stdout(), "{}", err.to_json(cli.command.name()));
            }
            eprintln!("zprc {}: {err}", cli.command.name());
            ExitCode::from(err.exit_code())
        }
    }
}
