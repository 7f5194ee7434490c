use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ratclass::config::DEFAULT_LIMIT;
use ratclass::shell::{run, Command, Options};

/// Classify quadratic and cubic rational expressions over finite fields up
/// to composition with Möbius transformations on both sides.
#[derive(Parser, Debug)]
#[command(name = "ratclass", version)]
struct Cli {
    /// Field designator: `p^n` or a prime power such as `9`.
    #[arg(long, global = true)]
    field: Option<String>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized root splitting.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Cap on the size of any enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: u64,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Equivalence class, canonical representative and witness.
    Classify { expr: String },
    /// Ramification points, indices and branch points.
    Ramify { expr: String },
    /// Whether two expressions are equivalent, with a witness.
    Equiv { left: String, right: String },
    /// Partition all expressions of a degree into orbits.
    Orbits {
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Recompute a counting statement by enumeration.
    Verify {
        #[arg(long)]
        statement: String,
    },
    /// Print the canonical representative of a case.
    Canon {
        #[arg(long = "case")]
        case: String,
        /// `k` for char2-one-point, a field element for char2-split and char2-conjugate.
        #[arg(long)]
        param: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let Some(field) = cli.field else {
        eprintln!("error: --field is required");
        return ExitCode::from(1);
    };
    let command = match cli.command {
        Sub::Classify { expr } => Command::Classify { field, expr },
        Sub::Ramify { expr } => Command::Ramify { field, expr },
        Sub::Equiv { left, right } => Command::Equiv { field, left, right },
        Sub::Orbits { degree } => Command::Orbits { field, degree },
        Sub::Verify { statement } => Command::Verify { field, statement },
        Sub::Canon { case, param } => Command::Canon { field, case, param },
    };
    let opts = Options { json: cli.json, seed: cli.seed, limit: cli.limit };
    let outcome = run(&command, &opts);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
