use std::process::ExitCode;

use clap::{Parser, Subcommand};
use metarig::{CliError, DEFAULT_BUDGET, EXIT_INPUT, EXIT_OK};
use metarig_core::fingerprint::DEFAULT_ENUMERATION_BUDGET;

/// Decide whether a finitely presented metabelian group is free metabelian,
/// and compare groups through their finite quotients.
#[derive(Parser)]
#[command(name = "metarig", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Step budget: Groebner steps for `analyze` (default 1000000, or
    /// METARIG_BUDGET), relator evaluations for `compare` (default 100000000).
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,

    /// Seed for randomized harness hooks. Every command is deterministic, so
    /// the value is accepted and ignored.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the freeness test on a presentation file. Exit code 3 if the
    /// budget runs out.
    Analyze { path: String },
    /// Compare two presentations by hom/epi counts into a panel of finite
    /// metabelian groups and by finite module quotients.
    Compare {
        first: String,
        second: String,
        /// Keep only default panel targets of at most this order.
        #[arg(long, value_name = "N")]
        max_order: Option<usize>,
        /// Extra target given as a Cayley table file (repeatable).
        #[arg(long = "target", value_name = "FILE")]
        targets: Vec<String>,
    },
    /// Normal form of a word over x1..xN in the free metabelian group.
    Magnus {
        word: String,
        /// Number of generators.
        #[arg(long, default_value_t = 2)]
        rank: usize,
        /// Also print the image under e_j -> x_j - 1.
        #[arg(long)]
        check_derived: bool,
    },
}

fn analyze_budget(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("METARIG_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("METARIG_BUDGET is not a step count: '{v}'"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze { path } => {
            let budget = analyze_budget(cli.budget)?;
            let p = metarig::read_presentation(&path)?;
            let report = metarig::analyze(&p, budget);
            if cli.json {
                print!("{}", metarig::to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.exit_code())
        }
        Command::Compare {
            first,
            second,
            max_order,
            targets,
        } => {
            let p1 = metarig::read_presentation(&first)?;
            let p2 = metarig::read_presentation(&second)?;
            let extra = targets
                .iter()
                .map(|t| metarig::read_target(t))
                .collect::<Result<Vec<_>, _>>()?;
            let panel = metarig::panel(max_order, extra);
            let report = metarig::compare(
                [first, second],
                &p1,
                &p2,
                &panel,
                cli.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET),
            );
            if cli.json {
                print!("{}", metarig::to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(EXIT_OK)
        }
        Command::Magnus {
            word,
            rank,
            check_derived,
        } => {
            let report = metarig::magnus(&word, rank, check_derived)?;
            if cli.json {
                print!("{}", metarig::to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
