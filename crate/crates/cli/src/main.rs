use std::path::PathBuf;
use std::process::ExitCode;

use certainty_core::relations::list_relations;
use clap::{Parser, Subcommand};

mod config;
mod error;
mod output;
mod run;
mod selfcheck;

use error::CliError;
use run::RunOptions;

/// Evaluate quantum uncertainty relations on finite-dimensional models.
#[derive(Parser)]
#[command(name = "certainty", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and write reports.json, summary.csv and curves/.
    Run {
        config: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
        /// Output directory; overrides $CERTAINTY_OUT_DIR and the config.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Base seed; overrides the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List the relation evaluators.
    ListRelations,
    /// Check constant identities, the eigensolver and the covariance gates.
    Selfcheck {
        #[arg(long, hide = true, value_parser = clap::builder::PossibleValuesParser::new(selfcheck::CHECK_NAMES))]
        perturb: Option<String>,
    },
}

fn list() {
    let rels = list_relations();
    let head: Vec<String> = rels.iter().map(|r| format!("{} → {}", r.id, r.equation)).collect();
    let w = head.iter().map(|h| h.chars().count()).max().unwrap_or(0);
    for (h, r) in head.iter().zip(rels) {
        let pad = w - h.chars().count();
        println!("{h}{}  {}  [premise: {}]", " ".repeat(pad), r.statement, r.premise);
    }
}

fn selfcheck(perturb: Option<&str>) -> Result<bool, CliError> {
    let mut ok = true;
    for c in selfcheck::checks(perturb)? {
        let err = (c.measured - c.reference).abs();
        if c.ok() {
            println!("ok    {:<24} |Δ| = {err:.3e}", c.name);
        } else {
            ok = false;
            println!(
                "FAIL  {:<24} measured {} vs reference {} (|Δ| = {err:.3e} > {:e})",
                c.name, c.measured, c.reference, c.tolerance
            );
        }
    }
    Ok(ok)
}

fn run(config: PathBuf, opts: RunOptions) -> Result<bool, CliError> {
    let outcome = run::run(&config, &opts)?;
    print!("{}", output::summary_csv(&outcome.summary));
    println!("artifacts written to {}", outcome.out_dir.display());
    Ok(outcome.failures() == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            config,
            workers,
            out,
            seed,
        } => run(config, RunOptions { workers, out, seed }),
        Command::ListRelations => {
            list();
            Ok(true)
        }
        Command::Selfcheck { perturb } => selfcheck(perturb.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
