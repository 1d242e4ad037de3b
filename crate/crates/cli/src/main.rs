//! `coring-lab`: load instance files describing finite algebras, group
//! actions, and coring constructions; run named computations; emit a
//! machine-readable JSON report and a human-readable summary.

mod instance;
mod report;
mod tasks;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use instance::{InstanceFile, Resolver};
use report::Report;
use tasks::{run_task, TASK_NAMES};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation { pointer: String, message: String },
    UnknownTask(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Validation { pointer, message } => {
                write!(f, "validation error at {pointer}: {message}")
            }
            CliError::UnknownTask(t) => {
                write!(f, "unknown task `{t}` (known: {})", TASK_NAMES.join(", "))
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "coring-lab",
    about = "Exact computations with corings over finite-dimensional algebras over prime fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of an instance file and report verdicts.
    Run {
        /// Path to the JSON instance file.
        file: PathBuf,
        /// Run only tasks with these names (repeatable).
        #[arg(long = "task")]
        task: Vec<String>,
        /// Override every enumeration budget.
        #[arg(long)]
        budget: Option<u64>,
        /// Write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Suppress the text summary.
        #[arg(long)]
        quiet: bool,
    },
    /// Print the definition a task checks.
    Explain {
        /// Task name from the fixed vocabulary.
        task: String,
    },
}

fn run(
    file: PathBuf,
    filter: Vec<String>,
    budget: Option<u64>,
    json: Option<PathBuf>,
    quiet: bool,
) -> Result<bool, CliError> {
    for name in &filter {
        if !TASK_NAMES.contains(&name.as_str()) {
            return Err(CliError::UnknownTask(name.clone()));
        }
    }
    let text = std::fs::read_to_string(&file)
        .map_err(|e| CliError::Parse(format!("{}: {e}", file.display())))?;
    let parsed: InstanceFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut resolver = Resolver::new(parsed, budget);

    let selected: Vec<instance::TaskSpec> = resolver
        .tasks()
        .iter()
        .filter(|t| filter.is_empty() || filter.contains(&t.task))
        .cloned()
        .collect();

    let mut results = Vec::new();
    let mut timings: Vec<Duration> = Vec::new();
    for spec in &selected {
        let start = Instant::now();
        results.push(run_task(&mut resolver, spec)?);
        timings.push(start.elapsed());
    }
    let report = Report::new(file.display().to_string(), results);
    if let Some(path) = json {
        std::fs::write(&path, report.to_json())
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    }
    if !quiet {
        print!("{}", report.summary(&timings));
    }
    Ok(report.all_passing())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run {
            file,
            task,
            budget,
            json,
            quiet,
        } => run(file, task, budget, json, quiet),
        Command::Explain { task } => tasks::explain(&task).map(|text| {
            println!("{text}");
            true
        }),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("coring-lab: {e}");
            ExitCode::from(2)
        }
    }
}
