use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use supercong::theorems::StatementId;
use supercong_cli::{emit_report, exit_code, run, CliError, Format, JobSpec};

#[derive(Parser)]
#[command(name = "supercong", version, about = "Exact verification of q-supercongruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one statement, or `all`.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy)]
enum FormatArg {
    Text,
    Json,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Statement id (e.g. thm-a, wei-ff, cor-a) or `all`.
    statement: String,
    /// Comma-separated n values.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<u32>>,
    /// Comma-separated primes (p-adic statements).
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<u64>>,
    #[arg(long, default_value_t = 1)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// p-adic precision N (at most the displayed one).
    #[arg(long)]
    precision: Option<u32>,
    /// Allow Γ_p products beyond a million factors.
    #[arg(long)]
    heavy_ok: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use each statement's small default n and p values.
    #[arg(long)]
    small: bool,
    #[arg(long, env = "SUPERCONG_WORKERS")]
    workers: Option<usize>,
}

fn job_of(args: &VerifyArgs) -> Result<JobSpec, CliError> {
    let statements = if args.statement == "all" {
        StatementId::ALL.to_vec()
    } else {
        let known: Vec<_> = StatementId::ALL.iter().map(|s| s.as_str()).collect();
        let id = args.statement.parse().map_err(|e: supercong::Error| {
            CliError::Usage(format!("{e}; known ids: all, {}", known.join(", ")))
        })?;
        vec![id]
    };
    let (n_list, p_list) = if args.small { (None, None) } else { (args.n.clone(), args.p.clone()) };
    Ok(JobSpec {
        statements,
        n_list,
        p_list,
        trials: args.trials,
        seed: args.seed,
        precision: args.precision,
        heavy_ok: args.heavy_ok,
        workers: args.workers,
    })
}

fn execute(args: &VerifyArgs) -> Result<i32, CliError> {
    let job = job_of(args)?;
    let reports = run(&job)?;
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    match &args.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit_report(&reports, format, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = io::stdout().lock();
            emit_report(&reports, format, &mut w)?;
        }
    }
    Ok(exit_code(&reports))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Command::Verify(args) = cli.command;
    match execute(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("supercong: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
