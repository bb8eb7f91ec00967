use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rootideals::cells::{CellsTable, MAX_TABLE_N};
use rootideals::groebner::{guard, ResourceLimits};
use rootideals::verify::{exit_code, Parameters, TargetRegistry, VerificationRun, VerifyError};
use rootideals::Rational;

const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "rootideals", version, about = "Exact verification of diagonal root-hyperplane ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one or more verification targets (`all` runs every target).
    Verify {
        #[arg(required = true)]
        targets: Vec<String>,
        #[command(flatten)]
        opts: VerifyOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Bipartition combinatorics.
    Cells {
        #[command(subcommand)]
        command: CellsCommand,
    },
    /// Re-render a saved JSON run.
    Report {
        input: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// List the available targets.
    List,
}

#[derive(Subcommand, Debug)]
enum CellsCommand {
    /// Partitions of 2n with trivial 2-core, hearts, bipartitions, symbols.
    Table {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct VerifyOpts {
    /// Root system label such as B3 or G2.
    #[arg(long = "type")]
    type_label: Option<String>,
    /// Rank for type A checks, size for the cells table.
    #[arg(long)]
    n: Option<u32>,
    /// Highest total degree compared.
    #[arg(long)]
    degree_bound: Option<u32>,
    /// Power for symbolic/ordinary comparisons.
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated parameter values, e.g. `0,1/2,1,3/7`.
    #[arg(long, value_delimiter = ',')]
    c: Option<Vec<String>>,
    #[arg(long)]
    seed: Option<u64>,
    /// Random polynomials per property.
    #[arg(long)]
    samples: Option<usize>,
    /// `ambient` or `essential`.
    #[arg(long)]
    realization: Option<String>,
    /// Run up to this many targets concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Record wall-clock timings in the output.
    #[arg(long)]
    timings: bool,
}

#[derive(clap::Args, Debug)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Json,
    Tsv,
}

fn render(runs: &[VerificationRun], format: Format) -> String {
    match format {
        Format::Json if runs.len() == 1 => runs[0].to_json(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(runs).expect("runs serialize");
            s.push('\n');
            s
        }
        Format::Tsv => runs.iter().map(VerificationRun::to_tsv).collect(),
        Format::Text => runs.iter().map(VerificationRun::to_text).collect(),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parameters(opts: &VerifyOpts) -> Result<Parameters, VerifyError> {
    let c = opts
        .c
        .as_ref()
        .map(|cs| {
            cs.iter()
                .map(|s| s.trim().parse::<Rational>().map_err(|e| VerifyError::Usage(format!("--c `{s}`: {e}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(Parameters {
        type_label: opts.type_label.clone(),
        n: opts.n,
        degree_bound: opts.degree_bound,
        d: opts.d,
        c,
        seed: opts.seed,
        samples: opts.samples,
        realization: opts.realization.clone(),
    })
}

fn verify(targets: &[String], opts: &VerifyOpts, output: &OutputOpts) -> Result<u8> {
    let registry = TargetRegistry::default();
    let names: Vec<String> = if targets.iter().any(|t| t == "all") {
        registry.names().iter().map(|s| s.to_string()).collect()
    } else {
        targets.to_vec()
    };
    let params = match parameters(opts) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    let results = registry.run_many(&names, &params, opts.jobs, opts.timings);
    for r in &results {
        if let Err(e) = r {
            eprintln!("error: {e}");
        }
    }
    let runs: Vec<VerificationRun> = results.iter().filter_map(|r| r.as_ref().ok().cloned()).collect();
    if !runs.is_empty() {
        emit(&render(&runs, output.format), &output.out)?;
    }
    Ok(exit_code(&results) as u8)
}

fn cells_table(n: u32, format: TableFormat, out: &Option<PathBuf>) -> Result<u8> {
    if n > MAX_TABLE_N {
        eprintln!("error: --n must be at most {MAX_TABLE_N}");
        return Ok(EXIT_USAGE);
    }
    let table = CellsTable::build(n);
    let text = match format {
        TableFormat::Tsv => table.to_tsv(),
        TableFormat::Json => table.to_json(),
    };
    emit(&text, out)?;
    Ok(0)
}

fn report(input: &PathBuf, output: &OutputOpts) -> Result<u8> {
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let runs: Vec<VerificationRun> = match serde_json::from_str::<VerificationRun>(&text) {
        Ok(run) => vec![run],
        Err(_) => serde_json::from_str(&text).context("input is not a saved run")?,
    };
    if runs.is_empty() {
        bail!("no runs in {}", input.display());
    }
    emit(&render(&runs, output.format), &output.out)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify { targets, opts, output } => verify(&targets, &opts, &output),
        Command::Cells {
            command: CellsCommand::Table { n, format, out },
        } => cells_table(n, format, &out),
        Command::Report { input, output } => report(&input, &output),
        Command::List => {
            for (name, summary) in TargetRegistry::default().summaries() {
                println!("{name}\t{summary}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match ResourceLimits::from_env() {
        Ok(l) => guard::set_limits(l),
        Err(e) => {
            eprintln!("error: {}: {e}", guard::GUARD_ENV);
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
