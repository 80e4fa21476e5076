use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use hdgroups_cli::cache::{Cache, CacheError, CACHE_DIR_ENV};
use hdgroups_cli::commands;
use hdgroups_cli::inspect::{inspect, Kind, Selector};
use hdgroups_cli::table::{check_rows, compute_table, write_table, TableFormat};

#[derive(Parser)]
#[command(
    name = "hdgroups",
    version,
    about = "Cat¹-groups, cat²-groups and crossed squares on groups of order at most 30"
)]
struct Cli {
    /// Directory for cached classification results.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classification table.
    Table {
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..=30))]
        max_order: u64,
        /// Also compute the rows that are skipped by default (16/14).
        #[arg(long)]
        heavy: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Compare against the published values; exit 1 on any mismatch.
        #[arg(long)]
        check: bool,
    },
    /// Show structures on one catalog group.
    Inspect {
        /// cat1, cat2 or xsq.
        kind: Kind,
        order: usize,
        id: usize,
        /// count, total, classes, families, or a 1-based position.
        selector: Selector,
    },
    /// Convert a cat2 document to an xsq document or back.
    Convert {
        /// Input file, or `-` for standard input.
        input: PathBuf,
    },
    /// Print the axiom report for a cat1, cat2 or xsq document.
    Check {
        /// Input file, or `-` for standard input.
        input: PathBuf,
    },
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn warn(e: &CacheError) {
    eprintln!("warning: {e}; recomputing");
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let cache = cli.cache_dir.map(Cache::new);
    match cli.command {
        Command::Table { max_order, heavy, format, check } => {
            let rows = compute_table(max_order as usize, heavy, cache.as_ref(), &mut warn);
            let format = match format {
                Format::Csv => TableFormat::Csv,
                Format::Tsv => TableFormat::Tsv,
            };
            write_table(&rows, format, std::io::stdout().lock())?;
            if check {
                for row in rows.iter().filter(|r| r.counts.is_none()) {
                    eprintln!("{}/{}: skipped (pass --heavy to compute)", row.order, row.id);
                }
                let mismatches = check_rows(&rows);
                for m in &mismatches {
                    eprintln!("mismatch: {m}");
                }
                let computed = rows.iter().filter(|r| r.counts.is_some()).count();
                eprintln!("checked {computed} rows: {} mismatching cells", mismatches.len());
                if !mismatches.is_empty() {
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Inspect { kind, order, id, selector } => {
            print!("{}", inspect(kind, order, id, selector, cache.as_ref(), &mut warn)?);
        }
        Command::Convert { input } => print!("{}", commands::convert(&read_input(&input)?)?),
        Command::Check { input } => {
            let (report, valid) = commands::check(&read_input(&input)?)?;
            print!("{report}");
            if !valid {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
