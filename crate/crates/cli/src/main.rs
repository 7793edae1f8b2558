use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sigmafact_core::theorems::DEFAULT_PARTITIONS;
use sigmafact_core::{
    run_sweep, Corpus, CorpusEntry, Error, SigmaPartition, SweepConfig, DEFAULT_LATTICE_LIMIT,
};

mod analyze;

/// Sigma-nilpotent factorizations of finite permutation groups.
#[derive(Parser)]
#[command(name = "sigmafact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sigma-structure of one group under one partition.
    Analyze {
        /// Corpus entry name, or a corpus file holding a single entry.
        #[arg(long)]
        group: String,
        /// Partition such as `2,3|5|rest`.
        #[arg(long)]
        sigma: String,
        /// Corpus to look names up in (default: built-in).
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_LATTICE_LIMIT)]
        lattice_threshold: u64,
    },
    /// Check the theorems, lemmas and scripted examples over a corpus.
    Verify {
        /// Corpus file (default: built-in).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Partition to sweep; repeatable. Defaults to a fixed set of five.
        #[arg(long)]
        sigma: Vec<String>,
        /// Skip groups above this order.
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_LATTICE_LIMIT)]
        lattice_threshold: u64,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0: one per core).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Print the JSON report instead of the text summary.
        #[arg(long)]
        json: bool,
    },
    /// List the groups of a corpus.
    List {
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_corpus(path: Option<&Path>) -> Result<Corpus, Error> {
    match path {
        Some(p) => Corpus::load(p),
        None => Ok(Corpus::builtin()),
    }
}

/// A corpus name, or a file with exactly one entry.
fn resolve_group(query: &str, corpus: &Corpus) -> Result<CorpusEntry, Error> {
    if let Some(e) = corpus.get(query) {
        return Ok(e.clone());
    }
    let path = Path::new(query);
    if path.is_file() {
        let file = Corpus::load(path)?;
        return match file.entries.as_slice() {
            [one] => Ok(one.clone()),
            _ => Err(Error::Corpus(format!(
                "{query}: expected exactly one group, found {}",
                file.entries.len()
            ))),
        };
    }
    Err(Error::Corpus(format!(
        "no group named {query:?} and no such file"
    )))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze {
            group,
            sigma,
            corpus,
            lattice_threshold,
        } => {
            let corpus = load_corpus(corpus.as_deref())?;
            let entry = resolve_group(&group, &corpus)?;
            let sigma: SigmaPartition = sigma.parse()?;
            let g = entry.build()?;
            print!(
                "{}",
                analyze::render(&entry.name, &g, &sigma, lattice_threshold)?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            corpus,
            sigma,
            max_order,
            lattice_threshold,
            out,
            threads,
            json,
        } => {
            let corpus = load_corpus(corpus.as_deref())?;
            let specs: Vec<&str> = if sigma.is_empty() {
                DEFAULT_PARTITIONS.to_vec()
            } else {
                sigma.iter().map(String::as_str).collect()
            };
            let partitions = specs
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<SigmaPartition>, _>>()?;
            let config = SweepConfig {
                partitions,
                max_order,
                lattice_limit: lattice_threshold,
                threads,
            };
            let report = run_sweep(&corpus, &config)?;
            if let Some(path) = &out {
                std::fs::write(path, report.to_json())
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.has_violation() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::List { corpus } => {
            let corpus = load_corpus(corpus.as_deref())?;
            for e in &corpus.entries {
                let g = e.build()?;
                println!("{:<8} degree {:<3} order {}", e.name, e.degree, g.order());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
