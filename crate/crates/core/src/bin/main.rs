use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use negation_transfer::corpus::{load_record_lines, run_goldtest, run_report, translate_record, TransferRecord};
use negation_transfer::Error;
use negation_transfer::lexicon::Lexicons;

#[derive(Parser)]
#[command(name = "negation-transfer", version, about = "English to Korean negation transfer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Delimited,
}

#[derive(clap::Args)]
struct Common {
    /// JSONL file of transfer records.
    #[arg(long)]
    input: PathBuf,
    /// Directory of lexicon tables; the built-in tables are used otherwise.
    #[arg(long)]
    lexicons: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Translate each record and print the Korean sentence.
    Translate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print the applied plan components under each sentence.
        #[arg(long)]
        trace: bool,
    },
    /// Compare every translation byte-for-byte with its gold sentence.
    Goldtest {
        #[command(flatten)]
        common: Common,
    },
    /// Print the structure and kind census of the input.
    Report {
        #[command(flatten)]
        common: Common,
    },
}

type Lines = Vec<Result<TransferRecord, Error>>;

fn load(common: &Common) -> anyhow::Result<(Lexicons, Lines)> {
    let lexicons = match &common.lexicons {
        Some(dir) => Lexicons::load_dir(dir).with_context(|| format!("loading lexicons from {}", dir.display()))?,
        None => Lexicons::builtin(),
    };
    let records = load_record_lines(Path::new(&common.input))
        .with_context(|| format!("reading records from {}", common.input.display()))?;
    Ok((lexicons, records))
}

fn split(lines: Lines) -> (Vec<TransferRecord>, Vec<Error>) {
    let mut records = Vec::new();
    let mut bad = Vec::new();
    for line in lines {
        match line {
            Ok(r) => records.push(r),
            Err(e) => bad.push(e),
        }
    }
    (records, bad)
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Translate { common, format, trace } => {
            let (lexicons, records) = load(&common)?;
            let mut ok = true;
            for line in &records {
                match line.as_ref().map_err(|e| e.to_string()).and_then(|r| {
                    translate_record(&lexicons, r).map_err(|e| e.to_string())
                }) {
                    Ok(t) => {
                        match format {
                            Format::Text => println!("{}\t{}", t.id, t.text),
                            Format::Delimited => {
                                let suffix = t.plan.as_ref().map_or("-".to_owned(), |p| p.suffix.to_string());
                                println!(
                                    "{}\t{}\t{}\t{}\t{}",
                                    t.id, t.analysis.structure, t.analysis.kind, suffix, t.text
                                );
                            }
                        }
                        if trace {
                            for line in &t.trace {
                                println!("  {line}");
                            }
                        }
                    }
                    Err(e) => {
                        println!("error: {e}");
                        ok = false;
                    }
                }
            }
            Ok(ok)
        }
        Command::Goldtest { common } => {
            let (lexicons, lines) = load(&common)?;
            let (records, bad) = split(lines);
            for e in &bad {
                println!("FAIL {e}");
            }
            let report = run_goldtest(&lexicons, &records);
            for outcome in report.failures() {
                let gold = outcome.gold.as_deref().unwrap_or("<no gold>");
                match &outcome.produced {
                    Ok(p) => println!("FAIL {}\n  gold: {gold}\n  got:  {p}", outcome.id),
                    Err(e) => println!("FAIL {}\n  gold: {gold}\n  error: {e}", outcome.id),
                }
            }
            println!("{}/{} exact", report.passed(), report.total() + bad.len());
            Ok(bad.is_empty() && report.passed() == report.total())
        }
        Command::Report { common } => {
            let (lexicons, lines) = load(&common)?;
            let (records, bad) = split(lines);
            for e in &bad {
                println!("error: {e}");
            }
            match run_report(&lexicons, &records) {
                Ok(report) => {
                    println!("{report}");
                    Ok(bad.is_empty())
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
