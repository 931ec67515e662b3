//! `matchcert`: certify graphs with a perfect matching or a Tutte violator.

mod input;

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use rayon::prelude::*;

use matchcert::io::{parse_graph6, CertificateDocument, CertificateError, Payload};
use matchcert::sweep::{run_all, SuiteScale, SweepConfig};
use matchcert::{Certifier, Oracle};

use input::{load_graph, oracle_limits, read_source, Format};

const VERIFICATION_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;

/// Lines certified concurrently before their output is flushed.
const BATCH_CHUNK: usize = 4096;

#[derive(Parser)]
#[command(name = "matchcert", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify one graph and write the certificate as JSON.
    Certify {
        /// Graph file, or `-` for stdin.
        input: PathBuf,
        /// Write the certificate here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Input format; detected from the content when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check a certificate against a graph.
    Verify {
        input: PathBuf,
        certificate: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Answer by exhaustive search (small graphs only, see MATCHCERT_MAX_N).
    Oracle {
        input: PathBuf,
        /// Also count the perfect matchings.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Certify every graph6 line of a file; one JSON certificate per line on stdout.
    Batch {
        /// File of graph6 records, or `-` for stdin.
        input: PathBuf,
    },
    /// Run the acceptance sweep at a chosen scale.
    Selftest {
        /// Largest vertex count in the dichotomy corpus.
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_n: u64,
        /// Sampled graphs per vertex count above 5.
        #[arg(long, default_value_t = 50_000)]
        samples: usize,
        #[arg(long, default_value_t = SweepConfig::default().seed)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(INPUT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("matchcert: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Certify {
            input,
            output,
            format,
        } => certify(&input, output.as_deref(), format),
        Command::Verify {
            input,
            certificate,
            format,
        } => verify(&input, &certificate, format),
        Command::Oracle {
            input,
            count,
            format,
        } => oracle(&input, count, format),
        Command::Batch { input } => batch(&input),
        Command::Selftest {
            max_n,
            samples,
            seed,
        } => Ok(selftest(max_n as usize, samples, seed)),
    }
}

fn certify(input: &Path, output: Option<&Path>, format: Option<Format>) -> Result<ExitCode> {
    let g = load_graph(input, format)?;
    let cert = match Certifier::new().certify(&g) {
        Ok(cert) => cert,
        Err(e) => {
            eprintln!("matchcert: certificate failed self-check: {e}");
            return Ok(ExitCode::from(VERIFICATION_FAILED));
        }
    };
    let doc = match CertificateDocument::new(&g, &cert) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("matchcert: {e}");
            return Ok(ExitCode::from(VERIFICATION_FAILED));
        }
    };
    let json = doc.to_json();
    match output {
        Some(path) => {
            fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?
        }
        None => println!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(input: &Path, certificate: &Path, format: Option<Format>) -> Result<ExitCode> {
    let g = load_graph(input, format)?;
    let text = read_source(certificate)?;
    let doc = CertificateDocument::from_json(&text)
        .with_context(|| format!("parsing {}", certificate.display()))?;
    match doc.verify(&g) {
        Ok(()) => {
            let kind = match doc.payload {
                Payload::PerfectMatching(_) => "perfect matching",
                Payload::TutteViolator(_) => "Tutte violator",
            };
            println!("ok: {kind} verified");
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ CertificateError::Json(_)) => Err(e.into()),
        Err(e) => {
            println!("rejected: {e}");
            Ok(ExitCode::from(VERIFICATION_FAILED))
        }
    }
}

fn oracle(input: &Path, count: bool, format: Option<Format>) -> Result<ExitCode> {
    let g = load_graph(input, format)?;
    let oracle = Oracle::new(oracle_limits()?);
    let matching = oracle.perfect_matching(&g)?;
    match &matching {
        Some(m) => {
            let pairs: Vec<[usize; 2]> = m.edges().into_iter().map(<[usize; 2]>::from).collect();
            println!("perfect_matching: {pairs:?}");
        }
        None => println!("perfect_matching: none"),
    }
    // the violator sweep is only needed, and only affordable, when no matching exists
    if matching.is_none() {
        match oracle.violator(&g)? {
            Some(u) => println!("violator: {:?}", u.to_vec()),
            None => println!("violator: none"),
        }
    }
    if count {
        println!("count: {}", oracle.count_perfect_matchings(&g)?);
    }
    Ok(ExitCode::SUCCESS)
}

enum LineOutcome {
    Certified { json: String, matched: bool },
    Malformed(String),
    Failed(String),
}

fn certify_line(record: &str) -> LineOutcome {
    let g = match parse_graph6(record) {
        Ok(g) => g,
        Err(e) => return LineOutcome::Malformed(e.to_string()),
    };
    let checked = Certifier::new()
        .certify(&g)
        .map_err(|e| e.to_string())
        .and_then(|cert| CertificateDocument::new(&g, &cert).map_err(|e| e.to_string()));
    match checked {
        Ok(doc) => LineOutcome::Certified {
            matched: matches!(doc.payload, Payload::PerfectMatching(_)),
            json: doc.to_json_line(),
        },
        Err(e) => LineOutcome::Failed(e),
    }
}

#[derive(Default)]
struct BatchSummary {
    records: usize,
    matchings: usize,
    violators: usize,
    malformed: usize,
    failed: usize,
}

impl BatchSummary {
    fn print(&self) {
        eprintln!("{:<18}{:>10}", "records", self.records);
        eprintln!("{:<18}{:>10}", "perfect_matching", self.matchings);
        eprintln!("{:<18}{:>10}", "tutte_violator", self.violators);
        eprintln!("{:<18}{:>10}", "malformed", self.malformed);
        eprintln!("{:<18}{:>10}", "failed", self.failed);
    }
}

fn batch(input: &Path) -> Result<ExitCode> {
    let reader: Box<dyn BufRead> = if input.as_os_str() == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let file = fs::File::open(input).with_context(|| format!("opening {}", input.display()))?;
        Box::new(BufReader::new(file))
    };
    let mut out = BufWriter::new(io::stdout().lock());
    let mut summary = BatchSummary::default();
    let mut chunk: Vec<(usize, String)> = Vec::with_capacity(BATCH_CHUNK);
    let mut lines = reader.lines().enumerate();
    loop {
        chunk.clear();
        for (i, line) in lines.by_ref() {
            let line = line.with_context(|| format!("reading {}", input.display()))?;
            let record = line.trim();
            if !record.is_empty() {
                chunk.push((i + 1, record.to_string()));
            }
            if chunk.len() == BATCH_CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<LineOutcome> = chunk.par_iter().map(|(_, r)| certify_line(r)).collect();
        for ((line_no, _), outcome) in chunk.iter().zip(outcomes) {
            summary.records += 1;
            match outcome {
                LineOutcome::Certified { json, matched } => {
                    if matched {
                        summary.matchings += 1;
                    } else {
                        summary.violators += 1;
                    }
                    writeln!(out, "{json}")?;
                }
                LineOutcome::Malformed(e) => {
                    summary.malformed += 1;
                    eprintln!("line {line_no}: skipped: {e}");
                }
                LineOutcome::Failed(e) => {
                    summary.failed += 1;
                    eprintln!("line {line_no}: certificate failed self-check: {e}");
                }
            }
        }
        out.flush()?;
    }
    summary.print();
    Ok(if summary.failed > 0 {
        ExitCode::from(VERIFICATION_FAILED)
    } else if summary.malformed > 0 {
        ExitCode::from(INPUT_ERROR)
    } else {
        ExitCode::SUCCESS
    })
}

fn selftest(max_n: usize, samples: usize, seed: u64) -> ExitCode {
    let config = SweepConfig {
        exhaustive_max_n: max_n.min(5),
        sampled_ns: (6..=max_n).collect(),
        samples_per_n: samples,
        seed,
    };
    println!(
        "corpus: every labeled graph on n <= {}, {} samples each for n in {:?}",
        config.exhaustive_max_n, config.samples_per_n, config.sampled_ns
    );
    let reports = run_all(&config, &SuiteScale::default());
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    println!("{passed} of {} criteria passed", reports.len());
    if passed == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFICATION_FAILED)
    }
}
