use std::fs;
use std::io::{self, Read};
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use matchcert::io::{parse_edge_list, parse_graph6};
use matchcert::{Graph, OracleLimits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One graph6 record.
    G6,
    /// `n <count>` header followed by `u v` lines.
    Edges,
}

/// Reads a file, or stdin when the path is `-`.
pub fn read_source(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Edge lists open with an `n` header line; anything else is taken as graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.split_whitespace().next() == Some("n") => Format::Edges,
        _ => Format::G6,
    }
}

pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Edges => Ok(parse_edge_list(text)?),
        Format::G6 => {
            let mut records = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let Some(record) = records.next() else {
                bail!("no graph6 record found");
            };
            if records.next().is_some() {
                bail!("expected a single graph6 record; use `batch` for several");
            }
            Ok(parse_graph6(record)?)
        }
    }
}

pub fn load_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text = read_source(path)?;
    parse_graph(&text, format).with_context(|| format!("parsing {}", path.display()))
}

/// Oracle limits, with both ceilings replaced by `MATCHCERT_MAX_N` when set.
pub fn oracle_limits() -> Result<OracleLimits> {
    match std::env::var("MATCHCERT_MAX_N") {
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .with_context(|| format!("MATCHCERT_MAX_N={raw:?} is not a vertex count"))?;
            Ok(OracleLimits::uniform(n))
        }
        Err(std::env::VarError::NotPresent) => Ok(OracleLimits::default()),
        Err(e) => bail!("MATCHCERT_MAX_N: {e}"),
    }
}
