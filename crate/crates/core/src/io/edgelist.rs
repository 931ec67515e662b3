//! Plain-text edge lists:
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing `n <count>` header")]
    MissingHeader,
}

fn syntax(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (&graph, fields.as_slice()) {
            (None, ["n", count]) => {
                let n = count
                    .parse::<usize>()
                    .map_err(|_| syntax(line, format!("bad vertex count `{count}`")))?;
                graph =
                    Some(Graph::empty(n).map_err(|source| EdgeListError::Graph { line, source })?);
            }
            (None, _) => return Err(syntax(line, "expected `n <count>`")),
            (Some(g), [u, v]) => {
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| syntax(line, format!("bad vertex id `{s}`")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                let next = g
                    .add_edge(u, v)
                    .map_err(|source| EdgeListError::Graph { line, source })?;
                graph = Some(next);
            }
            (Some(_), _) => return Err(syntax(line, "expected `<u> <v>`")),
        }
    }
    graph.ok_or(EdgeListError::MissingHeader)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.lo(), e.hi()).expect("writing to a String");
    }
    out
}
