//! graph6 encoding for graphs on at most 62 vertices.
//!
//! A record is one header byte `n + 63` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ..`),
//! packed six bits per byte, most significant bit first, each byte offset by
//! 63. The last byte is zero-padded.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest vertex count expressible with the one-byte header.
pub const GRAPH6_MAX_N: usize = 62;

const OPTIONAL_PREFIX: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("{0} unexpected bytes after the graph6 body")]
    TrailingGarbage(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 padding bits must be zero")]
    NonzeroPadding,
    #[error("graphs on {0} vertices need the extended graph6 header, which is not supported")]
    UnsupportedSize(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Trailing `\n`/`\r\n` and the optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(OPTIONAL_PREFIX).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Graph6Error::MalformedHeader);
    };
    if head == 126 {
        // extended header: report the size if it is readable at all
        return Err(match bytes.get(1..4) {
            Some(w) if w.iter().all(|b| (63..=126).contains(b)) && w[0] != 126 => {
                let n = w
                    .iter()
                    .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
                Graph6Error::UnsupportedSize(n)
            }
            _ => Graph6Error::MalformedHeader,
        });
    }
    if !(63..126).contains(&head) {
        return Err(Graph6Error::MalformedHeader);
    }
    let n = usize::from(head - 63);
    let body = &bytes[1..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage(body.len() - expected));
    }
    if let Some(offset) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            byte: body[offset],
            offset: offset + 1,
        });
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    Ok(Graph::new(n, edges)?)
}

/// Encodes `g` as a graph6 record, without a trailing newline.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_N {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let mut body = vec![0u8; body_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.adjacent(i, j) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(body.len() + 1);
    out.push(char::from(n as u8 + 63));
    out.extend(body.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}
