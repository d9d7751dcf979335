//! Text formats: graph6, plain edge lists, Hist certificate files, and DOT
//! export.
//!
//! graph6 follows the canonical definition: header byte `n + 63` for
//! `n <= 62`, or `'~'` followed by three bytes carrying the 18-bit vertex
//! count for `63 <= n <= 258047`; then the upper-triangle adjacency bits in
//! column-major order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian
//! into 6-bit groups, each group offset by 63.

use thiserror::Error;

use crate::graph::{EdgeSet, Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("truncated graph6 payload: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("byte {0} outside printable graph6 range 63..=126")]
    ByteOutOfRange(u8),
    #[error("vertex count {0} exceeds the graph6 limit 258047")]
    TooLarge(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const G6_MAX_N: usize = 258047;

/// Decodes one graph6 line into a graph.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::ByteOutOfRange(b));
        }
    }
    let (n, payload) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(FormatError::MalformedHeader);
        }
        if bytes[1] == b'~' {
            // 8-byte form would allow n > 258047; out of supported range.
            return Err(FormatError::MalformedHeader);
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > G6_MAX_N {
        return Err(FormatError::TooLarge(n));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expected = nbits.div_ceil(6);
    if payload.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            got: payload.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = (payload[bit / 6] - 63) as usize;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Encodes a graph as a graph6 line, shortest legal form.
pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > G6_MAX_N {
        return Err(FormatError::TooLarge(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}

/// Parses the edge-list format: first non-comment line `n m`, then `m` lines
/// `u v`. Lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (lineno, header) = lines.next().ok_or(FormatError::Empty)?;
    let parse_pair = |lineno: usize, line: &str| -> Result<(usize, usize), FormatError> {
        let mut it = line.split_whitespace();
        let err = || FormatError::Parse {
            line: lineno + 1,
            msg: format!("expected two integers, got {line:?}"),
        };
        let a = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        let b = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        if it.next().is_some() {
            return Err(err());
        }
        Ok((a, b))
    };
    let (n, m) = parse_pair(lineno, header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines.next().ok_or(FormatError::Parse {
            line: 0,
            msg: format!("expected {m} edges, input ended early"),
        })?;
        edges.push(parse_pair(lineno, line)?);
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Certificate file: `hist n`, then `n - 1` tree edges.
pub fn parse_certificate(text: &str) -> Result<(usize, Vec<(usize, usize)>), FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (lineno, header) = lines.next().ok_or(FormatError::Empty)?;
    let mut it = header.split_whitespace();
    if it.next() != Some("hist") {
        return Err(FormatError::Parse {
            line: lineno + 1,
            msg: "expected header \"hist n\"".into(),
        });
    }
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(FormatError::Parse {
            line: lineno + 1,
            msg: "expected header \"hist n\"".into(),
        })?;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for _ in 0..n.saturating_sub(1) {
        let (lineno, line) = lines.next().ok_or(FormatError::Parse {
            line: 0,
            msg: format!("expected {} tree edges, input ended early", n - 1),
        })?;
        let mut it = line.split_whitespace();
        let err = || FormatError::Parse {
            line: lineno + 1,
            msg: format!("expected two integers, got {line:?}"),
        };
        let a = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        let b = it.next().ok_or_else(err)?.parse().map_err(|_| err())?;
        edges.push((a, b));
    }
    Ok((n, edges))
}

pub fn write_certificate(g: &Graph, tree: &EdgeSet) -> String {
    let mut out = format!("hist {}\n", g.n());
    for e in tree.iter() {
        let (u, v) = g.edge(e);
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT export. When `tree` is given, tree edges are attributed
/// `class=tree` (drawn bold) and the rest `class=cycle`.
pub fn write_dot(g: &Graph, tree: Option<&EdgeSet>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match tree {
            Some(t) if t.contains(i) => out.push_str(&format!(
                "  {u} -- {v} [class=tree, style=bold];\n"
            )),
            Some(_) => out.push_str(&format!("  {u} -- {v} [class=cycle];\n")),
            None => out.push_str(&format!("  {u} -- {v};\n")),
        }
    }
    out.push_str("}\n");
    out
}
