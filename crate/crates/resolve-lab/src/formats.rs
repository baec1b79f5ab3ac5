//! Text formats: the edge-list format and standard graph6 (short form).
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based endpoints. A `#` starts a comment anywhere on a line.
//!
//! graph6: byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column-major order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte (most significant first) with each byte offset by 63. The short
//! form covers `n <= 62`, which is all this crate needs.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header \"n m\", got {found:?}")]
    MalformedHeader { line: usize, found: String },
    #[error("line {line}: expected edge \"u v\", got {found:?}")]
    MalformedEdge { line: usize, found: String },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("graph6: input is empty")]
    Graph6Empty,
    #[error("graph6: order {0} exceeds the short-form limit of 62")]
    Graph6TooLarge(usize),
    #[error("graph6: byte {byte:#x} at position {pos} outside the value range 63..=126")]
    Graph6BadByte { byte: u8, pos: usize },
    #[error("graph6: expected {expected} bytes for order {n}, found {found}")]
    Graph6WrongLength { n: usize, expected: usize, found: usize },
}

/// Parses the edge-list format; errors name the offending 1-based line.
pub fn graph_from_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            (i + 1, body.trim())
        })
        .filter(|(_, body)| !body.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::MalformedHeader {
        line: 1,
        found: String::new(),
    })?;
    let mut parts = header.split_whitespace();
    let (n, m) = match (
        parts.next().and_then(|s| s.parse::<usize>().ok()),
        parts.next().and_then(|s| s.parse::<usize>().ok()),
        parts.next(),
    ) {
        (Some(n), Some(m), None) => (n, m),
        _ => {
            return Err(ParseError::MalformedHeader {
                line: header_line,
                found: header.to_string(),
            })
        }
    };

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut found = 0;
    for (line, body) in lines {
        let mut parts = body.split_whitespace();
        let (u, v) = match (
            parts.next().and_then(|s| s.parse::<usize>().ok()),
            parts.next().and_then(|s| s.parse::<usize>().ok()),
            parts.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(ParseError::MalformedEdge {
                    line,
                    found: body.to_string(),
                })
            }
        };
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(ParseError::DuplicateEdge { line, u: e.0, v: e.1 });
        }
        edges.push(e);
        found += 1;
    }
    if found != m {
        return Err(ParseError::WrongEdgeCount { expected: m, found });
    }
    Ok(Graph::new(n, &edges).expect("edges validated above"))
}

/// Renders a graph in the edge-list format.
pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a graph as short-form graph6 (`n <= 62`).
pub fn graph_to_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > 62 {
        return Err(ParseError::Graph6TooLarge(n));
    }
    let mut bytes = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

/// Decodes short-form graph6.
pub fn graph_from_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end().as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(ParseError::Graph6Empty)?;
    if !(63..=126).contains(&first) {
        return Err(ParseError::Graph6BadByte { byte: first, pos: 0 });
    }
    let n = (first - 63) as usize;
    if n > 62 {
        return Err(ParseError::Graph6TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(ParseError::Graph6WrongLength {
            n,
            expected,
            found: rest.len(),
        });
    }
    for (i, &b) in rest.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Graph6BadByte { byte: b, pos: i + 1 });
        }
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = rest[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded edges are valid"))
}
