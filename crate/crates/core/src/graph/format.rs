//! Edge-list and graph6 text formats.
//!
//! Edge-list: a header line `n <count>` followed by one `u v` line per edge,
//! 0-based. Blank lines and `#` comments are ignored.
//!
//! graph6: the standard packing, restricted to a single size byte (n <= 62).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    BadHeader(String),
    Malformed(String),
    VertexOutOfRange {
        vertex: Vertex,
        n: usize,
    },
    DuplicateEdge {
        u: Vertex,
        v: Vertex,
        first_line: usize,
    },
    SelfLoop(Vertex),
    Graph6Empty,
    Graph6InvalidByte(u8),
    Graph6TooLarge,
    Graph6Length {
        expected: usize,
        found: usize,
    },
    Graph6Padding,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing `n <count>` header"),
            ParseErrorKind::BadHeader(s) => write!(f, "bad header `{s}`"),
            ParseErrorKind::Malformed(s) => write!(f, "malformed edge line `{s}`"),
            ParseErrorKind::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            ParseErrorKind::DuplicateEdge { u, v, first_line } => {
                write!(f, "duplicate edge {u}-{v} (first on line {first_line})")
            }
            ParseErrorKind::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::Graph6Empty => write!(f, "empty graph6 string"),
            ParseErrorKind::Graph6InvalidByte(b) => write!(f, "invalid graph6 byte 0x{b:02x}"),
            ParseErrorKind::Graph6TooLarge => write!(f, "graph6 sizes above 62 are not supported"),
            ParseErrorKind::Graph6Length { expected, found } => {
                write!(f, "graph6 body has {found} bytes, expected {expected}")
            }
            ParseErrorKind::Graph6Padding => write!(f, "nonzero graph6 padding bits"),
        }
    }
}

/// Where a parse went wrong: a 1-based line for edge lists, a 0-based byte
/// offset for graph6.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Line(usize),
    Byte(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {kind}", match .location { Location::Line(l) => format!("line {l}"), Location::Byte(b) => format!("byte {b}") })]
pub struct ParseError {
    pub location: Location,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn line(line: usize, kind: ParseErrorKind) -> Self {
        ParseError {
            location: Location::Line(line),
            kind,
        }
    }

    fn byte(byte: usize, kind: ParseErrorKind) -> Self {
        ParseError {
            location: Location::Byte(byte),
            kind,
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => {
            let mut out = format!("n {}\n", g.n());
            for &(u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
        GraphFormat::Graph6 => render_graph6(g),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::line(1, ParseErrorKind::MissingHeader))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| ParseError::line(header_line, ParseErrorKind::BadHeader(header.into())))?,
        _ => return Err(ParseError::line(header_line, ParseErrorKind::MissingHeader)),
    };

    let mut seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let malformed = || ParseError::line(lineno, ParseErrorKind::Malformed(line.into()));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(malformed());
        };
        let u: Vertex = a.parse().map_err(|_| malformed())?;
        let v: Vertex = b.parse().map_err(|_| malformed())?;
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::line(
                    lineno,
                    ParseErrorKind::VertexOutOfRange { vertex: x, n },
                ));
            }
        }
        if u == v {
            return Err(ParseError::line(lineno, ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if let Some(&first_line) = seen.get(&key) {
            return Err(ParseError::line(
                lineno,
                ParseErrorKind::DuplicateEdge {
                    u: key.0,
                    v: key.1,
                    first_line,
                },
            ));
        }
        seen.insert(key, lineno);
        edges.push(key);
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated while parsing"))
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim_end();
    let (offset, body) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let Some(&size) = bytes.first() else {
        return Err(ParseError::byte(offset, ParseErrorKind::Graph6Empty));
    };
    if size == 126 {
        return Err(ParseError::byte(offset, ParseErrorKind::Graph6TooLarge));
    }
    if !(63..=125).contains(&size) {
        return Err(ParseError::byte(
            offset,
            ParseErrorKind::Graph6InvalidByte(size),
        ));
    }
    let n = (size - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(ParseError::byte(
            offset + 1 + data.len().min(expected),
            ParseErrorKind::Graph6Length {
                expected,
                found: data.len(),
            },
        ));
    }
    let mut values = Vec::with_capacity(data.len());
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::byte(
                offset + 1 + i,
                ParseErrorKind::Graph6InvalidByte(b),
            ));
        }
        values.push(b - 63);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(ParseError::byte(
            offset + data.len(),
            ParseErrorKind::Graph6Padding,
        ));
    }
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
    Ok(Graph::from_edges(n, edges).expect("graph6 decodes to a simple graph"))
}

/// Panics for graphs with more than 62 vertices.
fn render_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 rendering supports n <= 62");
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
