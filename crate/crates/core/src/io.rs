//! Text formats for graphs: graph6, a plain adjacency-matrix text format,
//! and a JSON form with one bitstring per adjacency row.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    /// First line `n`, then `n` lines of `n` characters `0`/`1`.
    AdjText,
    Json,
}

impl Format {
    /// `.g6` is graph6, `.json` is JSON, anything else is `None`.
    pub fn from_extension(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(Format::Graph6),
            "json" => Some(Format::Json),
            "adj" | "txt" => Some(Format::AdjText),
            _ => None,
        }
    }

    /// Guesses the format from content.
    pub fn sniff(text: &str) -> Self {
        let t = text.trim_start();
        // '{' is also a legal graph6 byte (n = 60); '"' is not.
        if t.starts_with('{') && t.contains('"') {
            Format::Json
        } else if t.lines().next().is_some_and(|l| !l.trim().is_empty() && l.trim().bytes().all(|b| b.is_ascii_digit())) {
            Format::AdjText
        } else {
            Format::Graph6
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::AdjText => parse_adjtext(text),
        Format::Json => parse_json(text),
    }
}

pub fn serialize(graph: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => write_graph6(graph),
        Format::AdjText => write_adjtext(graph),
        Format::Json => {
            let mut s = serde_json::to_string(&JsonGraph::from(graph)).expect("graph serializes");
            s.push('\n');
            s
        }
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_adjtext(text: &str) -> Result<Graph> {
    // Line numbers refer to the input as given, 1-based.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .skip_while(|(_, l)| l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_error(header_line, 1, format!("expected vertex count, found {header:?}")))?;

    let mut rows = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line_no, line) in lines.by_ref() {
        if rows.len() == n {
            if line.is_empty() {
                continue;
            }
            return Err(parse_error(line_no, 1, "trailing content after adjacency rows"));
        }
        last_line = line_no;
        if line.chars().count() != n {
            return Err(parse_error(
                line_no,
                1,
                format!("expected {n} characters, found {}", line.chars().count()),
            ));
        }
        let mut row = BitVector::zeros(n);
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row.set(col, true),
                other => return Err(parse_error(line_no, col + 1, format!("unexpected character {other:?}"))),
            }
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_error(last_line + 1, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    Graph::from_adjacency(BitMatrix::from_rows(rows, n))
}

pub fn write_adjtext(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.n());
    for row in graph.adjacency().row_slice() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";
const G6_MAX: usize = 258_047;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (body, offset) = match trimmed.strip_prefix(G6_HEADER) {
        Some(rest) => (rest, offset + G6_HEADER.len()),
        None => (trimmed, offset),
    };
    let bytes = body.as_bytes();
    // Columns are byte positions, 1-based, in the original line.
    let col = |k: usize| offset + k + 1;
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(1, col(k), format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(parse_error(1, col(0), "empty graph6 string")),
        [126, 126, ..] => return Err(parse_error(1, col(0), "graph6 with more than 258047 vertices is not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_error(1, col(bytes.len()), "truncated vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [first, ..] => ((first - 63) as usize, 1),
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expected {
        return Err(parse_error(
            1,
            col(header_len + data.len().min(expected)),
            format!("expected {expected} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut adj = BitMatrix::zeros(n, n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
            k += 1;
        }
    }
    for pad in bit_count..expected * 6 {
        if bit(pad) {
            return Err(parse_error(1, col(header_len + pad / 6), "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Writes graph6 with a trailing newline. Panics above 258047 vertices.
pub fn write_graph6(graph: &Graph) -> String {
    let n = graph.n();
    assert!(n <= G6_MAX, "graph6 supports at most {G6_MAX} vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | graph.has_edge(i, j) as u8;
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
    out.push(b'\n');
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// JSON form: `{"n": 2, "adjacency": ["01", "10"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub adjacency: Vec<String>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.n(),
            adjacency: g.adjacency().row_slice().iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&JsonGraph> for Graph {
    type Error = Error;

    fn try_from(j: &JsonGraph) -> Result<Graph> {
        if j.adjacency.len() != j.n {
            return Err(Error::SizeMismatch {
                expected: j.n,
                actual: j.adjacency.len(),
            });
        }
        let mut rows = Vec::with_capacity(j.n);
        for (i, r) in j.adjacency.iter().enumerate() {
            let row = BitVector::parse_bits(r)
                .filter(|row| row.len() == j.n)
                .ok_or_else(|| parse_error(i + 1, 1, format!("row {} must be {} characters of 0/1", i + 1, j.n)))?;
            rows.push(row);
        }
        Graph::from_adjacency(BitMatrix::from_rows(rows, j.n))
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let j: JsonGraph =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    Graph::try_from(&j)
}
