//! Text formats: a plain edge list and graph6.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (0-indexed).
//! Blank lines and lines starting with `#` are ignored.
//!
//! graph6: the standard printable encoding of the upper triangle of the
//! adjacency matrix, column by column, six bits per byte offset by 63.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_HEADER: &str = ">>graph6<<";
const G6_OFFSET: u8 = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl Format {
    /// Guesses the format of `text` from its first meaningful line. graph6
    /// never starts with a digit, an edge-list header always does.
    pub fn detect(text: &str) -> Format {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => Format::EdgeList,
            _ => Format::Graph6,
        }
    }
}

/// Parses a single graph in either format.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| Format::detect(text)) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim_end)
                .find(|l| !l.trim().is_empty())
                .ok_or(Error::Graph6 {
                    pos: 0,
                    msg: "empty input".into(),
                })?;
            parse_graph6(line)
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header line `n m`".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;

    let mut pairs = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, l) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = parse_pair(line, l)?;
        let bad = if u >= n || v >= n {
            Some(Error::VertexOutOfRange { v: u.max(v), n })
        } else if u == v {
            Some(Error::SelfLoop(u))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(Error::DuplicateEdge(u.min(v), u.max(v)))
        } else {
            None
        };
        if let Some(e) = bad {
            return Err(Error::Parse {
                line,
                msg: e.to_string(),
            });
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edges, found {}", pairs.len()),
        });
    }
    Graph::new(n, &pairs).map_err(|e| Error::Parse {
        line: hline,
        msg: e.to_string(),
    })
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let pair = [next()?, next()?];
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line,
            msg: format!("unexpected token `{extra}`"),
        });
    }
    Ok(pair)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Encodes `g` as graph6 without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = encode_order(n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + G6_OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + G6_OFFSET);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn encode_order(n: usize) -> Vec<u8> {
    let six = |shift: usize| ((n >> shift) & 0x3f) as u8 + G6_OFFSET;
    if n <= 62 {
        vec![n as u8 + G6_OFFSET]
    } else if n <= 258_047 {
        vec![126, six(12), six(6), six(0)]
    } else {
        vec![126, 126, six(30), six(24), six(18), six(12), six(6), six(0)]
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted; byte positions in errors count from the start
/// of `s`.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let base = if s.starts_with(G6_HEADER) {
        G6_HEADER.len()
    } else {
        0
    };
    let bytes = s[base..].trim_end().as_bytes();
    let err = |i: usize, msg: &str| Error::Graph6 {
        pos: base + i,
        msg: msg.into(),
    };

    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(i, "character outside the graph6 range '?'..='~'"));
    }
    let (n, mut pos) = match bytes {
        [] => return Err(err(0, "empty input")),
        [126, 126, rest @ ..] => (read_six(rest, 6).ok_or(err(2, "truncated order"))?, 8),
        [126, rest @ ..] => (read_six(rest, 3).ok_or(err(1, "truncated order"))?, 4),
        [b, ..] => ((b - G6_OFFSET) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = pos + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            &format!(
                "expected {expected} bytes for {n} vertices, got {}",
                bytes.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos] - G6_OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit % 6 == 0 {
                pos += 1;
                if pos == bytes.len() {
                    break 'outer;
                }
            }
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if (bytes[pos] - G6_OFFSET) & ((1 << pad) - 1) != 0 {
            return Err(err(pos, "non-zero padding bits"));
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges).map_err(|e| err(0, &e.to_string()))
}

fn read_six(bytes: &[u8], count: usize) -> Option<usize> {
    let chunk = bytes.get(..count)?;
    Some(
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - G6_OFFSET) as usize),
    )
}
