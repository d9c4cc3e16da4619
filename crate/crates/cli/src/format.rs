//! Graph input formats: edge lists and graph6.

use thiserror::Error;
use trisep::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("graph6 byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

pub fn parse_graph(input: &str, format: InputFormat) -> Result<Graph, ParseError> {
    match format {
        InputFormat::Edgelist => parse_edgelist(input),
        InputFormat::Graph6 => parse_graph6(input),
    }
}

/// One `u v` pair per line; a lone `v` declares an isolated vertex; `#` starts a comment.
pub fn parse_edgelist(input: &str) -> Result<Graph, ParseError> {
    let mut g = Graph::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| ParseError::Line { line, msg };
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let ids: Vec<usize> = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("{t:?} is not a vertex id"))))
            .collect::<Result<_, _>>()?;
        match ids.as_slice() {
            [v] => g.add_vertex(*v).map_err(|e| err(e.to_string()))?,
            [u, v] => g.add_edge(*u, *v).map_err(|e| err(e.to_string()))?,
            _ => return Err(err(format!("expected one or two vertex ids, found {}", ids.len()))),
        }
    }
    Ok(g)
}

/// The first non-empty line in graph6, with or without the `>>graph6<<` header.
pub fn parse_graph6(input: &str) -> Result<Graph, ParseError> {
    let line = input.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let (skip, body) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let err = |offset: usize, msg: &str| ParseError::Graph6 { offset: skip + offset, msg: msg.to_string() };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        body.get(i).map(|&b| (b - 63) as usize).ok_or_else(|| err(i, "input ends inside the vertex count"))
    };
    let (n, mut pos) = match body.first() {
        None => return Err(err(0, "empty input")),
        Some(126) if body.get(1) == Some(&126) => ((2..8).try_fold(0, |acc, i| Ok::<_, ParseError>(acc << 6 | six(i)?))?, 8),
        Some(126) => ((1..4).try_fold(0, |acc, i| Ok::<_, ParseError>(acc << 6 | six(i)?))?, 4),
        Some(_) => (six(0)?, 1),
    };
    let mut g = Graph::with_vertices(n).map_err(|e| err(0, &e.to_string()))?;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if body.len() != pos + needed {
        return Err(err(body.len().min(pos + needed), &format!("expected {needed} adjacency bytes after the vertex count")));
    }
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = (body[pos + bit / 6] - 63) as usize;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v).map_err(|e| err(pos + bit / 6, &e.to_string()))?;
            }
            bit += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, body.len());
    Ok(g)
}

/// graph6 encoding of a graph on `0..n`; other vertex sets are compacted first.
pub fn to_graph6(g: &Graph) -> String {
    let (h, _) = g.compacted();
    let n = h.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | h.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
