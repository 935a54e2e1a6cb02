//! The standard graph6 ASCII encoding for undirected graphs, bit-exact, plus
//! the plain edge-list text format.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...` into 6-bit groups offset by 63. Orders
//! up to 62 use a single size byte; the 4-byte long form is accepted and
//! emitted for 63..=64 (the crate-wide cap).

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6 byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("input is empty")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Supported text encodings of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// A parsed graph plus, when the input used sparse vertex labels, the
/// original label of each normalized vertex.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// `Some(map)` when input labels were re-indexed; `map[v]` is the
    /// original label of vertex `v`.
    pub original_labels: Option<Vec<u64>>,
}

/// Parses a graph in the named format, normalizing vertex ids to `0..n`.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<ParsedGraph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => Ok(ParsedGraph {
            graph: from_graph6(text.trim())?,
            original_labels: None,
        }),
    }
}

/// Parses the edge-list format: one `u v` pair per line, whitespace
/// separated, `#` comments allowed. Vertex labels with gaps are re-indexed.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(ParseError::EdgeList {
                line: line_no,
                msg: format!("expected two vertex ids, found {}", tokens.len()),
            });
        }
        let parse = |t: &str| -> Result<u64, ParseError> {
            t.parse().map_err(|_| ParseError::EdgeList {
                line: line_no,
                msg: format!("invalid vertex id {t:?}"),
            })
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(ParseError::EdgeList {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        raw_edges.push((u, v));
    }
    if raw_edges.is_empty() {
        return Err(ParseError::Empty);
    }

    let mut labels: Vec<u64> = raw_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let dense = labels.len() == labels[labels.len() - 1] as usize + 1;
    let index_of = |l: u64| labels.binary_search(&l).expect("label present");
    let n = labels.len();
    let edges = raw_edges
        .iter()
        .map(|&(u, v)| (index_of(u), index_of(v)));
    let graph = Graph::new(n, edges)?;
    Ok(ParsedGraph {
        graph,
        original_labels: if dense { None } else { Some(labels) },
    })
}

/// Serializes to the edge-list format, one `u v` line per edge. Isolated
/// vertices are not representable here; use graph6 for those.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if g.has_edge(row, col) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        bytes.push(63 + group);
    }
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

/// Decodes a graph6 string. An optional `>>graph6<<` header is accepted;
/// trailing padding bits must be zero (strict, the encoding is canonical).
pub fn from_graph6(s: &str) -> Result<Graph, ParseError> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let b = s.trim_end().as_bytes();
    if b.is_empty() {
        return Err(ParseError::Empty);
    }
    if b[0] == b':' || b[0] == b';' || b[0] == b'&' {
        return Err(ParseError::Graph6 {
            offset: 0,
            msg: "sparse6/digraph6 input is not supported".into(),
        });
    }
    let sextet = |i: usize| -> Result<usize, ParseError> {
        let v = *b.get(i).ok_or(ParseError::Graph6 {
            offset: i,
            msg: "truncated input".into(),
        })?;
        if !(63..=126).contains(&v) {
            return Err(ParseError::Graph6 {
                offset: i,
                msg: format!("byte {v:#x} outside graph6 range"),
            });
        }
        Ok((v - 63) as usize)
    };
    let (n, mut pos) = if b[0] == 126 {
        if b.len() >= 2 && b[1] == 126 {
            return Err(ParseError::Graph6 {
                offset: 1,
                msg: "8-byte order form exceeds the supported maximum".into(),
            });
        }
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        (n, 4)
    } else {
        (sextet(0)?, 1)
    };
    if n > MAX_VERTICES {
        return Err(ParseError::Graph(GraphError::TooLarge {
            n,
            max: MAX_VERTICES,
        }));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if b.len() != pos + nbytes {
        return Err(ParseError::Graph6 {
            offset: b.len().min(pos + nbytes),
            msg: format!(
                "expected {} payload bytes for order {n}, found {}",
                nbytes,
                b.len() - pos
            ),
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0;
    let mut current = 0usize;
    let mut remaining_in_group = 0;
    for col in 1..n {
        for row in 0..col {
            if remaining_in_group == 0 {
                current = sextet(pos)?;
                pos += 1;
                remaining_in_group = 6;
            }
            remaining_in_group -= 1;
            if current & (1 << remaining_in_group) != 0 {
                edges.push((row, col));
            }
            bit_index += 1;
        }
    }
    debug_assert_eq!(bit_index, nbits);
    // The final group's padding bits must be zero.
    if remaining_in_group > 0 && current & ((1 << remaining_in_group) - 1) != 0 {
        return Err(ParseError::Graph6 {
            offset: pos - 1,
            msg: "nonzero padding bits".into(),
        });
    }
    Ok(Graph::new(n, edges)?)
}

/// Parses a file of graph6 strings, one per line; blank lines and `#`
/// comments are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(from_graph6(line)?);
    }
    Ok(out)
}
