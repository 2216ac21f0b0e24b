//! graph6 encoding (McKay's format).
//!
//! A line is `N(n) R(x)`: the vertex count, then the upper triangle of the
//! adjacency matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3),
//! ...`), packed six bits per byte, big-endian within each byte, each byte
//! offset by 63. `N(n)` is one byte for `n <= 62` and `126` plus three bytes
//! for `n <= 258047`.

use thiserror::Error;

use crate::graph::Graph;

const MAX_LONG_FORM: usize = 258_047;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 string: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the adjacency data")]
    TrailingGarbage(usize),
    #[error("vertex count {0} exceeds the graph6 range (max {MAX_LONG_FORM})")]
    TooLarge(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let bytes = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    let six = |b: u8| (b - 63) as usize;

    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            // 8-byte form only exists for n > 258047.
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 3, found: bytes.len() - 1 });
        }
        let n = (six(bytes[1]) << 12) | (six(bytes[2]) << 6) | six(bytes[3]);
        (n, &bytes[4..])
    } else {
        (six(bytes[0]), &bytes[1..])
    };

    let expected = data_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage(body.len() - expected));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = six(body[bit / 6]);
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range and loop-free"))
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_LONG_FORM {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(encode_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn k2_and_empty_pair() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.vertex_count(), e2.edge_count()), (2, 0));
        assert_eq!(encode_graph6(&k2).unwrap(), "A_");
        assert_eq!(encode_graph6(&e2).unwrap(), "A?");
    }

    #[test]
    fn bit_order_is_column_major() {
        // n = 3 with only edge (1,2): bits x01 x02 x12 = 0 0 1 -> 001000 = 8.
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(encode_graph6(&g).unwrap(), format!("B{}", (8 + 63) as u8 as char));
    }

    #[test]
    fn header_and_whitespace_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("C}!"), Err(Graph6Error::InvalidByte { offset: 2, byte: b'!' }));
        assert_eq!(parse_graph6("D~"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::TrailingGarbage(1)));
        assert!(matches!(parse_graph6("~?"), Err(Graph6Error::Truncated { .. })));
    }

    #[test]
    fn long_form_round_trip() {
        let n = 70;
        let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let line = encode_graph6(&g).unwrap();
        assert_eq!(line.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }
}
