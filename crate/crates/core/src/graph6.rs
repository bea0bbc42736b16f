//! graph6 encoding: an order prefix followed by the upper triangle of the
//! adjacency matrix, column by column, six bits per printable byte (offset 63).

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte} at offset {pos} is outside the printable range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("graph6 record too short: expected {expected} bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("{extra} unexpected trailing byte(s) after graph6 record")]
    TrailingGarbage { extra: usize },
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    #[error("graph6 order {0} unsupported (1..=64)")]
    Order(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Leading `>>graph6<<` and surrounding ASCII
/// whitespace are tolerated; anything else must be exact.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = text.trim_ascii();
    if let Some(rest) = bytes.strip_prefix(HEADER) {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = bytes.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(Graph6Error::ByteOutOfRange { pos, byte: bytes[pos] });
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength { expected: 4, found: bytes.len() });
        }
        if bytes[1] == 126 {
            // 8-byte form, only used for n >= 258048
            return Err(Graph6Error::Order(usize::MAX));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::Order(n));
    }
    let need = data_len(n);
    if body.len() < need {
        return Err(Graph6Error::BadLength {
            expected: bytes.len() - body.len() + need,
            found: bytes.len(),
        });
    }
    if body.len() > need {
        return Err(Graph6Error::TrailingGarbage { extra: body.len() - need });
    }

    let mut bits = body.iter().flat_map(|&b| (0..6).rev().map(move |s| (b - OFFSET) >> s & 1));
    let mut adj = vec![0u64; n];
    for j in 1..n {
        for i in 0..j {
            if bits.next() == Some(1) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    if bits.any(|b| b == 1) {
        return Err(Graph6Error::NonzeroPadding);
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + OFFSET));
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_star_record() {
        // 'D' -> n = 5; '?' -> 000000, '{' -> 111100: pairs (0,4) (1,4) (2,4) (3,4)
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!(g, Graph::empty(1).unwrap());
        assert_eq!(emit_graph6(&g), "@");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        // edges a-c a-e b-d d-e on 5 vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn long_order_prefix() {
        let g = Graph::path(63).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(&[b'D', 200, b'{']),
            Err(Graph6Error::ByteOutOfRange { pos: 1, byte: 200 })
        );
        assert_eq!(parse_graph6(b"D?"), Err(Graph6Error::BadLength { expected: 3, found: 2 }));
        assert_eq!(parse_graph6(b"D?{?"), Err(Graph6Error::TrailingGarbage { extra: 1 }));
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::NonzeroPadding));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::Order(0)));
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        assert_eq!(parse_graph6(b">>graph6<<A_\n").unwrap(), Graph::complete(2).unwrap());
    }
}
