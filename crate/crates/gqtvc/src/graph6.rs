//! graph6 encoding.
//!
//! Bits of the upper triangle are read column by column, `(0,1), (0,2),
//! (1,2), (0,3), ...`, packed six to a byte with 63 added. Orders up to
//! 2^36 - 1 are encoded; the reader rejects anything the writer would not
//! produce (bad characters, wrong length, non-zero padding).

use gqtvc_core::Graph;
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated order field")]
    TruncatedOrder,
    #[error("order {0} is too large")]
    TooLarge(u64),
    #[error("expected {expected} adjacency bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("non-zero padding bits in the last byte")]
    Padding,
}

fn encode_order(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n as u64, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextets(bytes: &[u8], start: usize) -> Result<impl Iterator<Item = u8> + '_, Graph6Error> {
    if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte { offset: start + i, byte: b });
    }
    Ok(bytes.iter().map(|b| b - 63))
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => {
            let field = rest.get(..6).ok_or(Graph6Error::TruncatedOrder)?;
            let n = sextets(field, 2)?.fold(0u64, |acc, s| (acc << 6) | s as u64);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            let field = rest.get(..3).ok_or(Graph6Error::TruncatedOrder)?;
            let n = sextets(field, 1)?.fold(0u64, |acc, s| (acc << 6) | s as u64);
            (n, &rest[3..])
        }
        [first, rest @ ..] => (sextets(&[*first], 0)?.next().unwrap() as u64, rest),
        [] => unreachable!(),
    };
    // Larger orders would not fit an adjacency matrix in memory anyway.
    if n > 1 << 20 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let offset = bytes.len() - body.len();
    let values: Vec<u8> = sextets(body, offset)?.collect();
    if values.len() != expected {
        return Err(Graph6Error::Length { expected, found: values.len() });
    }
    if !bits.is_multiple_of(6) {
        let pad = 6 - bits % 6;
        if values[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("indices below n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&petersen()), "IheA@GUAo");
        assert_eq!(decode("IheA@GUAo").unwrap(), petersen());
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_order_field() {
        let g = Graph::from_edges(63, [(0, 62), (5, 17)]).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("C~~"), Err(Graph6Error::Length { expected: 1, found: 2 }));
        assert_eq!(decode("A`"), Err(Graph6Error::Padding));
        assert_eq!(decode("C }"), Err(Graph6Error::BadByte { offset: 1, byte: b' ' }));
        assert_eq!(decode("~?"), Err(Graph6Error::TruncatedOrder));
    }
}
