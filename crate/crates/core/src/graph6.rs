//! graph6 encoding for graphs of order at most 62.
//!
//! Layout: one size byte `n + 63`, then the upper triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte (most
//! significant first, zero padded), each byte offset by 63.

use crate::error::Graph6Error;
use crate::graph::{bit, Graph};

pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let line = line.trim_ascii_end();
    let (&first, data) = line.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in line.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadCharacter { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::BadLength { offset: 0 });
    }
    let n = (first - OFFSET) as usize;
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            offset: line.len().min(1 + expected),
            expected: 1 + expected,
            found: line.len(),
        });
    }

    let mut rows = vec![0; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte & (1 << (5 - k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[expected - 1] - OFFSET;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::TrailingBits { offset: expected });
        }
    }
    Ok(Graph::from_rows(rows).expect("graph6 decoding yields a simple graph"))
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use proptest::prelude::*;

    #[test]
    fn known_records() {
        let k4 = complete(4).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let k1 = complete(1).unwrap();
        assert_eq!(parse_graph6(b"C~").unwrap(), k4);
        assert_eq!(parse_graph6(b"Bg").unwrap(), p3);
        assert_eq!(parse_graph6(b"@").unwrap(), k1);
        assert_eq!(emit_graph6(&k4).unwrap(), "C~");
        assert_eq!(emit_graph6(&p3).unwrap(), "Bg");
        assert_eq!(emit_graph6(&k1).unwrap(), "@");
        // trailing newline is tolerated
        assert_eq!(parse_graph6(b"C~\n").unwrap(), k4);
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b"C ~"), Err(Graph6Error::BadCharacter { offset: 1, byte: b' ' }));
        assert_eq!(parse_graph6(b"~?"), Err(Graph6Error::BadLength { offset: 0 }));
        assert!(matches!(parse_graph6(b"C~~"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(parse_graph6(b"C"), Err(Graph6Error::WrongLength { .. })));
        // P3 uses 3 of 6 bits; setting a padding bit must fail
        assert_eq!(parse_graph6(b"Bh"), Err(Graph6Error::TrailingBits { offset: 1 }));
        assert_eq!(emit_graph6(&complete(63).unwrap()), Err(Graph6Error::UnsupportedSize(63)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(n in 1usize..=32, seed in any::<u64>(), density in 0.0f64..1.0) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(density) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let s = emit_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
        }
    }
}
