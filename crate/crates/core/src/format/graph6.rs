//! McKay's graph6 format.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 string without trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let Some((&last, rest)) = data.split_last() {
        if last == b'\n' || last == b'\r' {
            data = rest;
        } else {
            break;
        }
    }
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(1, format!("byte {} at offset {pos} is not graph6", data[pos])));
    }
    let sixes = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body) = match data {
        [] => return Err(Error::parse(1, "empty graph6 record")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (sixes(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (sixes(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(Error::parse(1, "truncated graph6 size field")),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            1,
            format!("graph6 body has {} bytes, expected {expected} for n={n}", body.len()),
        ));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit_at) {
        return Err(Error::parse(1, "nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Hand-decoded from the format definition: size byte n + 63, then the
    // upper triangle column by column (x01, x02, x12, x03, ...) in 6-bit
    // groups, each + 63.
    #[test]
    fn hand_decoded_table() {
        let table: &[(&str, usize, &[(usize, usize)])] = &[
            ("?", 0, &[]),
            ("@", 1, &[]),
            ("A_", 2, &[(0, 1)]),
            ("A?", 2, &[]),
            ("Bw", 3, &[(0, 1), (0, 2), (1, 2)]),
            ("BW", 3, &[(0, 2), (1, 2)]),
            ("C~", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            // bits x01 x02 x12 x03 x13 x23 = 001100 -> 12 + 63 = 'K'
            ("CK", 4, &[(1, 2), (0, 3)]),
            ("D?{", 5, &[(0, 4), (1, 4), (2, 4), (3, 4)]),
            ("D~{", 5, &[
                (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (0, 4), (1, 4), (2, 4), (3, 4),
            ]),
        ];
        for &(text, n, edges) in table {
            let g = decode(text.as_bytes()).unwrap();
            let expect = Graph::from_edges(n, edges.iter().copied()).unwrap();
            assert_eq!(g, expect, "{text}");
            assert_eq!(encode(&g), text);
        }
    }

    #[test]
    fn large_size_field() {
        let g = Graph::empty(100);
        let s = encode(&g);
        // 100 = 000000 000001 100100
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(decode(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(decode(b">>graph6<<Bw\n").unwrap().m(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decode(b"").is_err());
        assert!(decode(b"D?").is_err());
        assert!(decode(b"Bx").is_err()); // padding bit set
        assert!(decode(b"B w").is_err());
    }
}
