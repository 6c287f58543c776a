//! graph6 encoding of simple undirected graphs.

use crate::clique::SimpleGraph;
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";
const MAX_N: u64 = 68_719_476_735;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn sextet(b: u8) -> Result<u64> {
    if (63..=126).contains(&b) {
        Ok(u64::from(b - 63))
    } else {
        Err(malformed(format!("byte {b:#04x} outside the printable range")))
    }
}

/// Decodes the vertex count. Returns `(n, bytes consumed)`.
fn decode_n(data: &[u8]) -> Result<(u64, usize)> {
    match data {
        [] => Err(malformed("empty input")),
        [126, 126, rest @ ..] => {
            let digits = rest.get(..6).ok_or_else(|| malformed("truncated 8-byte size"))?;
            let n = digits.iter().try_fold(0u64, |acc, &b| Ok::<_, Error>(acc << 6 | sextet(b)?))?;
            if n <= 258_047 {
                return Err(malformed("non-canonical 8-byte size"));
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            let digits = rest.get(..3).ok_or_else(|| malformed("truncated 4-byte size"))?;
            let n = digits.iter().try_fold(0u64, |acc, &b| Ok::<_, Error>(acc << 6 | sextet(b)?))?;
            if n <= 62 {
                return Err(malformed("non-canonical 4-byte size"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(*b)?, 1)),
    }
}

fn encode_n(n: u64, out: &mut Vec<u8>) {
    assert!(n <= MAX_N, "graph too large for graph6");
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
}

/// Parses one graph. An optional `>>graph6<<` header and a trailing newline
/// are accepted; anything else must be exactly the encoding.
pub fn parse_graph6(bytes: &[u8]) -> Result<SimpleGraph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    data = data.strip_suffix(b"\n").unwrap_or(data);
    data = data.strip_suffix(b"\r").unwrap_or(data);
    match data.first() {
        Some(b':') => return Err(malformed("sparse6 input is not supported")),
        Some(b'&') => return Err(malformed("digraph6 input is not supported")),
        _ => {}
    }
    let (n, used) = decode_n(data)?;
    let body = &data[used..];
    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    if body.len() as u128 != expected {
        return Err(malformed(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let n = usize::try_from(n).map_err(|_| malformed("vertex count too large"))?;
    let mut g = SimpleGraph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let used_bits = (bits % 6) as u32;
        if used_bits != 0 && sextet(last)? & ((1 << (6 - used_bits)) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
        sextet(last)?;
    }
    Ok(g)
}

/// Encodes without header or newline.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n as u64, &mut out);
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
    String::from_utf8(out).expect("graph6 is ASCII")
}
