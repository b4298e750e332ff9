//! graph6 encoding (McKay's format, no `>>graph6<<` header).
//!
//! Each byte carries six bits offset by 63. The order comes first; the upper
//! triangle of the adjacency matrix follows column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), big-endian within each byte and
//! zero-padded to a multiple of six bits.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const BIAS: u8 = 63;
const LONG_ORDER: u8 = 126;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(err(offset, "unexpected end of input")),
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(offset, format!("byte 0x{b:02x} outside the graph6 range 63..=126"))),
    }
}

/// Returns the order and the offset of the first data byte.
fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes.first() {
        None => Err(err(0, "empty input")),
        Some(&LONG_ORDER) => {
            if bytes.get(1) == Some(&LONG_ORDER) {
                let mut n = 0usize;
                for k in 0..6 {
                    n = n << 6 | sextet(bytes, 2 + k)? as usize;
                }
                Ok((n, 8))
            } else {
                let mut n = 0usize;
                for k in 0..3 {
                    n = n << 6 | sextet(bytes, 1 + k)? as usize;
                }
                Ok((n, 4))
            }
        }
        Some(_) => Ok((sextet(bytes, 0)? as usize, 1)),
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, start) = parse_order(bytes)?;
    if n == 0 {
        return Err(err(0, "graphs of order 0 are not accepted"));
    }
    if n > MAX_ORDER {
        return Err(err(0, format!("order {n} exceeds the supported maximum {MAX_ORDER}")));
    }
    let len = data_len(n);
    let expected = start + len;
    if bytes.len() < expected {
        return Err(err(
            bytes.len(),
            format!("truncated adjacency data: expected {len} bytes after the order"),
        ));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n)?;
    let total_bits = n * (n - 1) / 2;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = start + bit / 6;
            let byte = sextet(bytes, offset)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if total_bits % 6 != 0 {
        let offset = expected - 1;
        let last = sextet(bytes, offset)?;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(offset, "nonzero padding bits"));
        }
    }
    // every data byte must be in range even if it only carries padding
    for offset in start..expected {
        sextet(bytes, offset)?;
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_ORDER);
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
