//! graph6 encoding (short form for n <= 62, long form up to the vertex capacity).
//!
//! The upper triangle of the adjacency matrix is packed column by column:
//! bit `x(i, j)` for `0 <= i < j < n`, ordered by `j` then `i`, six bits per
//! printable byte with 63 added. Padding bits in the last byte must be zero.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::CAPACITY;

const HEADER: &[u8] = b">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| err(offset, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(err(offset, format!("byte {b:#04x} outside the range 63..=126")));
    }
    Ok(u32::from(b - 63))
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and a single
/// trailing newline are accepted.
pub fn decode(input: &[u8]) -> Result<Graph> {
    let mut bytes = input;
    let mut base = 0;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    if let Some(stripped) = bytes.strip_suffix(b"\n") {
        bytes = stripped.strip_suffix(b"\r").unwrap_or(stripped);
    }
    if bytes.is_empty() {
        return Err(err(base, "empty graph6 string"));
    }
    let (n, body_start) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(err(base, "8-byte size header exceeds the vertex capacity"));
        }
        let mut n = 0usize;
        for k in 1..=3 {
            n = (n << 6) | sextet(bytes, k).map_err(|e| shift(e, base))? as usize;
        }
        if n <= 62 {
            return Err(err(base, format!("long-form header used for n = {n} <= 62")));
        }
        (n, 4)
    } else {
        (sextet(bytes, 0).map_err(|e| shift(e, base))? as usize, 1)
    };
    if n > CAPACITY {
        return Err(Error::Capacity(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != need {
        let at = base + body_start + body.len().min(need);
        return Err(err(
            at,
            format!("expected {need} adjacency bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = body_start + bit / 6;
            let word = sextet(bytes, offset).map_err(|e| shift(e, base))?;
            if (word >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if need > 0 {
        let offset = body_start + need - 1;
        let last = sextet(bytes, offset).map_err(|e| shift(e, base))?;
        let pad = need * 6 - bits;
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(err(base + offset, "nonzero padding bits in final byte"));
        }
    }
    Ok(g)
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, message } => Error::Graph6 {
            offset: offset + base,
            message,
        },
        other => other,
    }
}

pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.as_bytes())
}

/// Parses a catalog: one graph6 record per line; blank lines are skipped.
/// Errors report the line number with the byte offset inside the record.
pub fn decode_catalog(text: &str) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let g = decode(line.as_bytes()).map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.push((line.to_string(), g));
    }
    Ok(out)
}
