//! graph6 short form (orders 1..=62).
//!
//! Byte 0 is `n + 63`. The upper triangle is then read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit groups,
//! zero-padded, and each group is stored as `value + 63`.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
pub const MAX_SHORT_ORDER: usize = 62;

fn malformed(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_SHORT_ORDER,
        "graph6 short form holds at most 62 vertices"
    );
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    // every byte is in 63..=126
    String::from_utf8(out).unwrap()
}

pub fn decode(text: &[u8]) -> Result<Graph> {
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    let (&first, rest) = body.split_first().ok_or_else(|| malformed("empty input"))?;
    if first == 126 {
        return Err(Error::UnsupportedOrder {
            n: 63,
            max: MAX_SHORT_ORDER,
        });
    }
    if !(64..126).contains(&first) {
        return Err(malformed(format!("malformed length byte 0x{first:02x}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if rest.len() < nbytes {
        return Err(malformed(format!(
            "truncated: expected {nbytes} data bytes, found {}",
            rest.len()
        )));
    }
    if rest.len() > nbytes {
        return Err(malformed(format!(
            "trailing garbage after {nbytes} data bytes"
        )));
    }
    if let Some(&b) = rest.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(malformed(format!("invalid data byte 0x{b:02x}")));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = rest[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    let pad = nbytes * 6 - nbits;
    if pad > 0 && (rest[nbytes - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(malformed("nonzero padding bits"));
    }
    Ok(g)
}

pub fn decode_str(text: &str) -> Result<Graph> {
    decode(text.as_bytes())
}

/// Reads one graph per non-blank line. Errors carry the 1-based line number.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Corpus {
            line: idx + 1,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let g = decode_str(trimmed).map_err(|e| Error::Corpus {
            line: idx + 1,
            message: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}
