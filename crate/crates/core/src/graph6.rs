//! graph6 encoding for graphs of order at most 62.
//!
//! Header byte is `63 + n`. The upper triangle is read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte with the
//! most significant bit first, padded with zeros and offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Optional header some generators prepend to each file.
pub const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty line".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("invalid header byte {head}")));
    }
    let n = (head - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!("order above {MAX_ORDER} is not supported")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b} at offset {}", pos + 1)));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|s| (v >> s) & 1 == 1));
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    Ok(g)
}
