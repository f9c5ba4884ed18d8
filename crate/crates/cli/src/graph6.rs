//! Standard graph6 text encoding for graphs on at most 62 vertices.

use anyhow::{bail, Result};
use metamour_core::Graph;

/// Encode as graph6: header byte 63+n, then the upper triangle in column
/// order packed 6 bits per byte (MSB first), each byte offset by 63.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        bail!("graph6 short form supports at most 62 vertices, got {n}");
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("printable range"))
}

pub fn decode_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end().as_bytes();
    let Some((&header, payload)) = bytes.split_first() else {
        bail!("empty graph6 string");
    };
    if !(63..=125).contains(&header) {
        bail!("unsupported graph6 header byte {header} (short form only)");
    }
    let n = (header - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if payload.len() != expected {
        bail!(
            "graph6 payload for n={n} needs {expected} bytes, got {}",
            payload.len()
        );
    }
    let mut bits = Vec::with_capacity(bit_count);
    for &b in payload {
        if !(63..=126).contains(&b) {
            bail!("graph6 payload byte {b} out of range");
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[pos] {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    if bits[pos..].iter().any(|&b| b) {
        bail!("graph6 padding bits must be zero");
    }
    Ok(Graph::build(n, &edges)?)
}
