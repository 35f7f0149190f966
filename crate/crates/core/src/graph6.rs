//! graph6 codec, bit-exact per the published format description.
//!
//! Only the short form (order <= 62, single size byte) is needed here since the
//! crate caps orders at [`VERTEX_CAP`](crate::graph::VERTEX_CAP).

use crate::error::Error;
use crate::graph::{Graph, VERTEX_CAP};

/// Encodes a graph as a graph6 string.
///
/// Layout: one byte `order + 63`, then the upper triangle of the adjacency
/// matrix in column-major order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...),
/// packed big-endian into 6-bit groups, each offset by 63.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes a graph6 string, validating strictly: correct length, bytes in
/// `63..=126`, zero padding bits, and order within capacity.
pub fn decode(text: &str) -> Result<Graph, Error> {
    let bad = |reason: &str| Error::BadGraph6 {
        text: text.to_string(),
        reason: reason.into(),
    };
    let bytes = text.as_bytes();
    let &first = bytes.first().ok_or_else(|| bad("empty string"))?;
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside the graph6 range 63..=126"));
    }
    if first == 126 {
        // long-form order prefix; such graphs are far beyond our capacity anyway
        return Err(bad("long-form orders (>62 vertices) are not supported"));
    }
    let n = (first - 63) as usize;
    if n > VERTEX_CAP {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(bad("wrong length for the stated order"));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                g.add_edge(u, v)?;
            }
            idx += 1;
        }
    }
    // any bits past the triangle must be zero
    for pad in nbits..(expect - 1) * 6 {
        if (bytes[1 + pad / 6] - 63) & (1 << (5 - pad % 6)) != 0 {
            return Err(bad("non-zero padding bits"));
        }
    }
    Ok(g)
}
