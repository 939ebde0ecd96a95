//! graph6 codec, restricted to the single-byte size form (order <= 62).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible with the single-byte size prefix.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some((&size, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if !(63..=126).contains(&size) {
        return Err(Error::Graph6(format!("size byte {size} outside 63..=126")));
    }
    let n = (size - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 is not a graph here".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} edge bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {b} at offset {} outside 63..=126",
                i + 1
            )));
        }
        let six = b - 63;
        for shift in (0..6).rev() {
            let bit = (six >> shift) & 1 == 1;
            if k >= bits {
                if bit {
                    return Err(Error::Graph6("nonzero padding bits".into()));
                }
            } else if bit {
                edges.push(pair_at(k));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::CeilingExceeded {
            what: "graph6 emission",
            limit: GRAPH6_MAX_ORDER,
            got: n,
        });
    }
    let bits = n * (n - 1) / 2;
    let mut out = String::with_capacity(1 + bits.div_ceil(6));
    out.push((n as u8 + 63) as char);
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
    Ok(out)
}

/// The `k`-th upper-triangle pair in column order: (0,1),(0,2),(1,2),(0,3),...
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut base = 0;
    while base + j <= k {
        base += j;
        j += 1;
    }
    (k - base, j)
}
