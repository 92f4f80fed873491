//! Graph interchange formats: the plain edge-list text format and the
//! standard graph6 ASCII encoding.

use super::Graph;
use crate::error::{Error, Result};

/// Parse the edge-list format: first line `n m`, then `m` lines `u v` with
/// 0-based endpoints. Rejects duplicates, self-loops and inconsistent counts.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::ParseEdgeList { line: 1, msg: "empty input".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = parse_field(it.next(), lineno, "vertex count")?;
    let m: usize = parse_field(it.next(), lineno, "edge count")?;
    if it.next().is_some() {
        return Err(Error::ParseEdgeList {
            line: lineno + 1,
            msg: "header must be exactly 'n m'".into(),
        });
    }
    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_field(it.next(), lineno, "endpoint")?;
        let v: usize = parse_field(it.next(), lineno, "endpoint")?;
        if it.next().is_some() {
            return Err(Error::ParseEdgeList {
                line: lineno + 1,
                msg: "edge line must be exactly 'u v'".into(),
            });
        }
        if u >= n || v >= n {
            return Err(Error::ParseEdgeList {
                line: lineno + 1,
                msg: format!("endpoint out of range for n = {n}"),
            });
        }
        if u == v {
            return Err(Error::ParseEdgeList {
                line: lineno + 1,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if !g.add_edge(u, v) {
            return Err(Error::ParseEdgeList {
                line: lineno + 1,
                msg: format!("duplicate edge ({u},{v})"),
            });
        }
        seen += 1;
    }
    if seen != m {
        return Err(Error::ParseEdgeList {
            line: 0,
            msg: format!("header declares m = {m} but {seen} edges listed"),
        });
    }
    Ok(g)
}

fn parse_field(tok: Option<&str>, lineno: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::ParseEdgeList {
        line: lineno + 1,
        msg: format!("missing {what}"),
    })?
    .parse()
    .map_err(|e| Error::ParseEdgeList {
        line: lineno + 1,
        msg: format!("bad {what}: {e}"),
    })
}

/// Serialize in the edge-list format with edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decode one graph6 line (optionally prefixed with the `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim().trim_start_matches(">>graph6<<");
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::ParseGraph6("empty line".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::ParseGraph6(format!("byte {b} outside graph6 range")));
        }
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
    let (n, header_len) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else if vals.len() >= 8 {
        let mut n = 0u64;
        for &v in &vals[2..8] {
            n = n << 6 | v;
        }
        (n as usize, 8)
    } else {
        return Err(Error::ParseGraph6("truncated size header".into()));
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let avail = (vals.len() - header_len) * 6;
    if avail < nbits {
        return Err(Error::ParseGraph6(format!(
            "need {nbits} adjacency bits, got {avail}"
        )));
    }
    let mut g = Graph::empty(n);
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let word = vals[header_len + pos / 6];
            if word >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Encode as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut vals: Vec<u8> = Vec::new();
    if n < 63 {
        vals.push(n as u8);
    } else if n < 258048 {
        vals.push(63);
        vals.push((n >> 12 & 63) as u8);
        vals.push((n >> 6 & 63) as u8);
        vals.push((n & 63) as u8);
    } else {
        vals.push(63);
        vals.push(63);
        for shift in (0..36).step_by(6).rev() {
            vals.push((n >> shift & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                vals.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        vals.push(acc << (6 - nbits));
    }
    vals.iter().map(|&v| (v + 63) as char).collect()
}
