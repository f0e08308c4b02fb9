//! graph6 and edge-list text formats.
//!
//! graph6 follows the usual definition: a size header (one byte `63 + n`
//! for `n <= 62`, otherwise `~` plus three 6-bit groups), then the upper
//! triangle read column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first, zero padded, each
//! byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line. Trailing `\r`/`\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(
            pos,
            format!("byte 0x{:02x} is not a graph6 character", bytes[pos]),
        ));
    }
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() > 1 && bytes[1] == 126 {
            return Err(g6_err(1, "8-byte size header is not supported"));
        }
        if bytes.len() < 4 {
            return Err(g6_err(bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(g6_err(0, format!("long size header used for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(g6_err(
            0,
            format!("n = {n} exceeds the supported {MAX_VERTICES} vertices"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let body_len = nbits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < body_len {
        return Err(g6_err(
            bytes.len(),
            format!("expected {body_len} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(g6_err(header + body_len, "trailing bytes after graph data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line without trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: `n <count>` on the first line, then one
/// `u v` pair per line. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::text(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| Error::text(hline, format!("bad vertex count `{count}`")))?,
        _ => return Err(Error::text(hline, "expected `n <count>`")),
    };
    let mut g = Graph::empty(n).map_err(|e| Error::text(hline, e.to_string()))?;
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(Error::text(line, "expected `u v`"));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::text(line, format!("bad vertex `{s}`")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(Error::text(line, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(Error::text(line, format!("loop at vertex {u}")));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads either format: edge list when the first meaningful line starts
/// with `n`, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("n ") || l == "n" => parse_edge_list(text),
        Some(l) => parse_graph6(l),
        None => Err(Error::text(1, "no graph in input")),
    }
}
