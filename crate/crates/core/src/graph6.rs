//! graph6 encoding: `N(n)` size prefix, then the upper triangle packed
//! column-wise six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use std::io::BufRead;

pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Encodes `g`. Graphs on 63 or 64 vertices use the four-byte size prefix.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string, with or without the `>>graph6<<` header.
/// A single trailing line terminator is ignored.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let (start, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, format!("byte 0x{b:02x} is outside the printable graph6 range")));
        }
    }
    let Some(&first) = body.first() else {
        return Err(err(start, "missing size prefix"));
    };
    let (n, mut pos) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(err(start + body.len(), "truncated size prefix"));
        }
        if body[1] == 126 {
            return Err(err(start + 1, "eight-byte size prefix is beyond the supported range"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(err(start, format!("non-canonical long size prefix for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(start, format!("n = {n} exceeds {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(err(start + body.len(), format!("expected {need} adjacency bytes, found {have}")));
    }
    if have > need {
        return Err(err(start + pos + need, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = body[pos - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(start + pos - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Reads one graph per line. Blank lines are skipped; errors carry the
/// 1-based line number. In lenient mode a bad line yields its error and
/// reading continues; otherwise the first bad line ends the stream.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    lenient: bool,
    failed: bool,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader { inner, line: 0, lenient: false, failed: false, buf: String::new() }
    }

    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }

    /// Line number of the most recently read line.
    pub fn line(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        loop {
            self.buf.clear();
            match self.inner.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    self.failed = true;
                    return Some(Err(e.into()));
                }
            }
            self.line += 1;
            let text = self.buf.trim_end_matches(['\n', '\r']);
            if text.trim().is_empty() {
                continue;
            }
            return match from_graph6(text) {
                Ok(g) => Some(Ok(g)),
                Err(e) => {
                    if !self.lenient {
                        self.failed = true;
                    }
                    Some(Err(Error::Line { line: self.line, source: Box::new(e) }))
                }
            };
        }
    }
}
