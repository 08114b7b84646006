//! graph6 encoding: 6-bit chunks biased by 63, upper triangle in column
//! order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`).

use super::{Graph, ParseError};

/// Largest order representable with the short and 4-byte headers.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, ParseError> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(err(offset, format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    Ok(u32::from(b - 63))
}

/// Decodes a single graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (start, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(err(start, "missing order byte"));
    }
    let (n, mut pos) = if body[0] == 126 {
        if body.len() > 1 && body[1] == 126 {
            return Err(err(start + 1, "8-byte order header unsupported"));
        }
        if body.len() < 4 {
            return Err(err(start + body.len(), "truncated 4-byte order header"));
        }
        let mut n = 0u32;
        for i in 1..4 {
            n = (n << 6) | sextet(body, i).map_err(|e| shift(e, start))?;
        }
        if n < 63 {
            return Err(err(start, format!("order {n} must use the short header")));
        }
        (n as usize, 4)
    } else {
        (sextet(body, 0).map_err(|e| shift(e, start))? as usize, 1)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(err(
            start + pos,
            format!(
                "expected {need} data bytes for order {n}, found {}",
                body.len() - pos
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut chunk = 0u32;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                chunk = sextet(body, pos).map_err(|e| shift(e, start))?;
                pos += 1;
            }
            if chunk & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if chunk & ((1 << pad) - 1) != 0 {
            return Err(err(start + pos - 1, "non-zero padding bits"));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("upper-triangle bits describe a simple graph"))
}

fn shift(e: ParseError, by: usize) -> ParseError {
    match e {
        ParseError::Graph6 { offset, message } => ParseError::Graph6 {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// Encodes `g` as one graph6 line (no header, no trailing newline).
///
/// Panics if the order exceeds [`GRAPH6_MAX_ORDER`].
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= GRAPH6_MAX_ORDER, "graph6 order limit exceeded");
    let mut out = Vec::with_capacity(4 + (n * n) / 12);
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            bit += 1;
            if bit % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if bit % 6 != 0 {
        chunk <<= 6 - bit % 6;
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 is ascii")
}
