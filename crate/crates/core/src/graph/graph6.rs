//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte (high bit
//! first) and offset by 63.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// newline are accepted. Edges are numbered in bit order, i.e. `(i, j)`
/// sorted by `j` then `i`.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(GraphError::parse(start, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(GraphError::parse(
                start + i,
                format!("byte {b:#04x} outside graph6 range"),
            ));
        }
    }
    let (n, header_len) = decode_size(body, start)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < byte_count {
        return Err(GraphError::parse(
            start + body.len(),
            format!(
                "expected {byte_count} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > byte_count {
        return Err(GraphError::parse(
            start + header_len + byte_count,
            "trailing bytes after adjacency data",
        ));
    }
    if byte_count > 0 {
        let pad = byte_count * 6 - bit_count;
        let last = data[byte_count - 1] - BIAS;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(GraphError::parse(
                start + header_len + byte_count - 1,
                "nonzero padding bits",
            ));
        }
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

fn decode_size(body: &[u8], start: usize) -> Result<(usize, usize), GraphError> {
    let groups = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize)
    };
    if body[0] != 126 {
        return Ok(((body[0] - BIAS) as usize, 1));
    }
    if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(GraphError::parse(
                start + body.len(),
                "truncated 8-byte size field",
            ));
        }
        return Ok((groups(&body[2..8]), 8));
    }
    if body.len() < 4 {
        return Err(GraphError::parse(
            start + body.len(),
            "truncated 4-byte size field",
        ));
    }
    Ok((groups(&body[1..4]), 4))
}

/// Encodes a graph as a graph6 string, without header or newline.
pub fn to_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; bit_count.div_ceil(6)];
    for &(u, v) in graph.edges() {
        // u < v, column v, row u
        let k = v * (v - 1) / 2 + u;
        bits[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(bits.into_iter().map(|b| b + BIAS));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_empty() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);
        let empty = parse_graph6("D??").unwrap();
        assert_eq!(empty.vertex_count(), 5);
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(to_graph6(&empty), "D??");
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
        assert_eq!(parse_graph6("@").unwrap().vertex_count(), 1);
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(GraphError::Parse { offset: 0, .. })
        ));
        // 4 vertices need one data byte
        assert!(matches!(
            parse_graph6("C"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(GraphError::Parse { offset: 2, .. })
        ));
        // byte below 63
        assert!(matches!(
            parse_graph6("C!"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        // 3 vertices carry 3 bits, the low 3 bits of the byte must be zero
        assert!(matches!(
            parse_graph6("B@"),
            Err(GraphError::Parse { offset: 1, .. })
        ));
        assert!(matches!(parse_graph6("~?"), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn degree_four_rejected() {
        // K5: every vertex has degree 4
        let k5 = "D~{";
        assert!(matches!(
            parse_graph6(k5),
            Err(GraphError::DegreeTooLarge {
                vertex: _,
                degree: 4
            })
        ));
    }

    #[test]
    fn long_size_field_round_trips() {
        let n = 100;
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let cycle = Graph::new(n, &edges).unwrap();
        let text = to_graph6(&cycle);
        assert!(text.starts_with('~'));
        let back = parse_graph6(&text).unwrap();
        assert_eq!(back.vertex_count(), n);
        assert_eq!(back.edge_count(), n);
        assert_eq!(to_graph6(&back), text);
    }
}
