use super::{Graph, GraphError};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

const MAX_VERTICES: usize = 258_047;

fn parse_error(message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line: 1,
        message: message.into(),
    }
}

/// Decodes one graph6 token. The optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_error("empty graph6 string"));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_error(format!(
            "byte {bad} outside the graph6 range 63..=126"
        )));
    }
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        return Err(parse_error(format!(
            "graphs above {MAX_VERTICES} vertices are not supported"
        )));
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(parse_error(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if edges.is_empty() {
        return Err(if n >= 2 {
            GraphError::Disconnected
        } else {
            GraphError::Size("graph must have at least one edge".into())
        });
    }
    Graph::new(n, edges)
}

/// Encodes a graph as graph6 (no header).
pub fn encode_graph6(graph: &Graph) -> String {
    let n = graph.vertex_count();
    assert!(
        n <= MAX_VERTICES,
        "graph6 encoding supports at most {MAX_VERTICES} vertices"
    );
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|shift| ((n >> shift) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(graph.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use proptest::prelude::*;

    #[test]
    fn hand_encoded_tokens() {
        // n = 2 -> 'A'; single bit x(0,1) = 1 padded to 100000 = 32 -> '_'.
        let p2 = parse_graph6("A_").unwrap();
        assert_eq!((p2.vertex_count(), p2.edges()), (2, &[(0, 1)][..]));
        // n = 3 -> 'B'; bits x01 x02 x12 = 111 padded to 111000 = 56 -> 'w'.
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_graph6("A?"), Err(GraphError::Disconnected));
    }

    #[test]
    fn header_and_errors() {
        assert!(parse_graph6(">>graph6<<Bw\n").is_ok());
        assert!(matches!(parse_graph6(""), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6("Bww"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6("B"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6("A "), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6("@"), Err(GraphError::Size(_))));
    }

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&Family::Complete(4).build().unwrap()), "C~");
        assert_eq!(encode_graph6(&Family::Path(2).build().unwrap()), "A_");
    }

    #[test]
    fn large_vertex_count_form() {
        let g = Family::Cycle(70).build().unwrap();
        let token = encode_graph6(&g);
        assert_eq!(token.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&token).unwrap(), g);
    }

    proptest! {
        #[test]
        fn encode_parse_round_trip(n in 2usize..12, seed in any::<u64>()) {
            // Random spanning tree plus random extra edges keeps the graph connected.
            let mut state = seed | 1;
            let mut next = move || { state ^= state << 13; state ^= state >> 7; state ^= state << 17; state };
            let mut edges = Vec::new();
            for v in 1..n {
                edges.push(((next() as usize) % v, v));
            }
            for j in 1..n {
                for i in 0..j {
                    if next() % 3 == 0 && !edges.contains(&(i, j)) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
