use super::{Graph, GraphError};

/// Parses a line-oriented edge list: one whitespace-separated `u v` pair per
/// line, `#` starts a comment. Vertex ids must be dense in `0..n`.
///
/// Gap errors are reported with `line: 0` since they concern the whole input.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_error = |message: String| GraphError::Parse {
            line: lineno + 1,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(format!(
                "expected two vertex ids, found {}",
                tokens.len()
            )));
        }
        let mut ids = [0usize; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = token
                .parse()
                .map_err(|_| parse_error(format!("`{token}` is not a non-negative integer")))?;
        }
        if ids[0] == ids[1] {
            return Err(GraphError::Loop(ids[0]));
        }
        edges.push((ids[0], ids[1]));
    }
    let n = match edges.iter().map(|&(u, v)| u.max(v)).max() {
        Some(max) => max + 1,
        None => {
            return Err(GraphError::Parse {
                line: 0,
                message: "no edges".into(),
            })
        }
    };
    let mut present = vec![false; n];
    for &(u, v) in &edges {
        present[u] = true;
        present[v] = true;
    }
    if let Some(missing) = present.iter().position(|&p| !p) {
        return Err(GraphError::Parse {
            line: 0,
            message: format!("vertex ids are not dense: {missing} never appears"),
        });
    }
    Graph::new(n, edges)
}

/// Writes one `u v` line per edge, in sorted edge order.
pub fn format_edge_list(graph: &Graph) -> String {
    graph
        .edges()
        .iter()
        .map(|(u, v)| format!("{u} {v}\n"))
        .collect()
}
