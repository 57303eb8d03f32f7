use super::{Graph, GraphError};

/// Named graph families with canonical vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_l`: vertices `0..l` in path order.
    Path(usize),
    /// `C_l`: vertices `0..l` in cyclic order.
    Cycle(usize),
    /// `K_l`.
    Complete(usize),
    /// `K_{r,s}`: block `0..r` joined to block `r..r+s`.
    CompleteBipartite(usize, usize),
    /// Star on `l` vertices (`K_{1,l-1}`), center 0.
    Star(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph, GraphError> {
        let size = |msg: String| Err(GraphError::Size(msg));
        match self {
            Family::Path(l) if l < 2 => size(format!("path needs at least 2 vertices, got {l}")),
            Family::Path(l) => Graph::new(l, (1..l).map(|v| (v - 1, v))),
            Family::Cycle(l) if l < 3 => size(format!("cycle needs at least 3 vertices, got {l}")),
            Family::Cycle(l) => Graph::new(l, (0..l).map(|v| (v, (v + 1) % l))),
            Family::Complete(l) if l < 2 => {
                size(format!("complete graph needs at least 2 vertices, got {l}"))
            }
            Family::Complete(l) => Graph::new(l, (1..l).flat_map(|j| (0..j).map(move |i| (i, j)))),
            Family::CompleteBipartite(r, s) if r == 0 || s == 0 => size(format!(
                "complete bipartite blocks must be non-empty, got ({r}, {s})"
            )),
            Family::CompleteBipartite(r, s) => {
                Graph::new(r + s, (0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))))
            }
            Family::Star(l) if l < 2 => size(format!("star needs at least 2 vertices, got {l}")),
            Family::Star(l) => Graph::new(l, (1..l).map(|v| (0, v))),
        }
    }
}
