//! Finite simple connected graphs with a fixed symmetric-arc indexing.
//!
//! Every edge `{u, v}` contributes the two arcs `(u, v)` and `(v, u)`. Arcs are
//! numbered in lexicographic `(origin, terminus)` order, so the arcs leaving a
//! vertex occupy a contiguous block of the arc table.

mod canon;
mod classify;
mod generate;
mod graph6;
mod parse;

pub use canon::{canonical_form, relabel, CANONICAL_MAX_VERTICES};
pub use classify::{Parity, StructureClass, StructureKind};
pub use generate::Family;
pub use graph6::{encode_graph6, parse_graph6, GRAPH6_HEADER};
pub use parse::{format_edge_list, from_edge_list};

pub(crate) use canon::{orbit_keys, pair_count, pair_index};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    MultiEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("size error: {0}")]
    Size(String),
}

/// A directed arc `origin -> terminus` of the symmetric arc set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

impl Arc {
    pub fn reversed(self) -> Arc {
        Arc {
            origin: self.terminus,
            terminus: self.origin,
        }
    }
}

/// Immutable simple connected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    arcs: Vec<Arc>,
    arc_offset: Vec<usize>,
    inverse: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list over vertices `0..n`.
    ///
    /// Rejects loops, repeated edges (in either orientation), out-of-range
    /// endpoints, edgeless graphs and disconnected graphs.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut neighbors = vec![Vec::new(); n];
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::Size(format!(
                    "edge {{{u}, {v}}} references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            normalized.push((a, b));
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::MultiEdge(w[0].0, w[0].1));
        }
        if normalized.is_empty() {
            return Err(GraphError::Size("graph must have at least one edge".into()));
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        if !is_connected(&neighbors) {
            return Err(GraphError::Disconnected);
        }

        let mut arcs = Vec::with_capacity(2 * normalized.len());
        let mut arc_offset = Vec::with_capacity(n + 1);
        for (u, list) in neighbors.iter().enumerate() {
            arc_offset.push(arcs.len());
            arcs.extend(list.iter().map(|&v| Arc {
                origin: u,
                terminus: v,
            }));
        }
        arc_offset.push(arcs.len());

        let mut graph = Graph {
            n,
            edges: normalized,
            neighbors,
            arcs,
            arc_offset,
            inverse: Vec::new(),
        };
        graph.inverse = (0..graph.arcs.len())
            .map(|i| {
                graph
                    .arc_index(graph.arcs[i].reversed())
                    .expect("reverse arc exists")
            })
            .collect();
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    /// Index of `arc` in the arc table, if it is an arc of this graph.
    pub fn arc_index(&self, arc: Arc) -> Option<usize> {
        if arc.origin >= self.n {
            return None;
        }
        self.neighbors[arc.origin]
            .binary_search(&arc.terminus)
            .ok()
            .map(|pos| self.arc_offset[arc.origin] + pos)
    }

    /// Index of the reverse arc.
    pub fn inverse(&self, index: usize) -> usize {
        self.inverse[index]
    }

    /// Contiguous range of arc indices whose origin is `v`.
    pub fn arcs_from(&self, v: usize) -> std::ops::Range<usize> {
        self.arc_offset[v]..self.arc_offset[v + 1]
    }

    /// Replaces every edge by a two-edge path through a fresh vertex.
    ///
    /// The midpoint of the `i`-th edge (in sorted edge order) is vertex `n + i`.
    pub fn subdivide(&self) -> Graph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)]);
        Graph::new(n + self.edges.len(), edges).expect("subdivision of a valid graph is valid")
    }
}

fn is_connected(neighbors: &[Vec<usize>]) -> bool {
    if neighbors.is_empty() {
        return false;
    }
    let mut seen = vec![false; neighbors.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &neighbors[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == neighbors.len()
}
