//! Brute-force canonical labeling for small graphs.
//!
//! A labeled graph on `n` vertices is identified with its upper-triangle
//! adjacency bit string in graph6 pair order `(0,1), (0,2), (1,2), (0,3), ...`.
//! The canonical form is the lexicographically smallest such string over all
//! `n!` relabelings, returned as the graph6 encoding of that labeling.

use std::sync::OnceLock;

use super::{encode_graph6, Graph, GraphError};

pub const CANONICAL_MAX_VERTICES: usize = 8;

/// Position of the unordered pair `{i, j}` in graph6 order.
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn permutations(n: usize) -> &'static [[u8; CANONICAL_MAX_VERTICES]] {
    static TABLES: OnceLock<Vec<Vec<[u8; CANONICAL_MAX_VERTICES]>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=CANONICAL_MAX_VERTICES)
            .map(|n| {
                let mut out = Vec::new();
                let mut current: Vec<u8> = (0..n as u8).collect();
                permute(&mut current, 0, &mut out);
                out
            })
            .collect()
    });
    &tables[n]
}

fn permute(items: &mut Vec<u8>, start: usize, out: &mut Vec<[u8; CANONICAL_MAX_VERTICES]>) {
    if start == items.len() {
        let mut perm = [0u8; CANONICAL_MAX_VERTICES];
        perm[..items.len()].copy_from_slice(items);
        out.push(perm);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, out);
        items.swap(start, i);
    }
}

/// Keys of every relabeling of the labeled graph `edges` on `n` vertices.
/// The most significant of the `pair_count(n)` bits is pair 0.
pub(crate) fn orbit_keys(n: usize, edges: &[(usize, usize)]) -> impl Iterator<Item = u32> + '_ {
    debug_assert!(n <= CANONICAL_MAX_VERTICES);
    let top = pair_count(n);
    permutations(n).iter().map(move |perm| {
        edges.iter().fold(0u32, |key, &(u, v)| {
            key | 1 << (top - 1 - pair_index(perm[u] as usize, perm[v] as usize))
        })
    })
}

/// Relabels vertex `v` as `perm[v]`.
pub fn relabel(graph: &Graph, perm: &[usize]) -> Graph {
    assert_eq!(
        perm.len(),
        graph.vertex_count(),
        "permutation length mismatch"
    );
    let edges = graph.edges().iter().map(|&(u, v)| (perm[u], perm[v]));
    Graph::new(graph.vertex_count(), edges).expect("relabeling preserves validity")
}

/// Canonical form of a graph on at most eight vertices: equal outputs exactly
/// when the inputs are isomorphic.
pub fn canonical_form(graph: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = graph.vertex_count();
    if n > CANONICAL_MAX_VERTICES {
        return Err(GraphError::Size(format!(
            "brute-force canonical form supports at most {CANONICAL_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let (_, perm) = orbit_keys(n, graph.edges())
        .zip(permutations(n))
        .min_by_key(|&(key, _)| key)
        .expect("at least one permutation");
    let perm: Vec<usize> = perm[..n].iter().map(|&x| x as usize).collect();
    Ok(encode_graph6(&relabel(graph, &perm)).into_bytes())
}
