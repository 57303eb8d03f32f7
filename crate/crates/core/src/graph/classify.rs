use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(length: usize) -> Parity {
        if length.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Shape by edge count. A bare cycle is not called unicyclic: `Unicyclic`
/// requires `m = n` with at least one vertex of degree other than 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Tree,
    Cycle(usize),
    Unicyclic(usize),
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureClass {
    pub kind: StructureKind,
    /// Parity of the unique cycle, for `Cycle` and `Unicyclic`.
    pub parity: Option<Parity>,
    pub bipartite: bool,
    pub girth: Option<usize>,
}

impl StructureClass {
    pub fn is_tree(&self) -> bool {
        self.kind == StructureKind::Tree
    }

    pub fn is_odd_cycle(&self) -> bool {
        matches!(self.kind, StructureKind::Cycle(l) if l % 2 == 1)
    }

    pub fn is_odd_unicyclic(&self) -> bool {
        matches!(self.kind, StructureKind::Unicyclic(l) if l % 2 == 1)
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            StructureKind::Tree => "tree",
            StructureKind::Cycle(_) => "cycle",
            StructureKind::Unicyclic(_) => "unicyclic",
            StructureKind::Other => "other",
        }
    }
}

/// Endpoints of a same-colored edge plus the BFS parent table.
type Conflict = (usize, usize, Vec<Option<usize>>);

impl Graph {
    pub fn classify(&self) -> StructureClass {
        let (n, m) = (self.vertex_count(), self.edge_count());
        let girth = self.girth();
        let kind = if m + 1 == n {
            StructureKind::Tree
        } else if m == n {
            let length = girth.expect("a connected graph with m = n has a cycle");
            if self.degrees().iter().all(|&d| d == 2) {
                StructureKind::Cycle(length)
            } else {
                StructureKind::Unicyclic(length)
            }
        } else {
            StructureKind::Other
        };
        let parity = match kind {
            StructureKind::Cycle(l) | StructureKind::Unicyclic(l) => Some(Parity::of(l)),
            _ => None,
        };
        StructureClass {
            kind,
            parity,
            bipartite: self.bipartition().is_some(),
            girth,
        }
    }

    /// Two-coloring by BFS; `side[v]` is true for the block not containing 0.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let (side, conflict) = self.two_color();
        conflict.is_none().then_some(side)
    }

    fn two_color(&self) -> (Vec<bool>, Option<Conflict>) {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![None; n];
        color[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in self.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = Some(u);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        let side = color.iter().map(|c| c.unwrap_or(false)).collect();
                        return (side, Some((u, v, parent)));
                    }
                    Some(_) => {}
                }
            }
        }
        (
            color.into_iter().map(|c| c.unwrap_or(false)).collect(),
            None,
        )
    }

    /// A closed walk of odd length, as a vertex cycle `v0, v1, ..., vk` with
    /// `vk` adjacent to `v0`, or `None` when the graph is bipartite.
    pub fn odd_cycle_witness(&self) -> Option<Vec<usize>> {
        let (_, conflict) = self.two_color();
        let (u, v, parent) = conflict?;
        let path_to_root = |mut x: usize| {
            let mut path = vec![x];
            while let Some(p) = parent[x] {
                path.push(p);
                x = p;
            }
            path
        };
        let pu = path_to_root(u);
        let pv = path_to_root(v);
        // Strip the common suffix down to the lowest common ancestor.
        let mut common = 0;
        while common < pu.len().min(pv.len())
            && pu[pu.len() - 1 - common] == pv[pv.len() - 1 - common]
        {
            common += 1;
        }
        let mut cycle: Vec<usize> = pu[..=pu.len() - common].to_vec();
        cycle.extend(pv[..pv.len() - common].iter().rev());
        Some(cycle)
    }

    /// Shortest cycle length by BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let length = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(length, |b| b.min(length)));
                    }
                }
            }
        }
        best
    }

    /// Block sizes `(r, s)` with `r <= s` when the graph is complete bipartite.
    pub fn complete_bipartite_sizes(&self) -> Option<(usize, usize)> {
        let side = self.bipartition()?;
        let r = side.iter().filter(|&&s| !s).count();
        let s = side.len() - r;
        (self.edge_count() == r * s).then_some((r.min(s), r.max(s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{from_edge_list, Family};

    #[test]
    fn c5() {
        let class = Family::Cycle(5).build().unwrap().classify();
        assert_eq!(class.kind, StructureKind::Cycle(5));
        assert_eq!(class.parity, Some(Parity::Odd));
        assert!(!class.bipartite);
        assert_eq!(class.girth, Some(5));
    }

    #[test]
    fn k13_is_tree() {
        let class = Family::CompleteBipartite(1, 3).build().unwrap().classify();
        assert_eq!(class.kind, StructureKind::Tree);
        assert!(class.bipartite);
        assert_eq!(class.girth, None);
        assert_eq!(class.parity, None);
    }

    #[test]
    fn triangle_with_pendant() {
        let g = from_edge_list("0 1\n1 2\n2 0\n0 3").unwrap();
        let class = g.classify();
        assert_eq!(class.kind, StructureKind::Unicyclic(3));
        assert_eq!(class.parity, Some(Parity::Odd));
        assert_eq!(class.girth, Some(3));
        assert!(class.is_odd_unicyclic());
    }

    #[test]
    fn even_unicyclic_and_other() {
        let g = from_edge_list("0 1\n1 2\n2 3\n3 0\n3 4").unwrap();
        let class = g.classify();
        assert_eq!(class.kind, StructureKind::Unicyclic(4));
        assert!(class.bipartite);
        let k4 = Family::Complete(4).build().unwrap().classify();
        assert_eq!(k4.kind, StructureKind::Other);
        assert_eq!(k4.girth, Some(3));
    }

    #[test]
    fn girth_of_larger_cycles() {
        let theta = from_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3").unwrap();
        assert_eq!(theta.girth(), Some(4));
        assert_eq!(Family::Cycle(9).build().unwrap().girth(), Some(9));
        assert_eq!(Family::Complete(4).build().unwrap().girth(), Some(3));
    }

    #[test]
    fn odd_cycle_witness_is_a_real_odd_cycle() {
        for g in [
            Family::Cycle(7).build().unwrap(),
            Family::Complete(5).build().unwrap(),
            from_edge_list("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6").unwrap(),
        ] {
            let cycle = g.odd_cycle_witness().unwrap();
            assert_eq!(cycle.len() % 2, 1);
            for i in 0..cycle.len() {
                assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
        assert!(Family::Cycle(6)
            .build()
            .unwrap()
            .odd_cycle_witness()
            .is_none());
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert_eq!(
            Family::CompleteBipartite(3, 2)
                .build()
                .unwrap()
                .complete_bipartite_sizes(),
            Some((2, 3))
        );
        assert_eq!(
            Family::Cycle(4).build().unwrap().complete_bipartite_sizes(),
            Some((2, 2))
        );
        assert_eq!(
            Family::Path(4).build().unwrap().complete_bipartite_sizes(),
            None
        );
        assert_eq!(
            Family::Cycle(6).build().unwrap().complete_bipartite_sizes(),
            None
        );
        assert_eq!(
            Family::Cycle(3).build().unwrap().complete_bipartite_sizes(),
            None
        );
    }
}
