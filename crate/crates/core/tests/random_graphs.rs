//! Invariants on random connected graphs beyond the census range.

use grover_core::graph::{
    canonical_form, encode_graph6, format_edge_list, from_edge_list, parse_graph6, relabel, Graph,
};
use grover_core::grover::GroverOperator;
use grover_core::periodicity::detect_period;
use proptest::prelude::*;

/// A random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            for (u, v) in extra {
                let e = (u.min(v), u.max(v));
                if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
                    edges.push(e);
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn u_is_orthogonal(g in connected_graph(9)) {
        let op = GroverOperator::new(g);
        prop_assert!(op.u().transpose().matmul(op.u()).unwrap().is_identity());
    }

    #[test]
    fn factorization_matches_direct_charpoly(g in connected_graph(7)) {
        prop_assume!(g.arc_count() <= 24);
        prop_assert!(GroverOperator::new(g).verify_factorization(40).unwrap());
    }

    #[test]
    fn formats_round_trip(g in connected_graph(12)) {
        prop_assert_eq!(&parse_graph6(&encode_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&format_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn canonical_form_is_invariant(g in connected_graph(8), perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < g.vertex_count()).collect();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&relabel(&g, &perm)).unwrap());
    }

    #[test]
    fn subdivision_doubles_any_period(g in connected_graph(6)) {
        let period = detect_period(&GroverOperator::new(g.clone())).unwrap().period();
        if let Some(k) = period {
            let sub = detect_period(&GroverOperator::new(g.subdivide())).unwrap().period();
            prop_assert_eq!(sub, Some(2 * k));
        }
    }

    #[test]
    fn classification_matches_edge_count(g in connected_graph(10)) {
        let class = g.classify();
        let (n, m) = (g.vertex_count(), g.edge_count());
        prop_assert_eq!(class.is_tree(), m + 1 == n);
        prop_assert_eq!(class.girth.is_none(), m + 1 == n);
        if g.bipartition().is_none() {
            let cycle = g.odd_cycle_witness().unwrap();
            prop_assert!(cycle.len() % 2 == 1);
            for i in 0..cycle.len() {
                prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
    }
}
