mod common;

use common::{graph_strategy, spec_strategy};
use linetw_core::{complete_multipartite, line_graph, Edge, Graph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn line_graph_structure(g in graph_strategy(9)) {
        let (lg, map) = line_graph(&g);
        prop_assert_eq!(lg.vertex_count(), g.edge_count());
        let expected: usize = (0..g.vertex_count()).map(|x| g.degree(x) * g.degree(x).saturating_sub(1) / 2).sum();
        prop_assert_eq!(lg.edge_count(), expected);
        for a in 0..lg.vertex_count() {
            for b in a + 1..lg.vertex_count() {
                let (ea, eb) = (g.edges()[a], g.edges()[b]);
                let share = ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
                prop_assert_eq!(lg.has_edge(a, b), share);
            }
        }
        for (i, &e) in g.edges().iter().enumerate() {
            prop_assert_eq!(map.vertex_of(e), Some(i));
            prop_assert_eq!(map.edge_of(i), Some(e));
        }
    }

    #[test]
    fn edges_are_canonical(g in graph_strategy(9)) {
        prop_assert!(g.edges().windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
        prop_assert!(g.edges().iter().all(|e| e.u < e.v));
        for (i, e) in g.edges().iter().enumerate() {
            prop_assert_eq!(g.edge_index(e.v, e.u), Some(i));
        }
        let rebuilt = Graph::new(g.vertex_count(), g.edges().iter().rev().map(|e| (e.v, e.u))).unwrap();
        prop_assert_eq!(rebuilt, g);
    }

    #[test]
    fn multipartite_structure(spec in spec_strategy(5, 4, 12)) {
        let g = complete_multipartite(&spec);
        prop_assert_eq!(g.vertex_count(), spec.n());
        prop_assert_eq!(g.edge_count(), spec.cross_pairs());
        let colour = g.colour_of().unwrap();
        for a in 0..spec.n() {
            prop_assert_eq!(Some(colour[a]), spec.class_of(a));
            for b in a + 1..spec.n() {
                prop_assert_eq!(g.has_edge(a, b), colour[a] != colour[b]);
            }
        }
    }
}

#[test]
fn edge_normalisation() {
    assert_eq!(Edge::new(4, 1), Some(Edge { u: 1, v: 4 }));
    assert_eq!(Edge::new(2, 2), None);
}
