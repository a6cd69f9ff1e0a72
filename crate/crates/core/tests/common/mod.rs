#![allow(dead_code)]

use dmp_core::Graph;
use proptest::prelude::*;

/// Graphs with 1..=max_n vertices built from up to `max_pairs` random pairs.
pub fn arb_graph(max_n: usize, max_pairs: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..max_pairs).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// A graph together with one of its edges.
pub fn arb_graph_with_edge(max_n: usize, max_pairs: usize) -> impl Strategy<Value = (Graph, usize)> {
    arb_graph(max_n, max_pairs)
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
        .prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), 0..m)
        })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
