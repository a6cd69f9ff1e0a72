mod common;

use common::{arb_graph, arb_graph_with_edge};
use dmp_core::graph::{Edge, VertexId};
use dmp_core::ops::{self, Operation};
use proptest::prelude::*;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

proptest! {
    #[test]
    fn add_then_delete_is_identity(g in arb_graph(12, 30), a in 0usize..12, b in 0usize..12) {
        prop_assume!(a < g.n() && b < g.n() && a != b && !g.has_edge(a, b));
        let added = ops::add_edge(&g, VertexId(a), VertexId(b)).unwrap();
        prop_assert_eq!(added.edge_count(), g.edge_count() + 1);
        prop_assert_eq!(ops::delete_edge(&added, VertexId(a), VertexId(b)).unwrap(), g);
    }

    #[test]
    fn subdivision_degrees((g, i) in arb_graph_with_edge(12, 30)) {
        let e = g.edges().nth(i).unwrap();
        let s = ops::subdivide_edge(&g, e.u(), e.v()).unwrap();
        prop_assert_eq!(s.n(), g.n() + 1);
        prop_assert_eq!(s.edge_count(), g.edge_count() + 1);
        prop_assert_eq!(s.degree(VertexId(g.n())).unwrap(), 2);
        prop_assert_eq!(&s.degrees()[..g.n()], &g.degrees()[..]);
        prop_assert!(!s.has_edge(e.u().0, e.v().0));
    }

    #[test]
    fn triangle_free_contraction_degree((g, i) in arb_graph_with_edge(12, 24)) {
        prop_assume!(g.is_triangle_free());
        let e = g.edges().nth(i).unwrap();
        let (c, map) = ops::contract_edge(&g, e.u(), e.v()).unwrap();
        let w = map.get(e.u()).unwrap();
        prop_assert_eq!(map.get(e.v()), Some(w));
        let du = g.degree(e.u()).unwrap();
        let dv = g.degree(e.v()).unwrap();
        prop_assert_eq!(c.degree(w).unwrap(), du + dv - 2);
        prop_assert_eq!(c.n(), g.n() - 1);
        prop_assert_eq!(c.edge_count(), g.edge_count() - 1);
    }

    #[test]
    fn contraction_merges_neighborhoods((g, i) in arb_graph_with_edge(12, 30)) {
        let e = g.edges().nth(i).unwrap();
        let (c, map) = ops::contract_edge(&g, e.u(), e.v()).unwrap();
        let w = map.get(e.u()).unwrap();
        let mut expected: Vec<usize> = g.neighbors(e.u().0).iter().chain(g.neighbors(e.v().0))
            .filter(|&&x| x != e.u().0 && x != e.v().0)
            .map(|&x| map.get(VertexId(x)).unwrap().0)
            .collect();
        expected.sort_unstable();
        expected.dedup();
        prop_assert_eq!(c.neighbors(w.0), &expected[..]);
    }

    #[test]
    fn vertex_add_and_delete((g, nbrs) in arb_graph(12, 30).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::btree_set(0..n, 1..=n))
    })) {
        let nbrs: Vec<VertexId> = nbrs.into_iter().map(VertexId).collect();
        let a = ops::add_vertex(&g, &nbrs).unwrap();
        let v = VertexId(g.n());
        prop_assert_eq!(a.degree(v).unwrap(), nbrs.len());
        let (back, map) = ops::delete_vertex(&a, v).unwrap();
        prop_assert_eq!(back, g.clone());
        prop_assert_eq!(map.get(v), None);
    }

    #[test]
    fn product_counts(g in arb_graph(6, 12), h in arb_graph(6, 12)) {
        let p = ops::cartesian_product(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * h.n());
        prop_assert_eq!(p.edge_count(), g.edge_count() * h.n() + h.edge_count() * g.n());
        for id in 0..p.n() {
            let (a, b) = ops::product_coordinates(h.n(), VertexId(id));
            prop_assert_eq!(p.degree(VertexId(id)).unwrap(), g.degree(a).unwrap() + h.degree(b).unwrap());
        }
        let q = ops::cartesian_product(&h, &g).unwrap();
        prop_assert_eq!(p.degree_sequence(), q.degree_sequence());
    }

    #[test]
    fn join_counts(g in arb_graph(8, 16), h in arb_graph(8, 16)) {
        let j = ops::join(&g, &h).unwrap();
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
        let expected: Vec<usize> = g.degrees().iter().map(|d| d + h.n())
            .chain(h.degrees().iter().map(|d| d + g.n()))
            .collect();
        prop_assert_eq!(j.degrees(), expected);
        prop_assert_eq!(sorted(ops::join(&h, &g).unwrap().degrees()), sorted(j.degrees()));
    }

    #[test]
    fn handshake_survives_operations((g, i) in arb_graph_with_edge(10, 25)) {
        let e = g.edges().nth(i).unwrap();
        for op in [Operation::DeleteEdge(e), Operation::Subdivide(e), Operation::Contract(e)] {
            let after = op.apply(&g).unwrap().after;
            prop_assert_eq!(after.degrees().iter().sum::<usize>(), 2 * after.edge_count());
        }
    }
}

#[test]
fn precondition_errors() {
    let p = dmp_core::graph::named::path(4);
    let e = Edge::new(0, 2).unwrap();
    assert!(Operation::DeleteEdge(e).apply(&p).is_err());
    assert!(Operation::Contract(e).apply(&p).is_err());
    assert!(Operation::AddEdge(Edge::new(0, 1).unwrap()).apply(&p).is_err());
    assert!(Operation::AddVertex(vec![]).apply(&p).is_err());
    assert!(Operation::AddVertex(vec![VertexId(9)]).apply(&p).is_err());
    assert!(Operation::DeleteVertex(VertexId(0)).apply(&dmp_core::Graph::empty(1)).is_err());
}
