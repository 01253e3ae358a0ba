use kunneth::formats::{graph_from_json, graph_to_json, parse_chain, read_triplets, to_dot, write_triplets, GraphDoc};
use kunneth_core::homology::OrientedComplex;
use kunneth_core::linalg::SparseIntegerMatrix;
use kunneth_core::{named, Chain, Graph, Monomial, Var};
use proptest::prelude::*;

fn graphs() -> impl Strategy<Value = Graph> {
    (1usize..9, any::<u64>()).prop_map(|(n, mask)| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let e: Vec<_> = pairs.into_iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, p)| p).collect();
        Graph::from_edges(n, &e).unwrap()
    })
}

fn chains() -> impl Strategy<Value = Chain> {
    let term = (-1000i64..=1000, 0u32..3, proptest::collection::btree_set(0u32..40, 1..=3));
    proptest::collection::vec(term, 0..8).prop_map(|ts| {
        let mut c = Chain::zero();
        for (k, ns, vs) in ts {
            c.add_term(k, Monomial::new(vs.into_iter().map(|i| Var::new(ns * 13, i)).collect()).unwrap()).unwrap();
        }
        c
    })
}

#[test]
fn graph_json_layout() {
    let v = graph_to_json(&named::path(3));
    assert_eq!(v.to_string(), r#"{"labels":["0","1","2"],"edges":[[0,1],[1,2]]}"#);
}

#[test]
fn product_labels_survive_json() {
    let p = kunneth_core::graph_product(&named::complete(2), &named::complete(2)).graph;
    let back = graph_from_json(&graph_to_json(&p).to_string()).unwrap();
    assert_eq!(back, p);
    assert!(back.labels().iter().any(|l| l == "0·1|0·1"));
}

#[test]
fn incidence_round_trip() {
    let c = OrientedComplex::new(&named::octahedron());
    for k in 0..2 {
        let d = c.derivative(k);
        assert_eq!(read_triplets(&write_triplets(&d)).unwrap(), d);
    }
}

proptest! {
    #[test]
    fn graph_json_round_trip(g in graphs()) {
        let text = graph_to_json(&g).to_string();
        prop_assert_eq!(graph_from_json(&text).unwrap(), g.clone());
        let doc: GraphDoc = serde_json::from_str(&text).unwrap();
        prop_assert!(doc.edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(doc.edges.iter().all(|e| e[0] < e[1]));
        prop_assert_eq!(to_dot(&g).matches(" -- ").count(), g.edge_count());
    }

    #[test]
    fn chain_text_round_trip(c in chains()) {
        prop_assert_eq!(parse_chain(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn triplet_round_trip(rows in 0usize..6, cols in 0usize..6, vals in proptest::collection::vec((0usize..6, 0usize..6, -50i64..50), 0..20)) {
        let entries: Vec<_> = vals.into_iter().filter(|&(r, c, _)| r < rows && c < cols).collect();
        let m = SparseIntegerMatrix::from_triplets(rows, cols, entries).unwrap();
        prop_assert_eq!(read_triplets(&write_triplets(&m)).unwrap(), m);
    }
}
