mod common;

use common::{from_mask, graphs, isomorphic, q};
use kunneth_core::chain::Chain;
use kunneth_core::named::{self, complete, cycle, house, icosahedron, lollipop, octahedron, tadpole};
use kunneth_core::product::{enhance, graph_product, graph_product_capped, pointwise_dimension_check, refine_sequence, ring_product};
use kunneth_core::topology::{inductive_dimension, is_geometric, is_sphere};
use kunneth_core::{Error, Graph, Tri};
use proptest::prelude::*;

fn dim(g: &Graph) -> kunneth_core::BigRational {
    inductive_dimension(g).total
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn small_products() {
    let k2 = complete(2);
    assert_eq!(graph_product(&k2, &k2).graph.f_vector().0, vec![9, 16, 8]);
    let cube = ring_product(&[k2.clone(), k2.clone(), k2.clone()], 1000).unwrap().graph;
    assert_eq!((cube.vertex_count(), cube.edge_count()), (27, 98));
    let iter = graph_product(&graph_product(&k2, &k2).graph, &k2).graph;
    assert_eq!((iter.vertex_count(), iter.edge_count()), (99, 466));
    let p = graph_product(&complete(1), &complete(1));
    assert_eq!(p.graph.vertex_count(), 1);
    assert_eq!(dim(&p.graph), q(0, 1));
}

#[test]
fn refinements() {
    assert!(isomorphic(&enhance(&complete(3)), &named::wheel(6).unwrap()));
    assert!(isomorphic(&enhance(&cycle(4).unwrap()), &cycle(8).unwrap()));
    let o1 = enhance(&octahedron());
    assert_eq!(o1.vertex_count(), 26);
    assert_eq!(is_geometric(&o1, 2), Tri::True);
    assert_eq!(dim(&o1), q(2, 1));
    assert_eq!(dim(&enhance(&house())), q(37, 24));
    for g in [octahedron(), icosahedron(), cycle(5).unwrap()] {
        assert_eq!(dim(&enhance(&g)), dim(&g));
    }
}

#[test]
fn k3_refinements_stay_below_two() {
    let r = refine_sequence(&complete(3), 3, 20_000);
    assert!(!r.truncated);
    let dims: Vec<_> = r.steps.iter().map(dim).collect();
    for d in &dims {
        assert!(*d <= q(2, 1));
    }
    assert!(dims.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn pointwise_dimensions() {
    let r = pointwise_dimension_check(&tadpole(3, 2).unwrap(), &house());
    assert!(r.holds());
    assert_eq!(r.product_dim, q(833, 264));
    assert_eq!(r.g1_dim + r.h1_dim, q(833, 264));
    assert_eq!(dim(&graph_product(&house(), &lollipop(4, 1).unwrap()).graph), q(103, 24));
    let r = pointwise_dimension_check(&complete(1), &complete(1));
    assert!(r.holds());
    assert_eq!(r.product_dim, q(0, 1));
}

#[test]
fn size_cap() {
    let c = cycle(10).unwrap();
    match graph_product_capped(&c, &c, 100) {
        Err(Error::SizeCap { requested, limit }) => assert_eq!((requested, limit), (400, 100)),
        other => panic!("expected a cap error, got {other:?}"),
    }
    assert!(graph_product_capped(&c, &c, 400).is_ok());
}

#[test]
fn random_pairs() {
    for seed in 0..50 {
        let g = named::erdos_renyi(6, 40, 2 * seed).unwrap();
        let h = named::erdos_renyi(6, 40, 2 * seed + 1).unwrap();
        let p = graph_product(&g, &h).graph;
        assert_eq!(p.vertex_count(), g.f_vector().total() * h.f_vector().total());
        assert_eq!(p.euler_characteristic(), g.euler_characteristic() * h.euler_characteristic());
        assert!(dim(&p) >= dim(&g) + dim(&h), "seed {seed}");
    }
}

#[test]
fn refinement_never_lowers_dimension() {
    for seed in 0..200 {
        let g = named::erdos_renyi(10, 50, seed).unwrap();
        assert!(dim(&enhance(&g)) >= dim(&g), "seed {seed}");
    }
}

#[test]
fn automorphisms_lift_to_the_product() {
    let h = complete(2);
    for g in [house(), cycle(5).unwrap(), from_mask(5, 0b1011001101)] {
        let p = graph_product(&g, &h);
        let index: std::collections::BTreeMap<_, _> = p.provenance.iter().enumerate().map(|(i, pair)| (pair.clone(), i)).collect();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        let mut lifted = 0;
        loop {
            let is_auto = g.edges().iter().all(|&(u, v)| g.is_adjacent(perm[u], perm[v]));
            if is_auto {
                let image: Vec<usize> = p
                    .provenance
                    .iter()
                    .map(|(a, b)| {
                        let a2 = kunneth_core::Simplex::new(a.vertices().iter().map(|&v| perm[v]).collect());
                        index[&(a2, b.clone())]
                    })
                    .collect();
                for (u, v) in p.graph.edges() {
                    assert!(p.graph.is_adjacent(image[u], image[v]));
                }
                lifted += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert!(lifted >= 1);
    }
}

#[test]
fn geometric_factors_give_geometric_products() {
    let cases = [(octahedron(), 2, cycle(4).unwrap(), 1), (cycle(4).unwrap(), 1, cycle(5).unwrap(), 1)];
    for (g, k, h, l) in cases {
        let p = graph_product(&g, &h).graph;
        for v in 0..p.vertex_count() {
            assert_eq!(is_sphere(&p.unit_sphere(v), k + l - 1), Tri::True, "vertex {v}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_chain_multiplication(g in graphs(4), h in graphs(4)) {
        let p = graph_product(&g, &h).graph;
        let d = Chain::encode(&g, 0).multiply(&Chain::encode(&h, 1)).unwrap().decode();
        prop_assert_eq!(p.vertex_count(), d.vertex_count());
        // both sides list vertices by (dimension, lex) of the pair; compare
        // through the monomial labels
        let pos: std::collections::BTreeMap<&str, usize> = d.labels().iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let p2 = graph_product(&g, &h);
        let map: Vec<usize> = p2
            .provenance
            .iter()
            .map(|(a, b)| {
                let mut vars: Vec<String> = a.vertices().iter().map(|v| format!("a{v}")).collect();
                vars.extend(b.vertices().iter().map(|v| format!("b{v}")));
                pos[vars.join(".").as_str()]
            })
            .collect();
        let mut mapped: Vec<(usize, usize)> = p.edges().iter().map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))).collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped, d.edges());
    }

    #[test]
    fn refinement_adjacency_is_containment(g in graphs(6)) {
        let s = g.simplices();
        let g1 = enhance(&g);
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let related = s[i].is_face_of(&s[j]) || s[j].is_face_of(&s[i]);
                prop_assert_eq!(g1.is_adjacent(i, j), related);
            }
        }
    }

    #[test]
    fn refinement_keeps_euler_and_raises_dimension(g in graphs(6)) {
        let g1 = enhance(&g);
        prop_assert_eq!(g1.euler_characteristic(), g.euler_characteristic());
        prop_assert!(dim(&g1) >= dim(&g));
        prop_assert_eq!(g1.clique_number(), g.clique_number());
    }
}
