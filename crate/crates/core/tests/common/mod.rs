#![allow(dead_code)]

use kunneth_core::chain::{Chain, Monomial, Term, Var};
use kunneth_core::named;
use kunneth_core::{BigRational, Graph};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Cycle `C_10`, a 7-vertex path hanging off vertex 0, and a triangle at
/// the end of the path: 20 vertices, 21 edges, one triangle.
pub fn fig1_h() -> Graph {
    let k = 10;
    let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut prev = 0;
    for i in 0..7 {
        e.push((prev, k + i));
        prev = k + i;
    }
    let (a, b, c) = (17, 18, 19);
    e.extend([(prev, a), (a, b), (b, c), (a, c)]);
    Graph::from_edges(20, &e).unwrap()
}

pub fn sun() -> Graph {
    named::sun(&[1, 0, 0, 0]).unwrap()
}

/// Chain from `(coefficient, [variable indices])` in namespace `a`.
pub fn chain(terms: &[(i64, &[u32])]) -> Chain {
    Chain::from_terms(terms.iter().map(|&(c, vs)| {
        Term::new(c, Monomial::new(vs.iter().map(|&i| Var::new(0, i)).collect()).unwrap())
    }))
    .unwrap()
}

/// Brute-force canonical edge set over all relabellings (small graphs).
pub fn canonical_form(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    assert!(n <= 8, "brute force only");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_form(a) == canonical_form(b)
}

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// pairs in lexicographic order.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let mut e = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                e.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

/// Arbitrary graphs on `1..=max_n` vertices.
pub fn graphs(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| from_mask(n, mask))
}

pub fn connected_graphs(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    graphs(max_n).prop_filter("connected", Graph::is_connected)
}
