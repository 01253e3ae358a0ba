//! The simplicial Cartesian product and barycentric refinement.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{Graph, Simplex};
use crate::topology::inductive_dimension;

/// Default vertex limit for products built on request from user input.
pub const DEFAULT_MAX_VERTICES: usize = 20_000;

/// A product graph together with the simplex pair behind each vertex.
///
/// Vertices are ordered lexicographically on `(a, b)`, simplices ordered
/// by dimension then lexicographically, so a vertex always precedes every
/// vertex whose pair contains its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub provenance: Vec<(Simplex, Simplex)>,
}

/// Product of any number of factors, one simplex per factor at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiProduct {
    pub graph: Graph,
    pub provenance: Vec<Vec<Simplex>>,
}

fn simplex_label(g: &Graph, s: &Simplex) -> String {
    let mut out = String::new();
    for (i, &v) in s.vertices().iter().enumerate() {
        if i > 0 {
            out.push('·');
        }
        let l = g.label(v);
        if l.contains(['·', '|', '(', ')']) {
            out.push('(');
            out.push_str(l);
            out.push(')');
        } else {
            out.push_str(l);
        }
    }
    out
}

// index lists of the simplices containing each simplex, itself included
fn cofaces(simplices: &[Simplex]) -> Vec<Vec<usize>> {
    let index: BTreeMap<&Simplex, usize> = simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut up = vec![Vec::new(); simplices.len()];
    for (t, s) in simplices.iter().enumerate() {
        let vs = s.vertices();
        let k = vs.len();
        for mask in 1u64..(1u64 << k) {
            let sub: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| vs[i]).collect();
            let f = Simplex::from_sorted(sub);
            up[index[&f]].push(t);
        }
    }
    for u in &mut up {
        u.sort_unstable();
    }
    up
}

fn product_size(factors: &[&Graph]) -> (Vec<Vec<Simplex>>, Option<usize>) {
    let simplices: Vec<Vec<Simplex>> = factors.iter().map(|g| g.simplices()).collect();
    let size = simplices.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.len()));
    (simplices, size)
}

fn build(
    factors: &[&Graph],
    simplices: Vec<Vec<Simplex>>,
    label: impl Fn(&[usize]) -> String,
) -> (Graph, Vec<Vec<usize>>) {
    let ups: Vec<Vec<Vec<usize>>> = simplices.iter().map(|s| cofaces(s)).collect();
    let radix: Vec<usize> = simplices.iter().map(Vec::len).collect();
    let n: usize = radix.iter().product();
    let mut strides = vec![1usize; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * radix[i + 1];
    }
    let mut tuples = Vec::with_capacity(n);
    let mut cur = vec![0usize; factors.len()];
    for _ in 0..n {
        tuples.push(cur.clone());
        for i in (0..cur.len()).rev() {
            cur[i] += 1;
            if cur[i] < radix[i] {
                break;
            }
            cur[i] = 0;
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut q = vec![0usize; factors.len()];
    for (p, t) in tuples.iter().enumerate() {
        // odometer over the coface lists of each coordinate
        let lists: Vec<&[usize]> = t.iter().enumerate().map(|(i, &s)| ups[i][s].as_slice()).collect();
        let mut pos = vec![0usize; lists.len()];
        loop {
            for i in 0..lists.len() {
                q[i] = lists[i][pos[i]];
            }
            let qi: usize = q.iter().zip(&strides).map(|(a, b)| a * b).sum();
            if qi != p {
                adj[p].push(qi);
                adj[qi].push(p);
            }
            let mut i = lists.len();
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                pos[i] += 1;
                if pos[i] < lists[i].len() {
                    break false;
                }
                pos[i] = 0;
            };
            if done {
                break;
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let labels = tuples.iter().map(|t| label(t)).collect();
    (Graph::from_adjacency(labels, adj), tuples)
}

fn check_cap(size: Option<usize>, cap: usize) -> Result<usize> {
    match size {
        Some(n) if n <= cap => Ok(n),
        Some(n) => Err(Error::SizeCap { requested: n, limit: cap }),
        None => Err(Error::SizeCap { requested: usize::MAX, limit: cap }),
    }
}

/// `G x H` without a size limit.
pub fn graph_product(g: &Graph, h: &Graph) -> ProductGraph {
    graph_product_capped(g, h, usize::MAX).expect("no cap")
}

/// `G x H`, refusing to build more than `cap` vertices.
///
/// ```
/// use kunneth_core::{graph_product, named};
/// let p = graph_product(&named::complete(2), &named::complete(2));
/// assert_eq!(p.graph.f_vector().0, vec![9, 16, 8]);
/// ```
pub fn graph_product_capped(g: &Graph, h: &Graph, cap: usize) -> Result<ProductGraph> {
    let factors = [g, h];
    let (simplices, size) = product_size(&factors);
    check_cap(size, cap)?;
    let (sg, sh) = (simplices[0].clone(), simplices[1].clone());
    let (graph, tuples) = build(&factors, simplices, |t| {
        let mut l = simplex_label(g, &sg[t[0]]);
        l.push('|');
        l.push_str(&simplex_label(h, &sh[t[1]]));
        l
    });
    let provenance = tuples.iter().map(|t| (sg[t[0]].clone(), sh[t[1]].clone())).collect();
    Ok(ProductGraph { graph, provenance })
}

/// Product of several factors at once, the decoding of the product of
/// their encodings.
pub fn ring_product(factors: &[Graph], cap: usize) -> Result<MultiProduct> {
    let refs: Vec<&Graph> = factors.iter().collect();
    let (simplices, size) = product_size(&refs);
    check_cap(size, cap)?;
    let label_src = simplices.clone();
    let (graph, tuples) = build(&refs, simplices, |t| {
        let parts: Vec<String> = t.iter().enumerate().map(|(i, &s)| simplex_label(&factors[i], &label_src[i][s])).collect();
        parts.join("|")
    });
    let provenance = tuples
        .iter()
        .map(|t| t.iter().enumerate().map(|(i, &s)| label_src[i][s].clone()).collect())
        .collect();
    Ok(MultiProduct { graph, provenance })
}

/// Barycentric refinement `G_1 = G x K_1`: one vertex per simplex, joined
/// when one contains the other. Vertex `i` is the `i`-th simplex in
/// dimension-then-lexicographic order.
pub fn enhance(g: &Graph) -> Graph {
    let simplices = g.simplices();
    let labels: Vec<String> = simplices.iter().map(|s| simplex_label(g, s)).collect();
    let (graph, _) = build(&[g], vec![simplices], |t| labels[t[0]].clone());
    graph
}

pub fn enhance_capped(g: &Graph, cap: usize) -> Result<Graph> {
    let n = g.f_vector().total();
    check_cap(Some(n), cap)?;
    Ok(enhance(g))
}

/// Iterated refinements `G_1, ..., G_n`.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub steps: Vec<Graph>,
    /// Set when the next step would have exceeded the vertex cap.
    pub truncated: bool,
}

pub fn refine_sequence(g: &Graph, n: usize, cap: usize) -> Refinement {
    let mut steps = Vec::new();
    let mut cur = g.clone();
    for _ in 0..n {
        match enhance_capped(&cur, cap) {
            Ok(next) => {
                steps.push(next.clone());
                cur = next;
            }
            Err(_) => return Refinement { steps, truncated: true },
        }
    }
    Refinement { steps, truncated: false }
}

/// A vertex where the product dimension falls below the sum of the factor
/// dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointwiseViolation {
    pub vertex: usize,
    pub product: BigRational,
    pub factors: BigRational,
}

#[derive(Clone, Debug)]
pub struct PointwiseReport {
    pub product_dim: BigRational,
    pub g1_dim: BigRational,
    pub h1_dim: BigRational,
    pub violations: Vec<PointwiseViolation>,
}

impl PointwiseReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.product_dim >= &self.g1_dim + &self.h1_dim
    }
}

/// Compares, vertex by vertex, the local dimension of `G x H` at `(x, y)`
/// with the local dimensions of `x` in `G_1` and `y` in `H_1`.
pub fn pointwise_dimension_check(g: &Graph, h: &Graph) -> PointwiseReport {
    let p = graph_product(g, h);
    let dp = inductive_dimension(&p.graph);
    let dg = inductive_dimension(&enhance(g));
    let dh = inductive_dimension(&enhance(h));
    let gi: BTreeMap<Simplex, usize> = g.simplices().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let hi: BTreeMap<Simplex, usize> = h.simplices().into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut violations = Vec::new();
    for (v, (a, b)) in p.provenance.iter().enumerate() {
        let lhs = &dp.per_vertex[v];
        let rhs = &dg.per_vertex[gi[a]] + &dh.per_vertex[hi[b]];
        if *lhs < rhs {
            violations.push(PointwiseViolation { vertex: v, product: lhs.clone(), factors: rhs });
        }
    }
    PointwiseReport { product_dim: dp.total, g1_dim: dg.total, h1_dim: dh.total, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use alloc::vec;

    #[test]
    fn small_products() {
        let k1 = named::complete(1);
        let k2 = named::complete(2);
        assert_eq!(graph_product(&k1, &k1).graph.vertex_count(), 1);
        assert_eq!(graph_product(&k2, &k2).graph.f_vector().0, vec![9, 16, 8]);
        let p = graph_product(&k2, &k1);
        assert_eq!(p.graph.f_vector().0, vec![3, 2]);
        assert_eq!(p.graph.labels(), &["0|0", "1|0", "0·1|0"]);
    }

    #[test]
    fn empty_factor_gives_empty_product() {
        let p = graph_product(&Graph::empty(), &named::complete(3));
        assert!(p.graph.is_empty());
    }

    #[test]
    fn enhance_of_triangle_is_a_wheel() {
        let g1 = enhance(&named::complete(3));
        assert_eq!(g1.f_vector().0, vec![7, 12, 6]);
        assert_eq!(g1.degree(6), 6);
        assert_eq!(g1.label(6), "0·1·2");
    }

    #[test]
    fn provenance_order_is_containment_compatible() {
        let p = graph_product(&named::house(), &named::complete(2));
        for (u, v) in p.graph.edges() {
            let (a, b) = &p.provenance[u];
            let (c, d) = &p.provenance[v];
            assert!(a.is_face_of(c) && b.is_face_of(d));
        }
    }

    #[test]
    fn ring_product_matches_iterated_sizes() {
        let k2 = named::complete(2);
        let m = ring_product(&[k2.clone(), k2.clone(), k2.clone()], usize::MAX).unwrap();
        assert_eq!(m.graph.vertex_count(), 27);
        assert_eq!(m.graph.edge_count(), 98);
    }

    #[test]
    fn caps_are_enforced() {
        let c = named::cycle(10).unwrap();
        assert_eq!(
            graph_product_capped(&c, &c, 100),
            Err(Error::SizeCap { requested: 400, limit: 100 })
        );
        let r = refine_sequence(&named::complete(3), 5, 200);
        assert!(r.truncated);
        assert_eq!(r.steps.len(), 3);
        // 25 vertices + 60 comparable pairs + 36 full flags of the first refinement
        assert_eq!(r.steps[2].vertex_count(), 121);
    }
}
