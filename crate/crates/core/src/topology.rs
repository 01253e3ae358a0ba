//! Inductive dimension, discrete homotopy, spheres, curvature and
//! colourings.
//!
//! Predicates work on vertex subsets of one host graph so recursive calls
//! can share memo tables. Searches that could blow up take [`Limits`] and
//! answer [`Tri::Unknown`] when they run out instead of guessing.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::{intersect_sorted, Graph};
use crate::product::{enhance, ProductGraph};

/// Three-valued answer of a bounded search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn as_str(self) -> &'static str {
        match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        }
    }

    pub fn is_true(self) -> bool {
        self == Tri::True
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Inductive dimension of a graph and the local dimension
/// `1 + dim S(v)` at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub total: BigRational,
    pub per_vertex: Vec<BigRational>,
}

struct DimMemo<'a> {
    g: &'a Graph,
    memo: BTreeMap<Vec<usize>, BigRational>,
}

impl DimMemo<'_> {
    fn dim(&mut self, set: &[usize]) -> BigRational {
        if set.is_empty() {
            return -BigRational::one();
        }
        if let Some(d) = self.memo.get(set) {
            return d.clone();
        }
        let mut sum = BigRational::zero();
        for &v in set {
            sum += self.local(v, set);
        }
        let d = sum / rat(set.len() as i64);
        self.memo.insert(set.to_vec(), d.clone());
        d
    }

    fn local(&mut self, v: usize, set: &[usize]) -> BigRational {
        let s = intersect_sorted(self.g.neighbors(v), set);
        BigRational::one() + self.dim(&s)
    }
}

/// `dim(empty) = -1`, otherwise the average over vertices of
/// `1 + dim` of the unit sphere.
///
/// ```
/// use kunneth_core::{named, topology::inductive_dimension, BigRational};
/// let d = inductive_dimension(&named::house()).total;
/// assert_eq!(d, BigRational::new(22.into(), 15.into()));
/// ```
pub fn inductive_dimension(g: &Graph) -> DimensionReport {
    let mut m = DimMemo { g, memo: BTreeMap::new() };
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let per_vertex: Vec<BigRational> = all.iter().map(|&v| m.local(v, &all)).collect();
    let total = if per_vertex.is_empty() {
        -BigRational::one()
    } else {
        per_vertex.iter().fold(BigRational::zero(), |a, b| a + b) / rat(per_vertex.len() as i64)
    };
    DimensionReport { total, per_vertex }
}

/// Bounds for the homotopy searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Larger vertex sets are answered with `Unknown`.
    pub max_vertices: usize,
    /// Maximum number of memo misses before giving up.
    pub step_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 40, step_budget: 200_000 }
    }
}

struct Search<'a> {
    g: &'a Graph,
    limits: Limits,
    steps: usize,
    contractible: BTreeMap<Vec<usize>, bool>,
    spheres: BTreeMap<(Vec<usize>, isize), bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, limits: Limits) -> Self {
        Search { g, limits, steps: 0, contractible: BTreeMap::new(), spheres: BTreeMap::new() }
    }

    fn sphere_of(&self, v: usize, set: &[usize]) -> Vec<usize> {
        intersect_sorted(self.g.neighbors(v), set)
    }

    fn connected(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else { return true };
        let mut seen = vec![start];
        let mut i = 0;
        while i < seen.len() {
            let u = seen[i];
            i += 1;
            for w in self.sphere_of(u, set) {
                if !seen.contains(&w) {
                    seen.push(w);
                }
            }
        }
        seen.len() == set.len()
    }

    fn euler(&self, set: &[usize]) -> i64 {
        self.signed_cliques(set, 1)
    }

    fn signed_cliques(&self, cand: &[usize], sign: i64) -> i64 {
        let mut chi = 0;
        for (i, &w) in cand.iter().enumerate() {
            let next = intersect_sorted(&cand[i + 1..], self.g.neighbors(w));
            chi += sign + self.signed_cliques(&next, -sign);
        }
        chi
    }

    fn tick(&mut self) -> bool {
        self.steps += 1;
        self.steps <= self.limits.step_budget
    }

    fn contractible(&mut self, set: &[usize]) -> Tri {
        match set.len() {
            0 => return Tri::False,
            1 => return Tri::True,
            n if n > self.limits.max_vertices => return Tri::Unknown,
            _ => {}
        }
        if let Some(&b) = self.contractible.get(set) {
            return b.into();
        }
        if !self.tick() {
            return Tri::Unknown;
        }
        let degrees: Vec<usize> = set.iter().map(|&v| self.sphere_of(v, set).len()).collect();
        // cones are contractible
        if degrees.iter().any(|&d| d + 1 == set.len()) {
            self.contractible.insert(set.to_vec(), true);
            return Tri::True;
        }
        if !self.connected(set) || self.euler(set) != 1 {
            self.contractible.insert(set.to_vec(), false);
            return Tri::False;
        }
        let mut order: Vec<usize> = (0..set.len()).collect();
        order.sort_by_key(|&i| degrees[i]);
        let mut unknown = false;
        for i in order {
            let v = set[i];
            let link = self.sphere_of(v, set);
            let a = self.contractible(&link);
            if a == Tri::False {
                continue;
            }
            let rest: Vec<usize> = set.iter().copied().filter(|&w| w != v).collect();
            let b = self.contractible(&rest);
            match (a, b) {
                (Tri::True, Tri::True) => {
                    self.contractible.insert(set.to_vec(), true);
                    return Tri::True;
                }
                (_, Tri::False) => {}
                _ => unknown = true,
            }
        }
        if unknown {
            Tri::Unknown
        } else {
            self.contractible.insert(set.to_vec(), false);
            Tri::False
        }
    }

    fn sphere(&mut self, set: &[usize], d: isize) -> Tri {
        if d < -1 {
            return Tri::False;
        }
        if d == -1 {
            return set.is_empty().into();
        }
        if set.is_empty() {
            return Tri::False;
        }
        if set.len() > self.limits.max_vertices {
            return Tri::Unknown;
        }
        let key = (set.to_vec(), d);
        if let Some(&b) = self.spheres.get(&key) {
            return b.into();
        }
        if !self.tick() {
            return Tri::Unknown;
        }
        let expected = if d % 2 == 0 { 2 } else { 0 };
        if self.euler(set) != expected {
            self.spheres.insert(key, false);
            return Tri::False;
        }
        let mut unknown = false;
        for &v in set {
            let s = self.sphere_of(v, set);
            match self.sphere(&s, d - 1) {
                Tri::False => {
                    self.spheres.insert(key, false);
                    return Tri::False;
                }
                Tri::Unknown => unknown = true,
                Tri::True => {}
            }
            let rest: Vec<usize> = set.iter().copied().filter(|&w| w != v).collect();
            match self.contractible(&rest) {
                Tri::False => {
                    self.spheres.insert(key, false);
                    return Tri::False;
                }
                Tri::Unknown => unknown = true,
                Tri::True => {}
            }
        }
        if unknown {
            Tri::Unknown
        } else {
            self.spheres.insert(key, true);
            Tri::True
        }
    }
}

fn all_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).collect()
}

/// `K_1` is contractible; otherwise some vertex has a contractible unit
/// sphere and leaves a contractible graph when removed.
pub fn contractible(g: &Graph) -> Tri {
    contractible_with(g, Limits::default())
}

pub fn contractible_with(g: &Graph, limits: Limits) -> Tri {
    Search::new(g, limits).contractible(&all_vertices(g))
}

/// Repeatedly deletes the lowest-index vertex whose unit sphere is known
/// to be contractible. Each deletion preserves the homotopy type.
pub fn homotopy_reduce(g: &Graph) -> Graph {
    homotopy_reduce_with(g, Limits::default())
}

pub fn homotopy_reduce_with(g: &Graph, limits: Limits) -> Graph {
    let mut set = all_vertices(g);
    loop {
        let mut s = Search::new(g, limits);
        let found = set.iter().copied().find(|&v| {
            let sp = s.sphere_of(v, &set);
            s.contractible(&sp) == Tri::True
        });
        match found {
            Some(v) => set.retain(|&w| w != v),
            None => return g.induced(&set),
        }
    }
}

/// The empty graph is the `(-1)`-sphere. A `d`-sphere has `(d-1)`-spheres
/// as unit spheres and becomes contractible when any vertex is removed.
pub fn is_sphere(g: &Graph, d: isize) -> Tri {
    is_sphere_with(g, d, Limits::default())
}

pub fn is_sphere_with(g: &Graph, d: isize, limits: Limits) -> Tri {
    Search::new(g, limits).sphere(&all_vertices(g), d)
}

/// Every unit sphere is a `(d-1)`-sphere.
pub fn is_geometric(g: &Graph, d: isize) -> Tri {
    is_geometric_with(g, d, Limits::default())
}

pub fn is_geometric_with(g: &Graph, d: isize, limits: Limits) -> Tri {
    let all = all_vertices(g);
    let mut unknown = false;
    for v in 0..g.vertex_count() {
        let mut s = Search::new(g, limits);
        let sp = s.sphere_of(v, &all);
        match s.sphere(&sp, d - 1) {
            Tri::False => return Tri::False,
            Tri::Unknown => unknown = true,
            Tri::True => {}
        }
    }
    if unknown {
        Tri::Unknown
    } else {
        Tri::True
    }
}

/// Vertex curvature `sum_k (-1)^k V_{k-1}(v) / (k + 1)` where `V_j(v)`
/// counts the `j`-simplices of the unit sphere and `V_{-1} = 1`. The values
/// sum to the Euler characteristic.
pub fn curvature(g: &Graph) -> Vec<BigRational> {
    let out: Vec<BigRational> = (0..g.vertex_count())
        .map(|v| {
            let f = g.unit_sphere(v).f_vector();
            let mut k = BigRational::one();
            for (j, &n) in f.as_slice().iter().enumerate() {
                // term for V_j has k = j + 1
                let term = BigRational::new(BigInt::from(n), BigInt::from(j + 2));
                if j % 2 == 0 {
                    k -= term;
                } else {
                    k += term;
                }
            }
            k
        })
        .collect();
    let total: BigRational = out.iter().fold(BigRational::zero(), |a, b| a + b);
    assert_eq!(total, rat(g.euler_characteristic()), "curvature sums to the Euler characteristic");
    out
}

/// Curvature of the refinement, one value per simplex of `g`.
pub fn simplex_curvature(g: &Graph) -> Vec<BigRational> {
    curvature(&enhance(g))
}

pub fn clique_number(g: &Graph) -> usize {
    g.clique_number()
}

/// Colour `(a, b)` by `dim a + dim b`; adjacent vertices differ in
/// dimension, so this is proper.
pub fn dim_coloring(p: &ProductGraph) -> Vec<usize> {
    p.provenance.iter().map(|(a, b)| a.len() + b.len() - 2).collect()
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Chromatic number of `G x H`: `clique(G) + clique(H) - 1`.
pub fn product_chromatic(g: &Graph, h: &Graph) -> usize {
    let (a, b) = (g.clique_number(), h.clique_number());
    if a == 0 || b == 0 {
        0
    } else {
        a + b - 1
    }
}

/// Exact chromatic number by backtracking, `None` above `max_vertices`.
pub fn chromatic_number(g: &Graph, max_vertices: usize) -> Option<usize> {
    let n = g.vertex_count();
    if n > max_vertices {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    (g.clique_number().max(1)..=n).find(|&k| {
        let mut colors = vec![usize::MAX; n];
        color_from(g, &order, 0, k, 0, &mut colors)
    })
}

fn color_from(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_from(g, order, i + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// Vertex set of an induced odd cycle of length at least 5, if any.
pub fn odd_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n >= 64 {
        return None;
    }
    let mut masks: Vec<u64> = (0u64..(1u64 << n)).filter(|m| m.count_ones() >= 5 && m.count_ones() % 2 == 1).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter().find_map(|m| {
        let vs: Vec<usize> = (0..n).filter(|i| m & (1 << i) != 0).collect();
        let h = g.induced(&vs);
        let cycle = h.is_connected() && (0..h.vertex_count()).all(|v| h.degree(v) == 2);
        cycle.then_some(vs)
    })
}

/// A connected graph whose refinement needs fewer colours than itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusDrop {
    pub edges: Vec<(usize, usize)>,
    pub chromatic: usize,
    pub refined_chromatic: usize,
    pub odd_hole: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub graphs: usize,
    pub drops: Vec<CensusDrop>,
}

/// Runs over all connected labelled graphs on `n` vertices and compares
/// the chromatic number of each with that of its refinement.
///
/// The refinement is coloured by dimension with `clique(G)` colours and
/// contains a clique of that size, so its chromatic number is exactly
/// `clique(G)`; both facts are checked for every graph.
pub fn chromatic_census(n: usize) -> Census {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 32, "census is limited to 7 vertices");
    let mut graphs = 0;
    let mut drops = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).expect("valid");
        if !g.is_connected() {
            continue;
        }
        graphs += 1;
        let c = chromatic_number(&g, n).expect("small");
        let omega = g.clique_number();
        let p = crate::product::graph_product(&g, &crate::named::complete(1));
        let colors = dim_coloring(&p);
        assert!(is_proper_coloring(&p.graph, &colors));
        assert_eq!(p.graph.clique_number(), omega);
        let c1 = omega;
        if c1 < c {
            drops.push(CensusDrop { edges, chromatic: c, refined_chromatic: c1, odd_hole: odd_hole(&g) });
        }
    }
    Census { graphs, drops }
}
