//! Finite simple graphs and their Whitney complexes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A clique, stored as strictly ascending vertex indices.
///
/// Simplices order by dimension first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    /// Caller guarantees `vertices` is strictly ascending.
    pub fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of vertices minus one.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// The facet obtained by dropping the vertex at position `i`.
    pub fn omit(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&[usize]> for Simplex {
    fn from(v: &[usize]) -> Self {
        Simplex::new(v.to_vec())
    }
}

pub(crate) fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Simplex counts `v_0, v_1, ...` (vertices, edges, triangles, ...).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Undirected simple graph with unique vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("labels", &self.labels)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty() -> Self {
        Graph { labels: Vec::new(), adj: Vec::new() }
    }

    /// Builds a graph, rejecting loops, out-of-range endpoints and
    /// duplicate labels. Repeated edges are merged.
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate label `{l}`")));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Ok(Graph { labels, adj })
    }

    /// Graph on `0..n` labelled by the decimal index.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub(crate) fn from_adjacency(labels: Vec<String>, adj: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Graph { labels, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is
    /// `vertices[i]` after sorting.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let pos: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = vs
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|w| pos.get(w).copied()).collect())
            .collect();
        let labels = vs.iter().map(|&v| self.labels[v].clone()).collect();
        Graph { labels, adj }
    }

    /// Subgraph induced by the neighbours of `v`.
    pub fn unit_sphere(&self, v: usize) -> Graph {
        self.induced(&self.adj[v])
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Maximal cliques by Bron-Kerbosch with pivoting, each sorted, the
    /// list sorted.
    pub fn maximal_cliques(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        let n = self.vertex_count();
        for v in 0..n {
            let p: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w > v).collect();
            let x: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w < v).collect();
            self.bron_kerbosch(&mut vec![v], p, x, &mut out);
        }
        let mut out: Vec<Simplex> = out.into_iter().map(Simplex::new).collect();
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| intersect_sorted(&p, &self.adj[u]).len())
            .unwrap();
        let candidates: Vec<usize> = p.iter().copied().filter(|v| !self.is_adjacent(pivot, *v)).collect();
        let mut p = p;
        let mut x = x;
        for v in candidates {
            let np = intersect_sorted(&p, &self.adj[v]);
            let nx = intersect_sorted(&x, &self.adj[v]);
            r.push(v);
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            let at = x.binary_search(&v).unwrap_or_else(|e| e);
            x.insert(at, v);
        }
    }

    /// All nonempty cliques grouped by dimension; grade `k` holds the
    /// `k`-simplices in lexicographic order.
    pub fn simplices_by_grade(&self) -> Vec<Vec<Simplex>> {
        let mut grades: Vec<Vec<Simplex>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        for v in 0..self.vertex_count() {
            let cand: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w > v).collect();
            stack.push(v);
            self.extend_cliques(&mut stack, &cand, &mut grades);
            stack.pop();
        }
        for g in &mut grades {
            g.sort();
        }
        grades
    }

    fn extend_cliques(&self, stack: &mut Vec<usize>, cand: &[usize], grades: &mut Vec<Vec<Simplex>>) {
        let k = stack.len() - 1;
        if grades.len() <= k {
            grades.push(Vec::new());
        }
        grades[k].push(Simplex(stack.clone()));
        for (i, &w) in cand.iter().enumerate() {
            let next = intersect_sorted(&cand[i + 1..], &self.adj[w]);
            stack.push(w);
            self.extend_cliques(stack, &next, grades);
            stack.pop();
        }
    }

    /// All nonempty cliques ordered by dimension, then lexicographically.
    pub fn simplices(&self) -> Vec<Simplex> {
        self.simplices_by_grade().into_iter().flatten().collect()
    }

    /// Complete subgraphs on exactly `k` vertices; empty for `k = 0`.
    pub fn cliques(&self, k: usize) -> Vec<Simplex> {
        match k.checked_sub(1) {
            Some(grade) => self.simplices_by_grade().into_iter().nth(grade).unwrap_or_default(),
            None => Vec::new(),
        }
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.simplices_by_grade().iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler()
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        self.maximal_cliques().iter().map(Simplex::len).max().unwrap_or(0)
    }

    /// Disjoint union plus every edge between the two parts. Labels of
    /// `other` that clash get primes appended.
    pub fn join(&self, other: &Graph) -> Graph {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let n = self.vertex_count();
        let m = other.vertex_count();
        let mut labels = self.labels.clone();
        let mut used: BTreeSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut l = l.clone();
            while used.contains(&l) {
                l.push('\'');
            }
            used.insert(l.clone());
            labels.push(l);
        }
        let mut adj = Vec::with_capacity(n + m);
        for a in &self.adj {
            let mut a = a.clone();
            a.extend(n..n + m);
            adj.push(a);
        }
        for a in &other.adj {
            let mut row: Vec<usize> = (0..n).collect();
            row.extend(a.iter().map(|w| w + n));
            adj.push(row);
        }
        Graph { labels, adj }
    }

    /// Join with the two-point graph.
    pub fn suspension(&self) -> Graph {
        self.join(&Graph::s0())
    }

    /// Two vertices, no edge: the 0-sphere.
    pub fn s0() -> Graph {
        Graph::new(vec!["n".into(), "s".into()], &[]).unwrap()
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.is_adjacent(u, v)).collect())
            .collect();
        Graph { labels: self.labels.clone(), adj }
    }

    /// Same graph with vertices renamed; `perm[old] = new`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        let mut adj = vec![Vec::new(); n];
        for old in 0..n {
            labels[perm[old]] = self.labels[old].clone();
            let mut row: Vec<usize> = self.adj[old].iter().map(|&w| perm[w]).collect();
            row.sort_unstable();
            adj[perm[old]] = row;
        }
        Graph { labels, adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_labels() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::new(vec!["a".into(), "a".into()], &[]).is_err());
    }

    #[test]
    fn f_vectors_of_small_graphs() {
        assert_eq!(complete(4).f_vector().0, vec![4, 6, 4, 1]);
        assert_eq!(cycle(4).f_vector().0, vec![4, 4]);
        assert_eq!(Graph::empty().f_vector().0, Vec::<usize>::new());
        assert_eq!(cycle(5).euler_characteristic(), 0);
        assert_eq!(complete(5).euler_characteristic(), 1);
    }

    #[test]
    fn simplex_order_is_dimension_then_lex() {
        let s = complete(3).simplices();
        let v: Vec<Vec<usize>> = s.iter().map(|x| x.vertices().to_vec()).collect();
        assert_eq!(v, vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn maximal_cliques_agree_with_enumeration() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (2, 4)]).unwrap();
        let maxi = g.maximal_cliques();
        let all = g.simplices();
        for s in &all {
            assert!(maxi.iter().any(|m| s.is_face_of(m)));
        }
        for m in &maxi {
            assert!(all.contains(m));
            assert!(!all.iter().any(|s| s.len() > m.len() && m.is_face_of(s)));
        }
        assert_eq!(g.clique_number(), 3);
    }

    #[test]
    fn join_and_suspension() {
        let oct = Graph::s0().suspension().suspension();
        assert_eq!(oct.f_vector().0, vec![6, 12, 8]);
        assert_eq!(oct.euler_characteristic(), 2);
        assert_eq!(Graph::empty().join(&cycle(4)), cycle(4));
        let w = cycle(5).join(&Graph::from_edges(1, &[]).unwrap());
        assert_eq!(w.vertex_count(), 6);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(w.labels()[5], "0'");
    }

    #[test]
    fn unit_sphere_of_octahedron_is_c4() {
        let oct = Graph::s0().suspension().suspension();
        let s = oct.unit_sphere(0);
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.edge_count(), 4);
    }

    #[test]
    fn subset_helpers() {
        assert!(is_sorted_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_sorted_subset(&[1, 4], &[0, 1, 2, 3]));
        assert_eq!(intersect_sorted(&[1, 2, 5, 7], &[2, 3, 7]), vec![2, 7]);
    }
}
