//! The tensor (de Rham) complex of a product and its comparison with the
//! Whitney complex of the product graph.
//!
//! Degree-`k` tensor forms are spanned by pairs `a (x) b` of simplices with
//! `dim a + dim b = k`. The derivative is
//! `d(a (x) b) = (d a) (x) b + (-1)^(dim a) a (x) (d b)`.
//!
//! The comparison map sends a tensor cochain to a Whitney cochain of
//! `G x H`. A Whitney simplex `v_0 < ... < v_k` is a chain of pairs
//! `(a_0, b_0) < ... < (a_k, b_k)`; its value is
//! `sum_i alpha[m(a_0) .. m(a_i)] * beta[m(b_i) .. m(b_k)]`, where `m` takes
//! the smallest vertex of a simplex and a bracket with a repeated vertex
//! vanishes. This is the dual of the Alexander-Whitney map and commutes
//! with the derivatives.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::graph::{Graph, Simplex};
use crate::homology::{betti_from_ranks, harmonic_basis_of_complex, ranks, BettiVector, OrientedComplex};
use crate::linalg::{primitive_integer, rank_of_rows, SparseIntegerMatrix};
use crate::product::{graph_product, ProductGraph};

/// Tensor product of the cochain complexes of two graphs.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    pub g: OrientedComplex,
    pub h: OrientedComplex,
    derivatives: Vec<SparseIntegerMatrix>,
}

impl TensorComplex {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        let g = OrientedComplex::new(g);
        let h = OrientedComplex::new(h);
        let mut t = TensorComplex { g, h, derivatives: Vec::new() };
        t.derivatives = (0..t.top_degree().unwrap_or(0)).map(|k| t.build_derivative(k)).collect();
        t
    }

    /// Highest degree with a nonzero space, `None` when a factor is empty.
    pub fn top_degree(&self) -> Option<usize> {
        if self.g.is_empty() || self.h.is_empty() {
            None
        } else {
            Some(self.g.len() + self.h.len() - 2)
        }
    }

    pub fn degrees(&self) -> usize {
        self.top_degree().map_or(0, |t| t + 1)
    }

    /// Dimension of the degree-`k` space.
    pub fn dim(&self, k: usize) -> usize {
        (0..=k).map(|i| self.g.grade(i).len() * self.h.grade(k - i).len()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..self.degrees()).map(|k| self.dim(k)).collect()
    }

    /// Position of `a (x) b` in its degree, `a` of dimension `i`.
    pub fn index(&self, i: usize, a: usize, j: usize, b: usize) -> usize {
        let before: usize = (0..i).map(|p| self.g.grade(p).len() * self.h.grade(i + j - p).len()).sum();
        before + a * self.h.grade(j).len() + b
    }

    /// Basis of degree `k` as `(i, a, j, b)`, in index order.
    pub fn basis(&self, k: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.dim(k));
        for i in 0..=k {
            let j = k - i;
            for a in 0..self.g.grade(i).len() {
                for b in 0..self.h.grade(j).len() {
                    out.push((i, a, j, b));
                }
            }
        }
        out
    }

    /// Derivative from degree `k` to `k + 1`.
    pub fn derivative(&self, k: usize) -> SparseIntegerMatrix {
        match self.derivatives.get(k) {
            Some(d) => d.clone(),
            None => SparseIntegerMatrix::zeros(self.dim(k + 1), self.dim(k)),
        }
    }

    pub fn derivatives(&self) -> &[SparseIntegerMatrix] {
        &self.derivatives
    }

    fn build_derivative(&self, k: usize) -> SparseIntegerMatrix {
        let dg_t: Vec<SparseIntegerMatrix> = (0..self.g.len()).map(|i| self.g.derivative(i).transpose()).collect();
        let dh_t: Vec<SparseIntegerMatrix> = (0..self.h.len()).map(|j| self.h.derivative(j).transpose()).collect();
        let mut triplets = Vec::new();
        for (col, (i, a, j, b)) in self.basis(k).into_iter().enumerate() {
            if i + 1 < self.g.len() {
                for &(s, v) in dg_t[i].row(a) {
                    triplets.push((self.index(i + 1, s, j, b), col, v));
                }
            }
            if j + 1 < self.h.len() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for &(t, v) in dh_t[j].row(b) {
                    triplets.push((self.index(i, a, j + 1, t), col, sign * v));
                }
            }
        }
        SparseIntegerMatrix::from_triplets(self.dim(k + 1), self.dim(k), triplets).expect("in range")
    }

    /// Embeds `f (x) g` for a `p`-form `f` on G and a `q`-form `g` on H.
    pub fn tensor(&self, p: usize, f: &[BigRational], q: usize, g: &[BigRational]) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim(p + q)];
        for (a, x) in f.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in g.iter().enumerate() {
                if !y.is_zero() {
                    v[self.index(p, a, q, b)] = x * y;
                }
            }
        }
        v
    }

    /// Laplacian `d_k^T d_k + d_{k-1} d_{k-1}^T` on degree `k`.
    pub fn laplacian(&self, k: usize) -> SparseIntegerMatrix {
        let n = self.dim(k);
        let mut l = SparseIntegerMatrix::zeros(n, n);
        if k + 1 < self.degrees() {
            let d = self.derivative(k);
            l = l.add(&d.transpose().mul(&d).expect("shapes")).expect("shapes");
        }
        if k > 0 {
            let d = self.derivative(k - 1);
            l = l.add(&d.mul(&d.transpose()).expect("shapes")).expect("shapes");
        }
        l
    }

    pub fn betti(&self) -> BettiVector {
        BettiVector(betti_from_ranks(&self.dims(), &ranks(&self.derivatives)))
    }
}

pub fn tensor_complex(g: &Graph, h: &Graph) -> TensorComplex {
    TensorComplex::new(g, h)
}

pub fn derham_betti(g: &Graph, h: &Graph) -> BettiVector {
    TensorComplex::new(g, h).betti()
}

/// Everything needed to compare tensor cochains with Whitney cochains of
/// the product graph.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub tensor: TensorComplex,
    pub product: ProductGraph,
    pub whitney: OrientedComplex,
}

fn sort_sign(v: &mut [usize]) -> Option<i64> {
    // insertion sort counting swaps; repeated entries give None
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl Comparison {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        let tensor = TensorComplex::new(g, h);
        let product = graph_product(g, h);
        let whitney = OrientedComplex::new(&product.graph);
        Comparison { tensor, whitney, product }
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.tensor.top_degree()
    }

    /// The comparison map in degree `k`: rows are Whitney `k`-simplices of
    /// the product, columns are tensor basis elements.
    pub fn psi(&self, k: usize) -> SparseIntegerMatrix {
        let rows = self.whitney.grade(k);
        let cols = self.tensor.dim(k);
        let mut triplets = Vec::new();
        for (r, s) in rows.iter().enumerate() {
            let pairs: Vec<&(Simplex, Simplex)> = s.vertices().iter().map(|&v| &self.product.provenance[v]).collect();
            debug_assert!(pairs.windows(2).all(|w| w[0].0.is_face_of(&w[1].0) && w[0].1.is_face_of(&w[1].1)));
            let lead_a: Vec<usize> = pairs.iter().map(|p| p.0.min_vertex().unwrap()).collect();
            let lead_b: Vec<usize> = pairs.iter().map(|p| p.1.min_vertex().unwrap()).collect();
            for i in 0..=k {
                let mut front = lead_a[..=i].to_vec();
                let mut back = lead_b[i..].to_vec();
                let (Some(sa), Some(sb)) = (sort_sign(&mut front), sort_sign(&mut back)) else { continue };
                let fa = self.tensor.g.index_of(&Simplex::from_sorted(front)).expect("face of a simplex");
                let fb = self.tensor.h.index_of(&Simplex::from_sorted(back)).expect("face of a simplex");
                triplets.push((r, self.tensor.index(i, fa, k - i, fb), sa * sb));
            }
        }
        SparseIntegerMatrix::from_triplets(rows.len(), cols, triplets).expect("in range")
    }

    fn whitney_derivative(&self, k: usize) -> SparseIntegerMatrix {
        if k + 1 < self.whitney.len() {
            self.whitney.derivative(k)
        } else {
            SparseIntegerMatrix::zeros(0, self.whitney.grade(k).len())
        }
    }

    /// Checks `d_W psi_k = psi_{k+1} d_T` in every degree.
    pub fn chain_map_check(&self) -> ChainMapReport {
        let mut mismatches = Vec::new();
        let top = self.top_degree().unwrap_or(0);
        for k in 0..top {
            let lhs = self.whitney_derivative(k).mul(&self.psi(k)).expect("shapes");
            let rhs = self.psi(k + 1).mul(&self.tensor.derivative(k)).expect("shapes");
            let diff = lhs
                .add(&SparseIntegerMatrix::from_triplets(rhs.rows(), rhs.cols(), rhs.triplets().map(|(r, c, v)| (r, c, -v))).unwrap())
                .expect("shapes");
            mismatches.push(diff.nnz());
        }
        ChainMapReport { mismatches }
    }

    /// Pushes the products of harmonic forms of the factors into degree
    /// `k` and checks that they are cocycles spanning a complement of the
    /// coboundaries of the right size.
    pub fn cohomology_iso_check(&self, k: usize) -> IsoReport {
        let psi = self.psi(k);
        let dk = self.whitney_derivative(k);
        let mut classes = Vec::new();
        for i in 0..=k {
            let j = k - i;
            if i >= self.tensor.g.len() || j >= self.tensor.h.len() {
                continue;
            }
            let hg = harmonic_basis_of_complex(&self.tensor.g, i);
            let hh = harmonic_basis_of_complex(&self.tensor.h, j);
            for f in &hg {
                for g in &hh {
                    classes.push(psi.mul_vec(&self.tensor.tensor(i, f, j, g)));
                }
            }
        }
        let cocycles = classes.iter().all(|w| dk.mul_vec(w).iter().all(Zero::is_zero));
        let mut rows: Vec<Vec<(usize, BigInt)>> = Vec::new();
        let image_rank = if k > 0 {
            let d = self.whitney.derivative(k - 1);
            let dt = d.transpose();
            rows.extend((0..dt.rows()).map(|r| dt.row(r).iter().map(|&(c, v)| (c, BigInt::from(v))).collect()));
            d.rank()
        } else {
            0
        };
        rows.extend(classes.iter().map(|w| {
            primitive_integer(w).into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
        }));
        let rank_excess = rank_of_rows(rows) - image_rank;
        let whitney_betti = crate::homology::betti_of_complex(&self.whitney).get(k);
        let derham_betti = self.tensor.betti().get(k);
        IsoReport { degree: k, classes: classes.len(), cocycles, rank_excess, whitney_betti, derham_betti }
    }

    /// Checks that `f (x) g` is harmonic in the tensor complex whenever `f`
    /// and `g` are harmonic, in every degree.
    pub fn harmonic_product_check(&self) -> HarmonicReport {
        let mut degrees = Vec::new();
        let dbetti = self.tensor.betti();
        for k in 0..self.tensor.degrees() {
            let l = self.tensor.laplacian(k);
            let mut count = 0;
            let mut harmonic = true;
            for i in 0..=k {
                let j = k - i;
                if i >= self.tensor.g.len() || j >= self.tensor.h.len() {
                    continue;
                }
                let hg = harmonic_basis_of_complex(&self.tensor.g, i);
                let hh = harmonic_basis_of_complex(&self.tensor.h, j);
                for f in &hg {
                    for g in &hh {
                        count += 1;
                        let v = self.tensor.tensor(i, f, j, g);
                        if !l.mul_vec(&v).iter().all(Zero::is_zero) {
                            harmonic = false;
                        }
                    }
                }
            }
            degrees.push(HarmonicDegree { degree: k, products: count, harmonic, derham_betti: dbetti.get(k) });
        }
        HarmonicReport { degrees }
    }
}

/// Number of mismatching entries of `d psi - psi d` per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMapReport {
    pub mismatches: Vec<usize>,
}

impl ChainMapReport {
    pub fn holds(&self) -> bool {
        self.mismatches.iter().all(|&m| m == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub degree: usize,
    /// Number of tensor classes pushed forward.
    pub classes: usize,
    pub cocycles: bool,
    /// Rank gained over the coboundaries by adding the classes.
    pub rank_excess: usize,
    pub whitney_betti: usize,
    pub derham_betti: usize,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.cocycles
            && self.rank_excess == self.classes
            && self.classes == self.whitney_betti
            && self.whitney_betti == self.derham_betti
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicDegree {
    pub degree: usize,
    pub products: usize,
    pub harmonic: bool,
    pub derham_betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicReport {
    pub degrees: Vec<HarmonicDegree>,
}

impl HarmonicReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|d| d.harmonic && d.products == d.derham_betti)
    }
}

pub fn psi_map(g: &Graph, h: &Graph, k: usize) -> SparseIntegerMatrix {
    Comparison::new(g, h).psi(k)
}

pub fn chain_map_check(g: &Graph, h: &Graph) -> ChainMapReport {
    Comparison::new(g, h).chain_map_check()
}

pub fn cohomology_iso_check(g: &Graph, h: &Graph, k: usize) -> IsoReport {
    Comparison::new(g, h).cohomology_iso_check(k)
}

pub fn harmonic_product_check(g: &Graph, h: &Graph) -> HarmonicReport {
    Comparison::new(g, h).harmonic_product_check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn k2_squared_dimensions() {
        let k2 = named::complete(2);
        let t = tensor_complex(&k2, &k2);
        assert_eq!(t.dims(), vec![4, 4, 1]);
        assert_eq!(t.betti().0, vec![1, 0, 0]);
        let d = t.derivatives();
        assert!(d[1].mul(&d[0]).unwrap().is_zero());
    }

    #[test]
    fn point_times_point_is_identity() {
        let k1 = named::complete(1);
        let psi = psi_map(&k1, &k1, 0);
        assert_eq!(psi, SparseIntegerMatrix::identity(1));
    }

    #[test]
    fn psi_commutes_with_derivatives() {
        let cases = [
            (named::complete(2), named::complete(2)),
            (named::complete(3), named::complete(2)),
            (named::house(), named::cycle(4).unwrap()),
            (named::complete(3), named::complete(3)),
        ];
        for (g, h) in &cases {
            let r = chain_map_check(g, h);
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn psi_in_degree_zero_evaluates_at_leading_vertices() {
        let k2 = named::complete(2);
        let c = Comparison::new(&k2, &k2);
        let psi = c.psi(0);
        for (v, (a, b)) in c.product.provenance.iter().enumerate() {
            let col = c.tensor.index(0, a.min_vertex().unwrap(), 0, b.min_vertex().unwrap());
            assert_eq!(psi.row(v), &[(col, 1)]);
        }
    }

    #[test]
    fn sort_sign_counts_transpositions() {
        assert_eq!(sort_sign(&mut [0, 1, 2]), Some(1));
        assert_eq!(sort_sign(&mut [1, 0, 2]), Some(-1));
        assert_eq!(sort_sign(&mut [2, 0, 1]), Some(1));
        assert_eq!(sort_sign(&mut [1, 1]), None);
    }

    #[test]
    fn cycle_products_have_classes_in_each_degree() {
        let c4 = named::cycle(4).unwrap();
        let cmp = Comparison::new(&c4, &c4);
        for k in 0..=2 {
            let r = cmp.cohomology_iso_check(k);
            assert!(r.holds(), "{r:?}");
        }
        assert!(cmp.harmonic_product_check().holds());
    }
}
