//! Oriented Whitney complexes, incidence matrices and Betti numbers.
//!
//! A `k`-simplex is oriented by its ascending vertex order. The exterior
//! derivative `d_k` maps `k`-forms to `(k+1)`-forms; its entry at
//! `(sigma, tau)` is `(-1)^i` when `tau` is `sigma` without its `i`-th
//! vertex.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::graph::{Graph, Simplex};
use crate::linalg::{kernel_basis, SparseIntegerMatrix};

/// Simplices of a graph grouped by dimension, with index lookup.
#[derive(Clone, Debug)]
pub struct OrientedComplex {
    grades: Vec<Vec<Simplex>>,
    index: Vec<BTreeMap<Simplex, usize>>,
}

impl OrientedComplex {
    pub fn new(g: &Graph) -> Self {
        Self::from_grades(g.simplices_by_grade())
    }

    pub fn from_grades(grades: Vec<Vec<Simplex>>) -> Self {
        let index = grades
            .iter()
            .map(|gr| gr.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        OrientedComplex { grades, index }
    }

    /// Number of nonempty grades (clique number).
    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub fn grade(&self, k: usize) -> &[Simplex] {
        self.grades.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        let k = s.len().checked_sub(1)?;
        self.index.get(k)?.get(s).copied()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.grades.iter().map(Vec::len).collect()
    }

    /// `d_k`, one row per `(k+1)`-simplex and one column per `k`-simplex.
    pub fn derivative(&self, k: usize) -> SparseIntegerMatrix {
        let rows = self.grade(k + 1);
        let cols = self.grade(k).len();
        let triplets = rows.iter().enumerate().flat_map(|(r, s)| {
            (0..s.len()).map(move |i| {
                let face = s.omit(i);
                let c = self.index[k][&face];
                (r, c, if i % 2 == 0 { 1 } else { -1 })
            })
        });
        SparseIntegerMatrix::from_triplets(rows.len(), cols, triplets).expect("incidence entries are in range")
    }
}

/// `d_0, ..., d_{top-1}` where `top` is the dimension of the complex.
pub fn incidence_matrices(c: &OrientedComplex) -> Vec<SparseIntegerMatrix> {
    let mats: Vec<SparseIntegerMatrix> = (0..c.len().saturating_sub(1)).map(|k| c.derivative(k)).collect();
    debug_assert!(mats
        .windows(2)
        .all(|w| w[1].mul(&w[0]).map(|m| m.is_zero()).unwrap_or(false)));
    mats
}

fn offsets(c: &OrientedComplex) -> Vec<usize> {
    let mut off = Vec::with_capacity(c.len() + 1);
    let mut acc = 0;
    off.push(0);
    for k in 0..c.len() {
        acc += c.grade(k).len();
        off.push(acc);
    }
    off
}

/// Dirac operator `d + d^T` on all forms, grade 0 first.
pub fn dirac(c: &OrientedComplex) -> SparseIntegerMatrix {
    let off = offsets(c);
    let n = *off.last().unwrap();
    let mut triplets = Vec::new();
    for (k, d) in incidence_matrices(c).iter().enumerate() {
        for (r, col, v) in d.triplets() {
            triplets.push((off[k + 1] + r, off[k] + col, v));
            triplets.push((off[k] + col, off[k + 1] + r, v));
        }
    }
    SparseIntegerMatrix::from_triplets(n, n, triplets).expect("in range")
}

/// Form Laplacians `L_k = d_k^T d_k + d_{k-1} d_{k-1}^T`, the diagonal
/// blocks of the squared Dirac operator.
pub fn laplacian_blocks(c: &OrientedComplex) -> Vec<SparseIntegerMatrix> {
    let ds = incidence_matrices(c);
    (0..c.len())
        .map(|k| {
            let n = c.grade(k).len();
            let mut l = SparseIntegerMatrix::zeros(n, n);
            if let Some(d) = ds.get(k) {
                l = l.add(&d.transpose().mul(d).expect("shapes agree")).expect("shapes agree");
            }
            if k > 0 {
                let d = &ds[k - 1];
                l = l.add(&d.mul(&d.transpose()).expect("shapes agree")).expect("shapes agree");
            }
            l
        })
        .collect()
}

pub(crate) fn ranks(mats: &[SparseIntegerMatrix]) -> Vec<usize> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        mats.par_iter().map(SparseIntegerMatrix::rank).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        mats.iter().map(SparseIntegerMatrix::rank).collect()
    }
}

/// `b_k = v_k - rank d_k - rank d_{k-1}` from grade sizes and the ranks of
/// the derivatives between them.
pub(crate) fn betti_from_ranks(sizes: &[usize], ranks: &[usize]) -> Vec<usize> {
    (0..sizes.len())
        .map(|k| {
            let out = ranks.get(k).copied().unwrap_or(0);
            let inc = if k > 0 { ranks.get(k - 1).copied().unwrap_or(0) } else { 0 };
            sizes[k] - out - inc
        })
        .collect()
}

/// Betti numbers `b_0, ..., b_d` of the Whitney complex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    pub fn euler(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn poincare(&self) -> PoincarePolynomial {
        PoincarePolynomial::new(self.0.iter().map(|&b| b as i64).collect())
    }
}

pub fn betti(g: &Graph) -> BettiVector {
    betti_of_complex(&OrientedComplex::new(g))
}

pub fn betti_of_complex(c: &OrientedComplex) -> BettiVector {
    let ds = incidence_matrices(c);
    let b = BettiVector(betti_from_ranks(&c.f_vector(), &ranks(&ds)));
    let chi: i64 = c.f_vector().iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
    assert_eq!(b.euler(), chi, "Euler-Poincare");
    b
}

/// Integer polynomial, trailing zero coefficients trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PoincarePolynomial(Vec<i64>);

impl PoincarePolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        PoincarePolynomial(coefficients)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return PoincarePolynomial::default();
        }
        let mut out = alloc::vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PoincarePolynomial::new(out)
    }
}

pub fn poincare_polynomial(g: &Graph) -> PoincarePolynomial {
    betti(g).poincare()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport {
    /// Poincare polynomial of the product.
    pub lhs: PoincarePolynomial,
    /// Product of the factor polynomials.
    pub rhs: PoincarePolynomial,
}

impl KunnethReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn kunneth_check(g: &Graph, h: &Graph) -> KunnethReport {
    let p = crate::product::graph_product(g, h);
    KunnethReport { lhs: poincare_polynomial(&p.graph), rhs: poincare_polynomial(g).mul(&poincare_polynomial(h)) }
}

/// Basis of the harmonic `k`-forms, the kernel of `L_k`.
pub fn harmonic_basis(g: &Graph, k: usize) -> Vec<Vec<BigRational>> {
    harmonic_basis_of_complex(&OrientedComplex::new(g), k)
}

pub fn harmonic_basis_of_complex(c: &OrientedComplex, k: usize) -> Vec<Vec<BigRational>> {
    match laplacian_blocks(c).get(k) {
        Some(l) => kernel_basis(l),
        None => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use alloc::vec;
    use num_traits::Zero;

    #[test]
    fn betti_of_basic_graphs() {
        assert_eq!(betti(&named::cycle(5).unwrap()).0, vec![1, 1]);
        assert_eq!(betti(&named::octahedron()).0, vec![1, 0, 1]);
        assert_eq!(betti(&named::icosahedron()).0, vec![1, 0, 1]);
        assert_eq!(betti(&named::complete(4)).0, vec![1, 0, 0, 0]);
        assert_eq!(betti(&named::house()).0, vec![1, 1, 0]);
        assert_eq!(betti(&Graph::empty()).0, Vec::<usize>::new());
        let two = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(betti(&two).0, vec![2, 0]);
    }

    #[test]
    fn derivative_squares_to_zero() {
        let c = OrientedComplex::new(&named::cross_polytope(4));
        let ds = incidence_matrices(&c);
        assert_eq!(ds.len(), 3);
        for w in ds.windows(2) {
            assert!(w[1].mul(&w[0]).unwrap().is_zero());
        }
    }

    #[test]
    fn dirac_square_is_block_diagonal() {
        let c = OrientedComplex::new(&named::house());
        let d = dirac(&c);
        let l = d.mul(&d).unwrap();
        let blocks = laplacian_blocks(&c);
        let off = offsets(&c);
        for (k, b) in blocks.iter().enumerate() {
            for r in 0..b.rows() {
                for col in 0..b.cols() {
                    assert_eq!(l.get(off[k] + r, off[k] + col), b.get(r, col));
                }
            }
        }
        // no cross-grade entries
        for (r, col, _) in l.triplets() {
            let gr = off.iter().rposition(|&o| o <= r).unwrap();
            let gc = off.iter().rposition(|&o| o <= col).unwrap();
            assert_eq!(gr, gc);
        }
    }

    #[test]
    fn harmonic_forms_of_a_cycle() {
        let g = named::cycle(4).unwrap();
        let h1 = harmonic_basis(&g, 1);
        assert_eq!(h1.len(), 1);
        let c = OrientedComplex::new(&g);
        let l = &laplacian_blocks(&c)[1];
        assert!(l.mul_vec(&h1[0]).iter().all(Zero::is_zero));
        assert_eq!(harmonic_basis(&g, 0).len(), 1);
        assert!(harmonic_basis(&g, 5).is_empty());
    }

    #[test]
    fn poincare_products() {
        let a = PoincarePolynomial::new(vec![1, 1, 0]);
        assert_eq!(a.coefficients(), &[1, 1]);
        assert_eq!(a.mul(&a).coefficients(), &[1, 2, 1]);
        assert_eq!(a.eval(-1), 0);
        assert!(kunneth_check(&named::cycle(4).unwrap(), &named::cycle(4).unwrap()).holds());
    }
}
