//! Sparse integer matrices with exact rank, plus dense rational kernels.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

type Row<T> = Vec<(usize, T)>;

/// Row-major sparse matrix over the integers. Rows keep their entries
/// sorted by column with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Row<i64>>,
}

impl SparseIntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntegerMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Duplicate positions are summed; zero sums are dropped.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            let e = acc[r].entry(c).or_insert(0);
            *e = e.checked_add(v).ok_or(Error::Overflow)?;
        }
        let data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect())
            .collect();
        Ok(SparseIntegerMatrix { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        SparseIntegerMatrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, 1)]).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        match self.data[r].binary_search_by_key(&c, |&(col, _)| col) {
            Ok(i) => self.data[r][i].1,
            Err(_) => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Nonzero entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            data[c].push((r, v));
        }
        SparseIntegerMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows);
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for row in &self.data {
            acc.clear();
            for &(k, a) in row {
                for &(c, b) in &other.data[k] {
                    let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                    let e = acc.entry(c).or_insert(0);
                    *e = e.checked_add(p).ok_or(Error::Overflow)?;
                }
            }
            data.push(acc.iter().filter(|(_, &v)| v != 0).map(|(&c, &v)| (c, v)).collect());
        }
        Ok(SparseIntegerMatrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_triplets(self.rows, self.cols, self.triplets().chain(other.triplets()))
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.data
            .iter()
            .map(|row| {
                let mut s = BigRational::zero();
                for &(c, a) in row {
                    if !v[c].is_zero() {
                        s += &v[c] * BigRational::from_integer(BigInt::from(a));
                    }
                }
                s
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = BigRational::from_integer(BigInt::from(v));
        }
        out
    }

    /// Exact rank over the rationals.
    ///
    /// Fraction-free elimination on machine integers; if an intermediate
    /// value overflows the computation restarts over big integers.
    pub fn rank(&self) -> usize {
        match eliminate::<i64>(self.data.clone()) {
            Some(r) => r,
            None => {
                let rows = self
                    .data
                    .iter()
                    .map(|row| row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
                    .collect();
                eliminate::<BigInt>(rows).expect("big integers do not overflow")
            }
        }
    }

    /// Rank modulo a prime `p < 2^32`. Never exceeds the rational rank.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        assert!((2..1 << 32).contains(&p), "modulus out of range");
        let md = |v: i64| v.rem_euclid(p as i64) as u64;
        let mut pivots: BTreeMap<usize, Row<u64>> = BTreeMap::new();
        for row in &self.data {
            let mut r: Row<u64> = row.iter().map(|&(c, v)| (c, md(v))).filter(|&(_, v)| v != 0).collect();
            while let Some(&(lead, lv)) = r.first() {
                match pivots.get(&lead) {
                    Some(piv) => {
                        // pivot rows are monic
                        let f = lv;
                        r = combine_mod(&r, piv, f, p);
                    }
                    None => {
                        let inv = pow_mod(lv, p - 2, p);
                        let r: Row<u64> = r.iter().map(|&(c, v)| (c, v * inv % p)).collect();
                        pivots.insert(lead, r);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

// r - f * piv (mod p)
fn combine_mod(r: &Row<u64>, piv: &Row<u64>, f: u64, p: u64) -> Row<u64> {
    let mut out = Vec::with_capacity(r.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < piv.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, (p - f * piv[j - 1].1 % p) % p)
        } else {
            i += 1;
            j += 1;
            (ci, (r[i - 1].1 + p - f * piv[j - 1].1 % p) % p)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    out
}

trait Scalar: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

// a * r - b * piv, dropping zeros
fn combine<T: Scalar>(r: &Row<T>, a: &T, piv: &Row<T>, b: &T) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(r.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < piv.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a.mul(&r[i - 1].1)?)
        } else if cj < ci {
            j += 1;
            (cj, b.mul(&piv[j - 1].1)?.neg()?)
        } else {
            i += 1;
            j += 1;
            (ci, a.mul(&r[i - 1].1)?.sub(&b.mul(&piv[j - 1].1)?)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn normalize<T: Scalar>(r: &mut Row<T>) {
    let Some(first) = r.first() else { return };
    let mut g = first.1.gcd(&first.1); // |lead|
    for (_, v) in r.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_unit() {
        for (_, v) in r.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

fn eliminate<T: Scalar>(rows: Vec<Row<T>>) -> Option<usize> {
    let mut pivots: BTreeMap<usize, Row<T>> = BTreeMap::new();
    for row in rows {
        let mut r = row;
        normalize(&mut r);
        while let Some((lead, _)) = r.first() {
            let lead = *lead;
            let Some(piv) = pivots.get_mut(&lead) else {
                pivots.insert(lead, r);
                break;
            };
            if !piv[0].1.is_unit() && r[0].1.is_unit() {
                core::mem::swap(piv, &mut r);
            }
            let pl = piv[0].1.clone();
            let rl = r[0].1.clone();
            let g = pl.gcd(&rl);
            let a = pl.div_exact(&g);
            let b = rl.div_exact(&g);
            r = combine(&r, &a, piv, &b)?;
            normalize(&mut r);
        }
    }
    Some(pivots.len())
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by dense rational row reduction.
pub fn dense_rank(m: &SparseIntegerMatrix) -> usize {
    rref(&mut m.to_dense()).len()
}

/// A basis of the right null space, one vector per free column, in RREF
/// normal form.
pub fn kernel_basis(m: &SparseIntegerMatrix) -> Vec<Vec<BigRational>> {
    let cols = m.cols();
    let mut dense = m.to_dense();
    let pivots = rref(&mut dense);
    let mut pivot_row = vec![None; cols];
    for (r, &c) in pivots.iter().enumerate() {
        pivot_row[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| pivot_row[c].is_none()) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -dense[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = Integer::gcd(&g, x);
    }
    if Zero::is_zero(&g) || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Rank of sparse big-integer rows (column, value), tried on machine
/// integers first.
pub fn rank_of_rows(rows: Vec<Vec<(usize, BigInt)>>) -> usize {
    let small: Option<Vec<Row<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|(c, v)| v.to_i64().map(|x| (*c, x))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = eliminate::<i64>(small) {
            return r;
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|(_, v)| !Zero::is_zero(v)).collect())
        .collect();
    eliminate::<BigInt>(rows).expect("big integers do not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, t: &[(usize, usize, i64)]) -> SparseIntegerMatrix {
        SparseIntegerMatrix::from_triplets(rows, cols, t.iter().copied()).unwrap()
    }

    #[test]
    fn rank_small() {
        let a = m(3, 3, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4), (2, 2, 3)]);
        assert_eq!(a.rank(), 2);
        assert_eq!(dense_rank(&a), 2);
        assert_eq!(a.rank_mod_p(2_147_483_647), 2);
        assert_eq!(SparseIntegerMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(SparseIntegerMatrix::identity(6).rank(), 6);
    }

    #[test]
    fn mod_p_is_a_lower_bound() {
        let a = m(2, 2, &[(0, 0, 2), (0, 1, 1), (1, 0, 1), (1, 1, 2)]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank_mod_p(3), 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let a = m(3, 3, &[(0, 0, big), (0, 1, 3), (1, 0, 3), (1, 1, big), (2, 0, big - 1), (2, 2, 7)]);
        assert_eq!(a.rank(), dense_rank(&a));
    }

    #[test]
    fn transpose_and_mul() {
        let a = m(2, 3, &[(0, 0, 1), (0, 2, -1), (1, 1, 2)]);
        let at = a.transpose();
        assert_eq!(at.get(2, 0), -1);
        let p = a.mul(&at).unwrap();
        assert_eq!(p.get(0, 0), 2);
        assert_eq!(p.get(1, 1), 4);
        assert_eq!(p.get(0, 1), 0);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn kernel_of_incidence() {
        // boundary of a triangle, edges x vertices
        let d = m(3, 3, &[(0, 0, -1), (0, 1, 1), (1, 0, -1), (1, 2, 1), (2, 1, -1), (2, 2, 1)]);
        let k = kernel_basis(&d);
        assert_eq!(k.len(), 1);
        assert!(d.mul_vec(&k[0]).iter().all(Zero::is_zero));
        let ints = primitive_integer(&k[0]);
        assert_eq!(ints, vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn triplets_sum_duplicates() {
        let a = m(1, 2, &[(0, 0, 1), (0, 0, -1), (0, 1, 2), (0, 1, 3)]);
        assert_eq!(a.nnz(), 1);
        assert_eq!(a.get(0, 1), 5);
        assert!(SparseIntegerMatrix::from_triplets(1, 1, [(1, 0, 1)]).is_err());
    }
}
