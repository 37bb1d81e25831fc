//! Dense matrices over the rationals with exact row reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        RationalMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|&x| q(x)).collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols);
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Q] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Q) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut b = Self::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                b[(i - r0, j - c0)] = self[(i, j)].clone();
            }
        }
        b
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &RationalMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block_diag(a: &RationalMatrix, d: &RationalMatrix) -> Self {
        let mut m = Self::zeros(a.rows + d.rows, a.cols + d.cols);
        m.set_block(0, 0, a);
        m.set_block(a.rows, a.cols, d);
        m
    }

    pub fn hstack(a: &RationalMatrix, b: &RationalMatrix) -> Self {
        assert_eq!(a.rows, b.rows);
        let mut m = Self::zeros(a.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols, b);
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pi = 0;
        for free in 0..self.cols {
            if pi < pivots.len() && pivots[pi] == free {
                pi += 1;
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<RationalMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::hstack(self, &Self::identity(n));
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(m.block(0, n, n, 2 * n))
    }

    /// Coefficients `c_0..c_n` of `det(t·I − self) = Σ c_k t^k`, by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> Vec<Q> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n + 1 - k];
            }
            m = next;
            let am = self * &m;
            let trace: Q = (0..n).map(|i| am[(i, i)].clone()).sum();
            coeffs[n - k] = -trace / q(k as i64);
        }
        coeffs
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    pub fn is_strictly_upper(&self) -> bool {
        (0..self.rows).all(|i| (0..=i.min(self.cols.saturating_sub(1))).all(|j| self[(i, j)].is_zero()))
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `Q^ambient` stored as the nonzero rows of an RREF matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
}

impl LinearSubspace {
    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        let data: Vec<Q> = vectors.iter().inspect(|v| assert_eq!(v.len(), ambient)).flatten().cloned().collect();
        let (m, pivots) = RationalMatrix::from_vec(vectors.len(), ambient, data).rref();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        LinearSubspace { ambient, basis }
    }

    /// Column span of `m`.
    pub fn column_span(m: &RationalMatrix) -> Self {
        let t = m.transpose();
        let vectors: Vec<Vec<Q>> = (0..t.rows()).map(|i| t.row(i).to_vec()).collect();
        Self::span(m.rows(), &vectors)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn sum(&self, other: &LinearSubspace) -> LinearSubspace {
        assert_eq!(self.ambient, other.ambient);
        let all: Vec<Vec<Q>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(self.ambient, &all)
    }

    pub fn intersection_dim(&self, other: &LinearSubspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut all = self.basis.clone();
        all.push(v.to_vec());
        Self::span(self.ambient, &all).dim() == self.dim()
    }

    /// Annihilator as a matrix whose rows span `{η : η·w = 0 ∀ w}`.
    pub fn annihilator(&self) -> RationalMatrix {
        let data: Vec<Q> = self.basis.iter().flatten().cloned().collect();
        let m = RationalMatrix::from_vec(self.basis.len(), self.ambient, data);
        let null = m.nullspace();
        let k = null.len();
        RationalMatrix::from_vec(k, self.ambient, null.into_iter().flatten().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let null = a.nullspace();
        assert_eq!(null.len(), 1);
        let v = RationalMatrix::from_vec(3, 1, null[0].clone());
        assert!((&a * &v).is_zero());
        assert_eq!(RationalMatrix::zeros(2, 3).nullspace().len(), 3);
    }

    #[test]
    fn inverse_and_product() {
        let a = m(&[vec![2, 1], vec![7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RationalMatrix::identity(2));
        assert!(m(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // t^2 - 5t - 2
        let a = m(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.charpoly(), vec![q(-2), q(-5), q(1)]);
        let j = m(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(j.charpoly(), vec![q(0), q(0), q(0), q(1)]);
        assert!(j.is_nilpotent());
        assert!(!a.is_nilpotent());
    }

    #[test]
    fn subspace_operations() {
        let u = LinearSubspace::span(3, &[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let w = LinearSubspace::span(3, &[vec![q(1), q(1), q(1)], vec![q(0), q(1), q(0)]]);
        assert_eq!(u.intersection_dim(&w), 1);
        assert!(u.contains(&[q(3), q(-2), q(0)]));
        assert!(!u.contains(&[q(0), q(0), q(1)]));
        let ann = u.annihilator();
        assert_eq!(ann.rows(), 1);
        assert_eq!(ann.row(0), &[q(0), q(0), q(1)]);
    }

    #[test]
    fn strictly_upper() {
        assert!(m(&[vec![0, 5], vec![0, 0]]).is_strictly_upper());
        assert!(!m(&[vec![1, 5], vec![0, 0]]).is_strictly_upper());
    }
}
