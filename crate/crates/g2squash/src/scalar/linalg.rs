//! Dense exact linear algebra over a scalar field.
//!
//! Deterministic reduced row echelon form (first nonzero entry in column
//! order is the pivot), with the solvers the geometry pipeline needs:
//! particular solutions, kernels, inverses and one-sided inverses.  The
//! element type must be a field — inversion of a nonzero pivot must succeed.

use super::{Scalar, ScalarError};

/// A dense matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<K: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Mat<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).add(rhs.get(i, j))
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).sub(rhs.get(i, j))
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> K {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = K::zero();
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            // Deterministic pivot: first row with a nonzero entry.
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self
                .get(row, col)
                .inv()
                .expect("field element must invert in rref");
            self.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    self.row_sub_scaled(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Solve `self · x = b` for one right-hand side; `None` if inconsistent.
    /// Free variables are set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // A pivot in the augmented column: inconsistent.
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the kernel, one column per free variable, in column order.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = m.get(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                K::one()
            } else {
                K::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(ScalarError::NotInvertible("singular matrix".to_string()));
        }
        Ok(Mat::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
    }

    /// Left inverse `(AᵀA)⁻¹Aᵀ` for a matrix of full column rank.
    pub fn left_inverse(&self) -> Result<Self, ScalarError> {
        let at = self.transpose();
        let gram = at.mul(self);
        Ok(gram.inverse()?.mul(&at))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &K) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(c);
            self.set(r, j, v);
        }
    }

    fn row_sub_scaled(&mut self, r: usize, src: usize, factor: &K) {
        for j in 0..self.cols {
            let v = self.get(r, j).sub(&self.get(src, j).mul(factor));
            self.set(r, j, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank() {
        let mut a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let pivots = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
        assert_eq!(Mat::<Rat>::identity(4).rank(), 4);
    }

    #[test]
    fn solving() {
        let a = m(&[&[2, 1], &[1, -1]]);
        let x = a.solve(&[rint(5), rint(1)]).unwrap();
        assert_eq!(x, vec![rint(2), rint(1)]);
        // Inconsistent system.
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b.solve(&[rint(0), rint(1)]).is_none());
        // Underdetermined: free variable pinned to zero.
        let c = m(&[&[1, 1]]);
        assert_eq!(c.solve(&[rint(3)]).unwrap(), vec![rint(3), rint(0)]);
    }

    #[test]
    fn kernels() {
        let a = m(&[&[1, 2, 3], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![rint(-2), rint(1), rint(0)]);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverses() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let ai = a.inverse().unwrap();
        assert_eq!(a.mul(&ai), Mat::identity(2));
        assert_eq!(ai.mul(&a), Mat::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());

        // Left inverse of a tall matrix.
        let b = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let li = b.left_inverse().unwrap();
        assert_eq!(li.mul(&b), Mat::identity(2));
        assert_eq!(li.get(0, 0), &rat(2, 3));
    }

    #[test]
    fn trace_and_products() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.trace(), rint(5));
        assert_eq!(a.mul(&Mat::identity(2)), a);
        assert_eq!(a.transpose().transpose(), a);
    }
}
