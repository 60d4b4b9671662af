//! Dense exact matrices with Gaussian elimination over a field.

use crate::scalar::{Field, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            field,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone();
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a = a.clone() - b.clone();
        }
        m
    }

    pub fn neg(&self) -> Matrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = -a.clone();
        }
        m
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = a.clone() * c.clone();
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut m = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() + a.clone() * b.clone();
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mat_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc + self.get(i, j).clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Row-reduce in place; returns pivot column indices.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().expect("pivot nonzero");
            for j in 0..self.cols {
                let v = self.get(row, j).clone() * inv.clone();
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in 0..self.cols {
                        let v = self.get(r, j).clone() - factor.clone() * self.get(row, j).clone();
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Exact inverse, or the rank via `NotInvertible`.
    pub fn invert(&self) -> Result<Matrix> {
        assert!(self.is_square(), "invert requires a square matrix");
        let n = self.rows;
        // Augment with the identity and reduce.
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(Error::NotInvertible { rank });
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Exact basis of the null space; empty iff full column rank.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, f).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Componentwise vector helpers used throughout the identity checkers.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn vec_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn vec_zero(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

pub fn basis_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec_zero(field, n);
    v[i] = field.one();
    v
}
