//! Order-2 and order-3 tensors over a fixed basis, with the slot maps used by
//! the identity checkers: twists, per-slot linear maps, and componentwise sums.

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// An element of A⊗A as an n×n coefficient matrix: r = Σ coeff[i][j] e_i⊗e_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    pub coeff: Matrix,
}

impl Tensor2 {
    pub fn zero(field: Field, dim: usize) -> Tensor2 {
        Tensor2 {
            coeff: Matrix::zero(field, dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeff.rows
    }

    pub fn field(&self) -> Field {
        self.coeff.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.coeff.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeff.set(i, j, v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeff == self.coeff.transpose()
    }

    /// The twist τ(Σ c_ij e_i⊗e_j) = Σ c_ij e_j⊗e_i.
    pub fn tau(&self) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.transpose(),
        }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.add(&other.coeff),
        }
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.sub(&other.coeff),
        }
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.neg(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.scale(c),
        }
    }

    /// (f⊗id) applied coefficientwise: coeff' = F · coeff.
    pub fn apply_left(&self, f: &Matrix) -> Tensor2 {
        Tensor2 {
            coeff: f.mul(&self.coeff),
        }
    }

    /// (id⊗g) applied coefficientwise: coeff' = coeff · Gᵀ.
    pub fn apply_right(&self, g: &Matrix) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.mul(&g.transpose()),
        }
    }

    /// (f⊗g).
    pub fn apply_pair(&self, f: &Matrix, g: &Matrix) -> Tensor2 {
        self.apply_left(f).apply_right(g)
    }
}

/// A dense order-3 tensor with extents (n1, n2, n3), entries indexed [i][j][k].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub field: Field,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(field: Field, n1: usize, n2: usize, n3: usize) -> Tensor3 {
        Tensor3 {
            n1,
            n2,
            n3,
            field,
            data: vec![field.zero(); n1 * n2 * n3],
        }
    }

    pub fn cube(field: Field, n: usize) -> Tensor3 {
        Tensor3::zero(field, n, n, n)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.n2 + j) * self.n3 + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.data[(i * self.n2 + j) * self.n3 + k] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        if v.is_zero() {
            return;
        }
        let cur = self.get(i, j, k).clone();
        self.set(i, j, k, cur + v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!((self.n1, self.n2, self.n3), (other.n1, other.n2, other.n3));
        let mut t = self.clone();
        for (a, b) in t.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone();
        }
        t
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor3 {
        let mut t = self.clone();
        for a in t.data.iter_mut() {
            *a = -a.clone();
        }
        t
    }

    /// Swap the outer slots: t'[i][j][k] = t[k][j][i].
    pub fn tau13(&self) -> Tensor3 {
        assert_eq!(self.n1, self.n3);
        let mut t = Tensor3::zero(self.field, self.n3, self.n2, self.n1);
        for i in 0..self.n1 {
            for j in 0..self.n2 {
                for k in 0..self.n3 {
                    t.set(k, j, i, self.get(i, j, k).clone());
                }
            }
        }
        t
    }

    /// Swap the first two slots: t'[i][j][k] = t[j][i][k].
    pub fn tau12(&self) -> Tensor3 {
        assert_eq!(self.n1, self.n2);
        let mut t = Tensor3::zero(self.field, self.n2, self.n1, self.n3);
        for i in 0..self.n1 {
            for j in 0..self.n2 {
                for k in 0..self.n3 {
                    t.set(j, i, k, self.get(i, j, k).clone());
                }
            }
        }
        t
    }

    /// Apply a linear map to one slot (1, 2 or 3).
    pub fn apply_slot(&self, slot: usize, m: &Matrix) -> Tensor3 {
        let (n1, n2, n3) = match slot {
            1 => (m.rows, self.n2, self.n3),
            2 => (self.n1, m.rows, self.n3),
            3 => (self.n1, self.n2, m.rows),
            _ => panic!("slot must be 1, 2 or 3"),
        };
        let mut t = Tensor3::zero(self.field, n1, n2, n3);
        for i in 0..self.n1 {
            for j in 0..self.n2 {
                for k in 0..self.n3 {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    match slot {
                        1 => {
                            for a in 0..m.rows {
                                t.add_to(a, j, k, m.get(a, i).clone() * v.clone());
                            }
                        }
                        2 => {
                            for a in 0..m.rows {
                                t.add_to(i, a, k, m.get(a, j).clone() * v.clone());
                            }
                        }
                        _ => {
                            for a in 0..m.rows {
                                t.add_to(i, j, a, m.get(a, k).clone() * v.clone());
                            }
                        }
                    }
                }
            }
        }
        t
    }

    /// Nonzero entries as 1-based sparse triples with their coefficients,
    /// for human-readable residual rendering.
    pub fn sparse_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.n1 {
            for j in 0..self.n2 {
                for k in 0..self.n3 {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i + 1, j + 1, k + 1, v.clone()));
                    }
                }
            }
        }
        out
    }
}
