//! Structure-constant tensors: the universal carriers for brackets, dot
//! products, and triple products.

use serde::{Deserialize, Serialize};

use crate::linalg::{vec_ops, QMat};
use crate::scalar::Scalar;

/// Error building a tensor from sparse entries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("conflicting values for entry {0:?}")]
    ConflictingEntry(Vec<usize>),
    #[error("diagonal bilinear entry ({i},{i}) must be zero")]
    NonzeroDiagonal { i: usize },
}

/// Antisymmetric bilinear structure constants `c[k][i][j]` with
/// `c[k][i][j] = -c[k][j][i]` enforced at construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StructureConstants2 {
    dim: usize,
    c: Vec<Scalar>, // index k*n*n + i*n + j
}

impl StructureConstants2 {
    pub fn zero(dim: usize) -> Self {
        StructureConstants2 { dim, c: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// Build from sparse entries `(k, i, j, value)` meaning the `e_k`
    /// coefficient of `e_i * e_j`; the antisymmetric completion
    /// `c[k][j][i] = -value` is applied automatically.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, TensorError> {
        let mut t = StructureConstants2::zero(dim);
        let mut set = vec![false; dim * dim * dim];
        for (k, i, j, v) in entries {
            for ix in [*k, *i, *j] {
                if ix >= dim {
                    return Err(TensorError::IndexOutOfRange { index: ix, dim });
                }
            }
            if i == j {
                if !v.is_zero() {
                    return Err(TensorError::NonzeroDiagonal { i: *i });
                }
                continue;
            }
            let idx = k * dim * dim + i * dim + j;
            let idx_t = k * dim * dim + j * dim + i;
            if set[idx] && t.c[idx] != *v {
                return Err(TensorError::ConflictingEntry(vec![*k, *i, *j]));
            }
            if set[idx_t] && t.c[idx_t] != -v {
                return Err(TensorError::ConflictingEntry(vec![*k, *j, *i]));
            }
            t.c[idx] = v.clone();
            t.c[idx_t] = -v;
            set[idx] = true;
            set[idx_t] = true;
        }
        Ok(t)
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let entries: Vec<_> = entries
            .iter()
            .map(|&(k, i, j, v)| (k, i, j, Scalar::from_int(v)))
            .collect();
        StructureConstants2::from_entries(dim, &entries).expect("bad literal tensor")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.c[k * self.dim * self.dim + i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Product vector `x * y`.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec_ops::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        *o += &(c * &f);
                    }
                }
            }
        }
        out
    }

    /// Product of basis vectors `e_i * e_j`.
    pub fn eval_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.get(k, i, j).clone()).collect()
    }

    /// Matrix of `z -> x * z`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> QMat {
        let n = self.dim;
        let mut m = QMat::zero(n, n);
        for j in 0..n {
            let col = self.eval(x, &vec_ops::basis_vec(n, j));
            for k in 0..n {
                m[(k, j)] = col[k].clone();
            }
        }
        m
    }

    /// Tensor transported along the invertible matrix `p`:
    /// `c'(x, y) = p^{-1} c(p x, p y)`.
    ///
    /// If the result equals another algebra's tensor, `p` is an isomorphism
    /// from this algebra onto that one... read the other way around: `p`
    /// carries the *returned* tensor onto `self`.
    pub fn conjugate(&self, p: &QMat) -> StructureConstants2 {
        let n = self.dim;
        assert!(p.is_square() && p.rows() == n);
        let p_inv = p.inverse().expect("conjugating by a singular matrix");
        let mut out = StructureConstants2::zero(n);
        for i in 0..n {
            for j in 0..n {
                let prod = self.eval(&p.col_vec(i), &p.col_vec(j));
                let coords = p_inv.mul_vec(&prod);
                for k in 0..n {
                    out.c[k * n * n + i * n + j] = coords[k].clone();
                }
            }
        }
        out
    }

    /// Sparse view `(k, i, j, value)` of the nonzero entries, `i < j` only.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for k in 0..n {
            for i in 0..n {
                for j in i + 1..n {
                    let v = self.get(k, i, j);
                    if !v.is_zero() {
                        out.push((k, i, j, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Trilinear structure constants `t[l][i][j][k]`: the `e_l` coefficient of
/// `(e_i, e_j, e_k)`. No symmetry is enforced at construction; the axioms
/// are the verifiers' business.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StructureConstants3 {
    dim: usize,
    t: Vec<Scalar>, // index l*n^3 + i*n^2 + j*n + k
}

impl StructureConstants3 {
    pub fn zero(dim: usize) -> Self {
        StructureConstants3 { dim, t: vec![Scalar::zero(); dim * dim * dim * dim] }
    }

    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, usize, Scalar)],
    ) -> Result<Self, TensorError> {
        let mut t = StructureConstants3::zero(dim);
        let mut set = vec![false; dim * dim * dim * dim];
        for (l, i, j, k, v) in entries {
            for ix in [*l, *i, *j, *k] {
                if ix >= dim {
                    return Err(TensorError::IndexOutOfRange { index: ix, dim });
                }
            }
            let idx = ((*l * dim + *i) * dim + *j) * dim + *k;
            if set[idx] && t.t[idx] != *v {
                return Err(TensorError::ConflictingEntry(vec![*l, *i, *j, *k]));
            }
            t.t[idx] = v.clone();
            set[idx] = true;
        }
        Ok(t)
    }

    /// Integer entries `(l, i, j, k, value)`; the antisymmetric image
    /// `(l, j, i, k, -value)` is filled in as well, which every tensor in the
    /// catalog satisfies.
    pub fn from_int_entries_antisym(dim: usize, entries: &[(usize, usize, usize, usize, i64)]) -> Self {
        let mut full = Vec::with_capacity(entries.len() * 2);
        for &(l, i, j, k, v) in entries {
            full.push((l, i, j, k, Scalar::from_int(v)));
            full.push((l, j, i, k, Scalar::from_int(-v)));
        }
        StructureConstants3::from_entries(dim, &full).expect("bad literal tensor")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, l: usize, i: usize, j: usize, k: usize) -> &Scalar {
        &self.t[((l * self.dim + i) * self.dim + j) * self.dim + k]
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Scalar::is_zero)
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec_ops::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    if z[k].is_zero() {
                        continue;
                    }
                    let f = &xy * &z[k];
                    for (l, o) in out.iter_mut().enumerate() {
                        let c = self.get(l, i, j, k);
                        if !c.is_zero() {
                            *o += &(c * &f);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn eval_basis(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        (0..self.dim).map(|l| self.get(l, i, j, k).clone()).collect()
    }

    /// Matrix of the inner map `z -> (x, y, z)`.
    pub fn inner_map(&self, x: &[Scalar], y: &[Scalar]) -> QMat {
        let n = self.dim;
        let mut m = QMat::zero(n, n);
        for j in 0..n {
            let col = self.eval(x, y, &vec_ops::basis_vec(n, j));
            for k in 0..n {
                m[(k, j)] = col[k].clone();
            }
        }
        m
    }

    /// Tensor transported along `p`: `t'(x, y, z) = p^{-1} t(p x, p y, p z)`.
    pub fn conjugate(&self, p: &QMat) -> StructureConstants3 {
        let n = self.dim;
        assert!(p.is_square() && p.rows() == n);
        let p_inv = p.inverse().expect("conjugating by a singular matrix");
        let mut out = StructureConstants3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let prod = self.eval(&p.col_vec(i), &p.col_vec(j), &p.col_vec(k));
                    let coords = p_inv.mul_vec(&prod);
                    for l in 0..n {
                        out.t[((l * n + i) * n + j) * n + k] = coords[l].clone();
                    }
                }
            }
        }
        out
    }

    /// Sparse view of nonzero entries `(l, i, j, k, value)`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let v = self.get(l, i, j, k);
                        if !v.is_zero() {
                            out.push((l, i, j, k, v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    #[test]
    fn antisymmetric_completion() {
        let t = StructureConstants2::from_int_entries(3, &[(0, 1, 2, 1)]);
        assert_eq!(*t.get(0, 1, 2), qi(1));
        assert_eq!(*t.get(0, 2, 1), qi(-1));
        assert!(t.get(1, 1, 2).is_zero());
    }

    #[test]
    fn nonzero_diagonal_rejected() {
        let r = StructureConstants2::from_entries(2, &[(0, 1, 1, qi(1))]);
        assert!(matches!(r, Err(TensorError::NonzeroDiagonal { i: 1 })));
    }

    #[test]
    fn conjugate_round_trips() {
        let t = StructureConstants2::from_int_entries(3, &[(0, 1, 2, 1), (1, 0, 2, -2)]);
        let p = QMat::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[2, 0, 1]]);
        let back = t.conjugate(&p).conjugate(&p.inverse().unwrap());
        assert_eq!(back, t);
    }
}
