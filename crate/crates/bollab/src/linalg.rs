//! Exact linear algebra over the rationals: matrices, reduced row echelon
//! form, and subspaces with canonical (RREF) bases.
//!
//! Subspace equality is literal equality of the canonical basis, so all
//! ideal/grading/containment checks in the algebra modules are exact.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Build from integer literals, row by row.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        QMat::from_rows(
            rows.iter().map(|r| r.iter().map(|&n| Scalar::from_int(n)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> QMat {
        let mut t = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        m
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        m
    }

    pub fn neg(&self) -> QMat {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = -&*a;
        }
        m
    }

    pub fn scale(&self, s: &Scalar) -> QMat {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a *= s;
        }
        m
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut m = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += &p;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    acc += &(&self[(i, j)] * &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            if lead >= self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(lead, pr);
            let inv = self[(lead, col)].recip();
            for j in col..self.cols {
                let v = &self[(lead, j)] * &inv;
                self[(lead, j)] = v;
            }
            for r in 0..self.rows {
                if r != lead && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for j in col..self.cols {
                        let v = &self[(r, j)] - &(&f * &self[(lead, j)]);
                        self[(r, j)] = v;
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Scalar::zero();
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = -det;
            }
            det *= &m[(col, col)];
            let inv = m[(col, col)].recip();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] * &inv;
                for j in col..n {
                    let v = &m[(r, j)] - &(&f * &m[(col, j)]);
                    m[(r, j)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<QMat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = QMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = QMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = QMat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[(r, free)];
            }
            basis.push(x);
        }
        basis
    }

    /// Characteristic polynomial coefficients `[c0, c1, ..., cn]` of
    /// `det(t I - A) = c_n t^n + ... + c_1 t + c_0` with `c_n = 1`,
    /// by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = QMat::zero(n, n);
        for k in 1..=n {
            // M_k = A (M_{k-1} + c_{n-k+1} I)
            let mut shifted = m.clone();
            for i in 0..n {
                shifted[(i, i)] += &coeffs[n - k + 1];
            }
            m = self.mul(&shifted);
            let c = -(m.trace() / Scalar::from_int(k as i64));
            coeffs[n - k] = c;
        }
        coeffs
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for QMat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Vector helpers used throughout the algebra modules.
pub mod vec_ops {
    use super::Scalar;

    pub fn zeros(n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); n]
    }

    pub fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(n);
        v[i] = Scalar::one();
        v
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
        for (a, x) in acc.iter_mut().zip(v) {
            *a += &(s * x);
        }
    }

    pub fn is_zero(a: &[Scalar]) -> bool {
        a.iter().all(Scalar::is_zero)
    }

    pub fn to_f64(a: &[Scalar]) -> Vec<f64> {
        a.iter().map(Scalar::to_f64).collect()
    }
}

/// A linear subspace of `Q^n`, stored as a reduced-row-echelon basis.
///
/// Two subspaces are equal iff the structs compare equal; the RREF basis is a
/// unique representative.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    /// RREF basis rows; no zero rows.
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rows(
            ambient,
            (0..ambient).map(|i| vec_ops::basis_vec(ambient, i)).collect(),
        )
    }

    /// Span of the given vectors.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient), "vector length mismatch");
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let mut m = QMat::from_rows(rows);
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|i| m.row_vec(i)).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Reduce v against the RREF basis.
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("no zero basis rows");
            if !v[pivot].is_zero() {
                let f = v[pivot].clone();
                for j in 0..self.ambient {
                    let t = &v[j] - &(&f * &row[j]);
                    v[j] = t;
                }
            }
        }
        vec_ops::is_zero(&v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection, via the kernel of the stacked coefficient matrix.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // x = sum a_i u_i = sum b_j w_j; solve [U^T | -W^T] (a,b)^T = 0.
        let du = self.dim();
        let dw = other.dim();
        let mut m = QMat::zero(self.ambient, du + dw);
        for (k, u) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, k)] = u[i].clone();
            }
        }
        for (k, w) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, du + k)] = -&w[i];
            }
        }
        let rows = m
            .kernel()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec_ops::zeros(self.ambient);
                for (k, u) in self.basis.iter().enumerate() {
                    vec_ops::axpy(&mut v, &coeffs[k], u);
                }
                v
            })
            .collect();
        Subspace::from_rows(self.ambient, rows)
    }

    /// Image of this subspace under the linear map with matrix `m`
    /// (columns index the ambient space).
    pub fn map_by(&self, m: &QMat) -> Subspace {
        let rows = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_rows(m.rows(), rows)
    }

    /// Coordinates of `v` in this subspace's basis, if `v` lies in it.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let n = self.ambient;
        let d = self.dim();
        let mut m = QMat::zero(n, d);
        for (j, w) in self.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = w[i].clone();
            }
        }
        m.solve(v)
    }

    /// Indices of standard basis vectors extending this subspace to `Q^n`.
    pub fn complement_coords(&self) -> Vec<usize> {
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        (0..self.ambient).filter(|i| !pivots.contains(i)).collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{})", self.dim(), self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qi, qr};

    #[test]
    fn rref_canonicalizes_span() {
        let a = Subspace::from_rows(3, vec![vec![qi(2), qi(4), qi(0)], vec![qi(1), qi(2), qi(1)]]);
        let b = Subspace::from_rows(3, vec![vec![qi(1), qi(2), qi(0)], vec![qi(0), qi(0), qi(3)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[qi(3), qi(6), qi(-5)]));
        assert!(!a.contains(&[qi(0), qi(1), qi(0)]));
    }

    #[test]
    fn solve_inverse_kernel_agree() {
        let m = QMat::from_int_rows(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(3));
        let b = vec![qi(1), qi(2), qi(3)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(m.kernel().is_empty());

        let sing = QMat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det(), qi(0));
        assert_eq!(sing.kernel().len(), 1);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn charpoly_small_cases() {
        let m = QMat::from_int_rows(&[&[2, 0], &[0, 3]]);
        // t^2 - 5t + 6
        assert_eq!(m.charpoly(), vec![qi(6), qi(-5), qi(1)]);
        let r = QMat::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(r.charpoly(), vec![qi(1), qi(0), qi(1)]);
    }

    #[test]
    fn intersection_and_sum_dims() {
        let a = Subspace::from_rows(3, vec![vec![qi(1), qi(0), qi(0)], vec![qi(0), qi(1), qi(0)]]);
        let b = Subspace::from_rows(3, vec![vec![qi(0), qi(1), qi(1)], vec![qi(0), qi(0), qi(1)]]);
        let i = a.intersect(&b);
        let s = a.sum(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[qi(0), qi(1), qi(0)]));
        assert_eq!(s.dim(), 3);
        assert_eq!(qr(1, 2) + qr(1, 3), qr(5, 6));
    }
}
