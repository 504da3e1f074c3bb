//! Right-alternative algebras and the Bol algebras they induce.

use serde::{Deserialize, Serialize};

use crate::linalg::vec_ops;
use crate::scalar::Scalar;
use crate::structures::{BolAlgebra, StructureConstants2, StructureConstants3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RightAltError {
    #[error("multiplication table is not right-alternative at ({0}, {1})")]
    NotRightAlternative(usize, usize),
    #[error("index out of range")]
    BadIndex,
}

/// A linear algebra with a full (non-antisymmetric) multiplication table
/// `{x, y}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RightAltAlgebra {
    pub dim: usize,
    /// `m[k][i][j]`: coefficient of `e_k` in `{e_i, e_j}`, flattened.
    pub table: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl RightAltAlgebra {
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, RightAltError> {
        let mut table = vec![Scalar::zero(); dim * dim * dim];
        for (k, i, j, v) in entries {
            if *k >= dim || *i >= dim || *j >= dim {
                return Err(RightAltError::BadIndex);
            }
            table[(k * dim + i) * dim + j] = v.clone();
        }
        Ok(RightAltAlgebra { dim, table, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.table[(k * self.dim + i) * self.dim + j]
    }

    /// `{x, y}`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
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

    /// Check `{y, {x, x}} = {{y, x}, x}` on the polarized basis grid: the
    /// identity is quadratic in `x`, so basis vectors and sums of two basis
    /// vectors decide it.
    pub fn check_right_alternative(&self) -> Result<(), RightAltError> {
        let n = self.dim;
        let e = |i| vec_ops::basis_vec(n, i);
        let mut xs: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
        for i in 0..n {
            xs.push((i, i, e(i)));
            for j in i + 1..n {
                xs.push((i, j, vec_ops::add(&e(i), &e(j))));
            }
        }
        for y in 0..n {
            for (i, j, x) in &xs {
                let lhs = self.mul(&e(y), &self.mul(x, x));
                let rhs = self.mul(&self.mul(&e(y), x), x);
                if lhs != rhs {
                    return Err(RightAltError::NotRightAlternative(*i, *j));
                }
            }
        }
        Ok(())
    }
}

/// Bol algebra of a right-alternative algebra:
/// `x . y = {x,y} - {y,x}`,
/// `<x,y,z> = {{x,y},z} - {x,{y,z}}`,
/// `(x,y,z) = z . (x . y) + 2 <z, x, y>`.
pub fn bol_from_right_alt(r: &RightAltAlgebra) -> Result<BolAlgebra, RightAltError> {
    r.check_right_alternative()?;
    let n = r.dim;
    let e = |i| vec_ops::basis_vec(n, i);
    let dot_val = |x: &[Scalar], y: &[Scalar]| vec_ops::sub(&r.mul(x, y), &r.mul(y, x));
    let angle = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| {
        vec_ops::sub(&r.mul(&r.mul(x, y), z), &r.mul(x, &r.mul(y, z)))
    };
    let mut dot_entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (k, c) in dot_val(&e(i), &e(j)).into_iter().enumerate() {
                if !c.is_zero() {
                    dot_entries.push((k, i, j, c));
                }
            }
        }
    }
    let dot = StructureConstants2::from_entries(n, &dot_entries)
        .map_err(|_| RightAltError::BadIndex)?;
    let two = Scalar::from_int(2);
    let mut triple_entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let z_xy = dot.eval(&e(k), &dot.eval(&e(i), &e(j)));
                let ang = angle(&e(k), &e(i), &e(j));
                for l in 0..n {
                    let c = &z_xy[l] + &(&two * &ang[l]);
                    if !c.is_zero() {
                        triple_entries.push((l, i, j, k, c));
                    }
                }
            }
        }
    }
    let triple = StructureConstants3::from_entries(n, &triple_entries)
        .map_err(|_| RightAltError::BadIndex)?;
    let mut b = BolAlgebra::new(dot, triple);
    b.label = r.label.clone();
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;
    use crate::structures::verify_bol;

    /// Algebra A: {e2,e3}=e2, {e3,e2}=e1, {e3,e3}=e3.
    pub fn algebra_a() -> RightAltAlgebra {
        RightAltAlgebra::from_entries(
            3,
            &[(1, 1, 2, qi(1)), (0, 2, 1, qi(1)), (2, 2, 2, qi(1))],
        )
        .unwrap()
    }

    #[test]
    fn algebra_a_induces_printed_bol_operations() {
        let a = algebra_a();
        a.check_right_alternative().unwrap();
        let b = bol_from_right_alt(&a).unwrap();
        // e2 . e3 = e2 - e1, (e2,e3,e3) = -e1 - e2.
        assert_eq!(*b.dot.get(1, 1, 2), qi(1));
        assert_eq!(*b.dot.get(0, 1, 2), qi(-1));
        assert_eq!(*b.triple.get(0, 1, 2, 2), qi(-1));
        assert_eq!(*b.triple.get(1, 1, 2, 2), qi(-1));
        assert!(verify_bol(&b).is_valid());
    }

    #[test]
    fn zero_multiplication_gives_abelian_bol() {
        let z = RightAltAlgebra::from_entries(3, &[]).unwrap();
        let b = bol_from_right_alt(&z).unwrap();
        assert!(b.dot.is_zero() && b.triple.is_zero());
    }

    #[test]
    fn non_right_alternative_rejected() {
        // {e1,e1} = e2, {e1,e2} = e1 breaks {y,{x,x}} = {{y,x},x} at y=x=e1.
        let r = RightAltAlgebra::from_entries(2, &[(1, 0, 0, qi(1)), (0, 0, 1, qi(1))])
            .unwrap();
        assert!(bol_from_right_alt(&r).is_err());
    }
}
