//! Truncated Baker-Campbell-Hausdorff products.
//!
//! Exact in rational arithmetic when the inputs are rational; the truncation
//! at order 4 is exact for every nilpotent envelope in the catalog (their
//! nilpotency classes are at most 4).

use crate::linalg::vec_ops;
use crate::scalar::Scalar;
use crate::structures::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unsupported BCH order {0} (supported: 1..=4)")]
pub struct UnsupportedOrder(pub usize);

/// `log(exp x exp y)` truncated to the given order:
/// `x + y + [x,y]/2 + ([x,[x,y]] + [y,[y,x]])/12 - [y,[x,[x,y]]]/24`.
pub fn bch(
    x: &[Scalar],
    y: &[Scalar],
    l: &LieAlgebra,
    order: usize,
) -> Result<Vec<Scalar>, UnsupportedOrder> {
    if order == 0 || order > 4 {
        return Err(UnsupportedOrder(order));
    }
    let mut out = vec_ops::add(x, y);
    if order >= 2 {
        let xy = l.bracket_of(x, y);
        vec_ops::axpy(&mut out, &Scalar::ratio(1, 2), &xy);
        if order >= 3 {
            let xxy = l.bracket_of(x, &xy);
            let yyx = l.bracket_of(y, &l.bracket_of(y, x));
            vec_ops::axpy(&mut out, &Scalar::ratio(1, 12), &xxy);
            vec_ops::axpy(&mut out, &Scalar::ratio(1, 12), &yyx);
            if order >= 4 {
                let yxxy = l.bracket_of(y, &xxy);
                vec_ops::axpy(&mut out, &Scalar::ratio(-1, 24), &yxxy);
            }
        }
    }
    Ok(out)
}

/// `f64` version of [`bch`] against a flattened bracket tensor.
pub fn bch_f64(
    x: &[f64],
    y: &[f64],
    bracket: &F64Bracket,
    order: usize,
) -> Result<Vec<f64>, UnsupportedOrder> {
    if order == 0 || order > 4 {
        return Err(UnsupportedOrder(order));
    }
    let n = x.len();
    let mut out: Vec<f64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
    if order >= 2 {
        let xy = bracket.eval(x, y);
        for k in 0..n {
            out[k] += xy[k] / 2.0;
        }
        if order >= 3 {
            let xxy = bracket.eval(x, &xy);
            let yx: Vec<f64> = xy.iter().map(|v| -v).collect();
            let yyx = bracket.eval(y, &yx);
            for k in 0..n {
                out[k] += (xxy[k] + yyx[k]) / 12.0;
            }
            if order >= 4 {
                let yxxy = bracket.eval(y, &xxy);
                for k in 0..n {
                    out[k] -= yxxy[k] / 24.0;
                }
            }
        }
    }
    Ok(out)
}

/// Float bracket tensor for the numeric loop paths.
#[derive(Clone, Debug)]
pub struct F64Bracket {
    pub dim: usize,
    /// `c[k][i][j]`, flattened.
    pub c: Vec<f64>,
}

impl F64Bracket {
    pub fn from_lie(l: &LieAlgebra) -> Self {
        let n = l.dim;
        let mut c = vec![0.0; n * n * n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    c[(k * n + i) * n + j] = l.bracket.get(k, i, j).to_f64();
                }
            }
        }
        F64Bracket { dim: n, c }
    }

    pub fn eval(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0.0 {
                    continue;
                }
                let f = x[i] * y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c[(k * n + i) * n + j];
                    if c != 0.0 {
                        *o += c * f;
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
    use crate::structures::StructureConstants2;

    #[test]
    fn abelian_is_plain_addition() {
        let l = LieAlgebra::abelian(3);
        let x = vec![qi(1), qi(2), qi(3)];
        let y = vec![qi(4), qi(5), qi(6)];
        assert_eq!(bch(&x, &y, &l, 4).unwrap(), vec_ops::add(&x, &y));
    }

    #[test]
    fn order_guard() {
        let l = LieAlgebra::abelian(2);
        assert!(bch(&[qi(0), qi(0)], &[qi(0), qi(0)], &l, 5).is_err());
    }

    #[test]
    fn heisenberg_order2_exact() {
        // [e2,e3] = e1.
        let l = LieAlgebra::new(StructureConstants2::from_int_entries(3, &[(0, 1, 2, 1)]));
        let x = vec![qi(0), qi(1), qi(0)];
        let y = vec![qi(0), qi(0), qi(1)];
        let z = bch(&x, &y, &l, 2).unwrap();
        assert_eq!(z, vec![Scalar::ratio(1, 2), qi(1), qi(1)]);
        assert_eq!(z, bch(&x, &y, &l, 4).unwrap());
    }
}
