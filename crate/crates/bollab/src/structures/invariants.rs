//! Basis-independent invariants of a Bol algebra, used to separate
//! non-isomorphic catalog entries.
//!
//! Everything stored here is unchanged under conjugation by an invertible
//! rational matrix, which the property tests exercise directly. Equality of
//! invariant vectors is necessary (not sufficient) for isomorphism.

use serde::{Deserialize, Serialize};

use super::{verify_bol, BolAlgebra, StructuresError};
use crate::linalg::{vec_ops, QMat, Subspace};
use crate::scalar::Scalar;

/// Projective conjugation class of the quotient action on the derived
/// subspace `V = M.M`, defined when `V.V = 0` and `V` has codimension 1.
///
/// The operator `ad_u : V -> V`, `w -> w . u` for `u` outside `V` is then
/// well-defined up to a nonzero rational scalar, so only scale-free data of
/// its characteristic polynomial is kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointClass {
    pub rank: usize,
    /// Degree of the minimal polynomial (1 iff the action is scalar).
    pub min_poly_degree: usize,
    /// Diagonalizable over the algebraic closure.
    pub semisimple: bool,
    /// Sign of the characteristic-polynomial discriminant (2-dim `V` only).
    pub disc_sign: i32,
    /// `det / trace^2` when the trace is nonzero (2-dim `V` only).
    pub det_trace_ratio: Option<Scalar>,
    /// Square class of `det` when the trace vanishes (2-dim `V` only).
    pub det_square_class: Option<i64>,
}

/// The invariant vector of a Bol algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantVector {
    /// dim `M.M`.
    pub derived_dim: usize,
    /// dim `(M,M,M)`.
    pub triple_span_dim: usize,
    /// dim of the center `{z : z.M = 0 and (z,M,M) = 0}`.
    pub center_dim: usize,
    /// Signature `(pos, neg, zero)` of the symmetrized trace form
    /// `tau(u,v) = tr(z -> (z,u,v))`.
    pub trace_form_signature: (usize, usize, usize),
    /// See [`AdjointClass`]; `None` when not canonically defined.
    pub adjoint_on_derived: Option<AdjointClass>,
}

/// Compute the invariant vector. Errors if the input fails the Bol
/// identities.
pub fn invariants(b: &BolAlgebra) -> Result<InvariantVector, StructuresError> {
    let report = verify_bol(b);
    if !report.is_valid() {
        return Err(StructuresError::InvalidAlgebra(format!(
            "{} violations, first: {:?}",
            report.violations.len(),
            report.violations.first().map(|v| &v.identity)
        )));
    }
    let n = b.dim;
    let e = |i| vec_ops::basis_vec(n, i);

    // V = M.M
    let mut dot_rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            dot_rows.push(b.dot_of(&e(i), &e(j)));
        }
    }
    let derived = Subspace::from_rows(n, dot_rows);

    // (M,M,M)
    let mut triple_rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                triple_rows.push(b.triple_of(&e(i), &e(j), &e(k)));
            }
        }
    }
    let triple_span = Subspace::from_rows(n, triple_rows);

    // Center: z with z.e_j = 0 for all j and (z, e_i, e_j) = 0 for all i, j.
    let mut constraint_rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..n {
        let m = right_dot_matrix(b, j);
        for r in 0..n {
            constraint_rows.push(m.row_vec(r));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let m = left_triple_matrix(b, i, j);
            for r in 0..n {
                constraint_rows.push(m.row_vec(r));
            }
        }
    }
    let center_dim = QMat::from_rows(constraint_rows).kernel().len();

    let trace_form_signature = signature(&trace_form(b));
    let adjoint_on_derived = adjoint_class(b, &derived);

    Ok(InvariantVector {
        derived_dim: derived.dim(),
        triple_span_dim: triple_span.dim(),
        center_dim,
        trace_form_signature,
        adjoint_on_derived,
    })
}

/// Matrix of `z -> z . e_j`.
fn right_dot_matrix(b: &BolAlgebra, j: usize) -> QMat {
    let n = b.dim;
    let mut m = QMat::zero(n, n);
    for col in 0..n {
        let v = b.dot_of(&vec_ops::basis_vec(n, col), &vec_ops::basis_vec(n, j));
        for row in 0..n {
            m[(row, col)] = v[row].clone();
        }
    }
    m
}

/// Matrix of `z -> (z, e_i, e_j)`.
fn left_triple_matrix(b: &BolAlgebra, i: usize, j: usize) -> QMat {
    let n = b.dim;
    let mut m = QMat::zero(n, n);
    for col in 0..n {
        let v = b.triple_of(
            &vec_ops::basis_vec(n, col),
            &vec_ops::basis_vec(n, i),
            &vec_ops::basis_vec(n, j),
        );
        for row in 0..n {
            m[(row, col)] = v[row].clone();
        }
    }
    m
}

/// Symmetrized trace form `tau(u,v) = 1/2 (tr K_{u,v} + tr K_{v,u})` with
/// `K_{u,v} : z -> (z,u,v)`. Conjugation acts on `tau` by congruence, so its
/// signature is invariant.
fn trace_form(b: &BolAlgebra) -> QMat {
    let n = b.dim;
    let half = Scalar::ratio(1, 2);
    let mut tau = QMat::zero(n, n);
    for u in 0..n {
        for v in 0..n {
            let t1 = left_triple_matrix(b, u, v).trace();
            let t2 = left_triple_matrix(b, v, u).trace();
            tau[(u, v)] = (t1 + t2) * &half;
        }
    }
    tau
}

/// Signature `(pos, neg, zero)` of a symmetric rational matrix, by symmetric
/// congruence reduction.
pub fn signature(sym: &QMat) -> (usize, usize, usize) {
    let n = sym.rows();
    assert!(sym.is_square());
    let mut m = sym.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut done = vec![false; n];
    loop {
        // Prefer a nonzero diagonal pivot among unfinished coordinates.
        let pivot = (0..n).find(|&i| !done[i] && !m[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // Look for a nonzero off-diagonal pair and symmetrize it:
                // replacing u_i by u_i + u_j turns 2 m_ij into a diagonal entry.
                let mut found = None;
                'outer: for i in 0..n {
                    if done[i] {
                        continue;
                    }
                    for j in 0..n {
                        if done[j] || j == i {
                            continue;
                        }
                        if !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => break, // remaining block is zero
                    Some((i, j)) => {
                        // congruence: row_i += row_j; col_i += col_j
                        for c in 0..n {
                            let v = &m[(i, c)] + &m[(j, c)];
                            m[(i, c)] = v;
                        }
                        for r in 0..n {
                            let v = &m[(r, i)] + &m[(r, j)];
                            m[(r, i)] = v;
                        }
                        i
                    }
                }
            }
        };
        if m[(p, p)].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        // Clear row/column p by congruence.
        let inv = m[(p, p)].recip();
        for r in 0..n {
            if r == p || m[(r, p)].is_zero() {
                continue;
            }
            let f = &m[(r, p)] * &inv;
            for c in 0..n {
                let v = &m[(r, c)] - &(&f * &m[(p, c)]);
                m[(r, c)] = v;
            }
            for c in 0..n {
                let v = &m[(c, r)] - &(&f * &m[(c, p)]);
                m[(c, r)] = v;
            }
        }
        done[p] = true;
    }
    (pos, neg, n - pos - neg)
}

/// Projective class of the quotient adjoint action on `V = M.M`.
fn adjoint_class(b: &BolAlgebra, derived: &Subspace) -> Option<AdjointClass> {
    let n = b.dim;
    let dv = derived.dim();
    if dv == 0 || dv > 2 || n - dv != 1 {
        return None;
    }
    // Need V.V = 0 for the class to be independent of the chosen complement.
    for x in derived.basis() {
        for y in derived.basis() {
            if !vec_ops::is_zero(&b.dot_of(x, y)) {
                return None;
            }
        }
    }
    // u = the standard basis vector completing V.
    let free = *derived.complement_coords().first()?;
    let u = vec_ops::basis_vec(n, free);
    // Action w -> w . u restricted to V, in V's basis coordinates.
    let mut act = QMat::zero(dv, dv);
    for (j, w) in derived.basis().iter().enumerate() {
        let img = b.dot_of(w, &u);
        let coords = coords_in(derived, &img)?;
        for i in 0..dv {
            act[(i, j)] = coords[i].clone();
        }
    }
    let rank = act.rank();
    if dv == 1 {
        return Some(AdjointClass {
            rank,
            min_poly_degree: 1,
            semisimple: true,
            disc_sign: 0,
            det_trace_ratio: None,
            det_square_class: None,
        });
    }
    // dv == 2
    let tr = act.trace();
    let det = act.det();
    let disc = &tr * &tr - Scalar::from_int(4) * &det;
    let is_scalar = act[(0, 1)].is_zero()
        && act[(1, 0)].is_zero()
        && act[(0, 0)] == act[(1, 1)];
    Some(AdjointClass {
        rank,
        min_poly_degree: if is_scalar { 1 } else { 2 },
        semisimple: is_scalar || !disc.is_zero(),
        disc_sign: disc.signum(),
        det_trace_ratio: if tr.is_zero() {
            None
        } else {
            Some(&det / &(&tr * &tr))
        },
        det_square_class: if tr.is_zero() { det.square_class() } else { None },
    })
}

/// Coordinates of `v` in the subspace's basis, if `v` lies in it.
fn coords_in(space: &Subspace, v: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = space.ambient();
    let d = space.dim();
    let mut m = QMat::zero(n, d);
    for (j, w) in space.basis().iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = w[i].clone();
        }
    }
    m.solve(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{StructureConstants2, StructureConstants3};

    fn type1_bol(entries: &[(usize, usize, usize, i64)]) -> BolAlgebra {
        BolAlgebra::new(
            StructureConstants2::from_int_entries(3, entries),
            StructureConstants3::zero(3),
        )
    }

    #[test]
    fn abelian_invariants() {
        let inv = invariants(&BolAlgebra::abelian(3)).unwrap();
        assert_eq!(inv.derived_dim, 0);
        assert_eq!(inv.triple_span_dim, 0);
        assert_eq!(inv.center_dim, 3);
        assert_eq!(inv.trace_form_signature, (0, 0, 3));
    }

    #[test]
    fn diagonalizable_vs_jordan_adjoint() {
        // e1.e3=e1, e2.e3=e2 versus e1.e3=e1+e2, e2.e3=e2.
        let diag = type1_bol(&[(0, 0, 2, 1), (1, 1, 2, 1)]);
        let jordan = type1_bol(&[(0, 0, 2, 1), (1, 0, 2, 1), (1, 1, 2, 1)]);
        let a = invariants(&diag).unwrap();
        let b = invariants(&jordan).unwrap();
        assert_eq!(a.derived_dim, 2);
        assert_eq!(b.derived_dim, 2);
        let ca = a.adjoint_on_derived.unwrap();
        let cb = b.adjoint_on_derived.unwrap();
        assert_eq!(ca.min_poly_degree, 1);
        assert_eq!(cb.min_poly_degree, 2);
        assert!(ca.semisimple);
        assert!(!cb.semisimple);
    }

    #[test]
    fn signature_of_indefinite_form() {
        let m = QMat::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&m), (1, 1, 0));
        let d = QMat::from_int_rows(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]);
        assert_eq!(signature(&d), (1, 1, 1));
    }
}
