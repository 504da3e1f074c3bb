//! Ideals and the derived series of a Lie triple system.

use super::{LieTripleSystem, StructuresError};
use crate::linalg::{vec_ops, Subspace};

/// `true` iff `(S, M, M)` lies inside `S`, computed exactly.
pub fn is_ideal_lts(m: &LieTripleSystem, s: &Subspace) -> Result<bool, StructuresError> {
    if s.ambient() != m.dim {
        return Err(StructuresError::DimensionMismatch {
            subspace: s.ambient(),
            algebra: m.dim,
        });
    }
    let n = m.dim;
    for v in s.basis() {
        for i in 0..n {
            for j in 0..n {
                let t = m.triple_of(v, &vec_ops::basis_vec(n, i), &vec_ops::basis_vec(n, j));
                if !s.contains(&t) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Subspace spanned by `(M, A, B)` over basis vectors of the three factors.
pub fn triple_span(
    m: &LieTripleSystem,
    left: &Subspace,
    mid: &Subspace,
    right: &Subspace,
) -> Subspace {
    let mut rows = Vec::new();
    for x in left.basis() {
        for y in mid.basis() {
            for z in right.basis() {
                rows.push(m.triple_of(x, y, z));
            }
        }
    }
    Subspace::from_rows(m.dim, rows)
}

/// The descending series `S = O^(0) .. O^(k)` with
/// `O^(k) = (M, O^(k-1), O^(k-1))`, continued until it stabilizes.
///
/// Requires `S` to be an ideal of `M`; every member of the returned chain is
/// re-verified to be one. `M` is solvable iff the series started from `M`
/// itself reaches zero.
pub fn derived_series_lts(
    m: &LieTripleSystem,
    s: &Subspace,
) -> Result<Vec<Subspace>, StructuresError> {
    if !is_ideal_lts(m, s)? {
        return Err(StructuresError::NotAnIdeal(
            s.basis().first().cloned().unwrap_or_default(),
        ));
    }
    let full = Subspace::full(m.dim);
    let mut chain = vec![s.clone()];
    loop {
        let prev = chain.last().unwrap();
        if prev.is_zero() {
            break;
        }
        let next = triple_span(m, &full, prev, prev);
        debug_assert!(is_ideal_lts(m, &next).unwrap_or(false));
        if &next == prev {
            break; // stabilized above zero: not solvable along this chain
        }
        chain.push(next);
    }
    Ok(chain)
}

/// Solvability of the whole system: the derived series from `M` reaches zero.
pub fn is_solvable_lts(m: &LieTripleSystem) -> bool {
    let chain = derived_series_lts(m, &Subspace::full(m.dim)).expect("M is an ideal of itself");
    chain.last().map(Subspace::is_zero).unwrap_or(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;
    use crate::structures::StructureConstants3;

    #[test]
    fn abelian_series_is_m_then_zero() {
        let m = LieTripleSystem::abelian(3);
        let chain = derived_series_lts(&m, &Subspace::full(3)).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0], Subspace::full(3));
        assert!(chain[1].is_zero());
        assert!(is_solvable_lts(&m));
    }

    #[test]
    fn non_ideal_rejected() {
        // (e2,e3,e3)=e1: span(e2) is not an ideal since (e2,e3,e3)=e1 leaves it.
        let t = StructureConstants3::from_int_entries_antisym(3, &[(0, 1, 2, 2, 1)]);
        let m = LieTripleSystem::new(t);
        let s = Subspace::from_rows(3, vec![vec![qi(0), qi(1), qi(0)]]);
        assert!(!is_ideal_lts(&m, &s).unwrap());
        assert!(derived_series_lts(&m, &s).is_err());
    }
}
