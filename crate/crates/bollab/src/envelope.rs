//! Enveloping Lie algebras: the direct and inverse constructions tying Lie
//! triple systems and Bol algebras to pairs `G = B (+) h`, canonical
//! quotients, and radicals.

use serde::{Deserialize, Serialize};

use crate::linalg::{vec_ops, QMat, Subspace};
use crate::scalar::Scalar;
use crate::structures::{
    verify_lie, verify_lts, BolAlgebra, LieAlgebra, LieTripleSystem, StructureConstants2,
    StructureConstants3,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnvelopeError {
    #[error("input Lie triple system fails its axioms")]
    InvalidLts,
    #[error("input Lie algebra fails the Jacobi identity")]
    InvalidAlgebra,
    #[error("tangent part and subalgebra are not complementary in G")]
    NotComplementary,
    #[error("[[B,B],B] is not contained in B")]
    BolClosureViolated,
    #[error("h is not a subalgebra of G")]
    NotASubalgebra,
}

/// A Lie algebra `G` with a distinguished decomposition `G = B (+) h` and the
/// involution `sigma` that is `-Id` on `B` and `+Id` on `h`.
///
/// When the pair envelopes a Lie triple system the grading is strict
/// (`[B,B] in h`, `[h,B] in B`, `[h,h] in h`); a general Bol pair only
/// guarantees `[[B,B],B] in B` and that `h` is a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopePair {
    pub algebra: LieAlgebra,
    /// The tangent part `B` (the `-1` eigenspace of `sigma`).
    pub tangent: Subspace,
    /// The subalgebra `h` (the `+1` eigenspace of `sigma`).
    pub subalgebra: Subspace,
    pub sigma: QMat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl EnvelopePair {
    /// Assemble a pair, checking complementarity and that `h` is closed under
    /// the bracket. `sigma` is derived from the decomposition.
    pub fn new(
        algebra: LieAlgebra,
        tangent: Subspace,
        subalgebra: Subspace,
    ) -> Result<Self, EnvelopeError> {
        let n = algebra.dim;
        if tangent.ambient() != n
            || subalgebra.ambient() != n
            || tangent.dim() + subalgebra.dim() != n
            || !tangent.intersect(&subalgebra).is_zero()
        {
            return Err(EnvelopeError::NotComplementary);
        }
        for x in subalgebra.basis() {
            for y in subalgebra.basis() {
                if !subalgebra.contains(&algebra.bracket_of(x, y)) {
                    return Err(EnvelopeError::NotASubalgebra);
                }
            }
        }
        // sigma = P diag(-I, I) P^{-1} with P columns the B then h basis.
        let mut p = QMat::zero(n, n);
        for (j, v) in tangent.basis().iter().chain(subalgebra.basis().iter()).enumerate() {
            for i in 0..n {
                p[(i, j)] = v[i].clone();
            }
        }
        let p_inv = p.inverse().expect("complementary bases form an invertible matrix");
        let mut d = QMat::identity(n);
        for i in 0..tangent.dim() {
            d[(i, i)] = Scalar::from_int(-1);
        }
        let sigma = p.mul(&d).mul(&p_inv);
        Ok(EnvelopePair { algebra, tangent, subalgebra, sigma, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// Strict grading `[B,B] in h`, `[h,B] in B`, `[h,h] in h`.
    pub fn is_strictly_graded(&self) -> bool {
        let g = &self.algebra;
        let bb = bracket_span(g, &self.tangent, &self.tangent);
        let hb = bracket_span(g, &self.subalgebra, &self.tangent);
        let hh = bracket_span(g, &self.subalgebra, &self.subalgebra);
        self.subalgebra.contains_space(&bb)
            && self.tangent.contains_space(&hb)
            && self.subalgebra.contains_space(&hh)
    }

    /// The Bol closure condition `[[B,B],B] in B`.
    pub fn bol_closure_holds(&self) -> bool {
        let g = &self.algebra;
        for x in self.tangent.basis() {
            for y in self.tangent.basis() {
                let xy = g.bracket_of(x, y);
                for z in self.tangent.basis() {
                    if !self.tangent.contains(&g.bracket_of(&xy, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `sigma` is a Lie algebra automorphism: `sigma [x,y] = [sigma x, sigma y]`.
    pub fn sigma_is_automorphism(&self) -> bool {
        let n = self.dim();
        let g = &self.algebra;
        for i in 0..n {
            for j in i + 1..n {
                let e = |k| vec_ops::basis_vec(n, k);
                let lhs = self.sigma.mul_vec(&g.bracket_of(&e(i), &e(j)));
                let rhs = g.bracket_of(&self.sigma.mul_vec(&e(i)), &self.sigma.mul_vec(&e(j)));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the tangent part generates `G` as a Lie algebra. Canonical
    /// envelopes of honest Bol algebras do; user-supplied pairs may not, and
    /// the result is reported rather than treated as an error.
    pub fn tangent_generates(&self) -> bool {
        let g = &self.algebra;
        let mut s = self.tangent.clone();
        loop {
            let grown = s.sum(&bracket_span(g, &s, &s));
            if grown == s {
                break;
            }
            s = grown;
        }
        s.dim() == self.dim()
    }
}

/// Span of `[X, Y]` over basis vectors of the two subspaces.
pub fn bracket_span(g: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            rows.push(g.bracket_of(x, y));
        }
    }
    Subspace::from_rows(g.dim, rows)
}

/// Inner derivations `h(X,Y) : z -> (X,Y,z)` of a Lie triple system, spanned
/// as matrices.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub ambient_dim: usize,
    /// Row-reduced basis, each row a flattened `n x n` matrix.
    pub basis_flat: Subspace,
}

impl DerivationSpace {
    pub fn of(m: &LieTripleSystem) -> Self {
        let n = m.dim;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let h = m.triple.inner_map(
                    &vec_ops::basis_vec(n, i),
                    &vec_ops::basis_vec(n, j),
                );
                rows.push(flatten(&h));
            }
        }
        DerivationSpace { ambient_dim: n, basis_flat: Subspace::from_rows(n * n, rows) }
    }

    pub fn dim(&self) -> usize {
        self.basis_flat.dim()
    }

    pub fn basis_matrices(&self) -> Vec<QMat> {
        self.basis_flat
            .basis()
            .iter()
            .map(|row| unflatten(self.ambient_dim, row))
            .collect()
    }
}

fn flatten(m: &QMat) -> Vec<Scalar> {
    let n = m.rows();
    let mut v = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            v.push(m[(i, j)].clone());
        }
    }
    v
}

fn unflatten(n: usize, v: &[Scalar]) -> QMat {
    let mut m = QMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = v[i * n + j].clone();
        }
    }
    m
}

/// The standard (universal) embedding `G = M (+) H`, `H = span{h(X,Y)}`,
/// with brackets `[A,B] = AB - BA`, `[A,X] = A X`, `[X,Y] = h(X,Y)` and
/// `sigma = -Id` on `M`, `+Id` on `H`.
pub fn standard_embedding(m: &LieTripleSystem) -> Result<EnvelopePair, EnvelopeError> {
    if !verify_lts(m).is_valid() {
        return Err(EnvelopeError::InvalidLts);
    }
    let n = m.dim;
    let ders = DerivationSpace::of(m);
    let hmats = ders.basis_matrices();
    let hd = hmats.len();
    let dim = n + hd;

    // Coordinates of an n x n matrix in the H basis (None if outside).
    let coords_in_h = |mat: &QMat| -> Option<Vec<Scalar>> {
        let flat = flatten(mat);
        let mut sys = QMat::zero(n * n, hd);
        for (j, b) in ders.basis_flat.basis().iter().enumerate() {
            for i in 0..n * n {
                sys[(i, j)] = b[i].clone();
            }
        }
        sys.solve(&flat)
    };

    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    // [X, Y] = h(X, Y) for M basis vectors.
    for i in 0..n {
        for j in i + 1..n {
            let h = m.triple.inner_map(&vec_ops::basis_vec(n, i), &vec_ops::basis_vec(n, j));
            let coords = coords_in_h(&h).expect("h(X,Y) lies in its own span");
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    entries.push((n + k, i, j, c.clone()));
                }
            }
        }
    }
    // [A, X] = A X.
    for (a, mat) in hmats.iter().enumerate() {
        for x in 0..n {
            let img = mat.mul_vec(&vec_ops::basis_vec(n, x));
            for (k, c) in img.iter().enumerate() {
                if !c.is_zero() {
                    entries.push((k, n + a, x, c.clone()));
                }
            }
        }
    }
    // [A, B] = AB - BA, expressed in the H basis.
    for a in 0..hd {
        for b in a + 1..hd {
            let comm = hmats[a].mul(&hmats[b]).sub(&hmats[b].mul(&hmats[a]));
            let coords = coords_in_h(&comm).ok_or(EnvelopeError::InvalidLts)?;
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    entries.push((n + k, n + a, n + b, c.clone()));
                }
            }
        }
    }
    let bracket =
        StructureConstants2::from_entries(dim, &entries).map_err(|_| EnvelopeError::InvalidLts)?;
    let g = match &m.label {
        Some(l) => LieAlgebra::with_label(bracket, format!("envelope of {l}")),
        None => LieAlgebra::new(bracket),
    };
    debug_assert!(verify_lie(&g).is_valid());
    let tangent = Subspace::from_rows(dim, (0..n).map(|i| vec_ops::basis_vec(dim, i)).collect());
    let subalg =
        Subspace::from_rows(dim, (n..dim).map(|i| vec_ops::basis_vec(dim, i)).collect());
    EnvelopePair::new(g, tangent, subalg)
}

/// The largest ideal of `G` contained in `h`, by the fixed-point iteration
/// `I_0 = h`, `I_{k+1} = {x in I_k : [G, x] in I_k}`.
pub fn maximal_ideal_in_h(p: &EnvelopePair) -> Subspace {
    let g = &p.algebra;
    let n = p.dim();
    let mut current = p.subalgebra.clone();
    loop {
        // x in current with [e_i, x] in current for all i.
        // Constraints: Proj_{complement of current}([e_i, x]) = 0.
        let d = current.dim();
        if d == 0 {
            return current;
        }
        // Build the map x -> stacked residues of [e_i, x] modulo current.
        // Residue: reduce against current's RREF basis, as in Subspace::contains.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        // x = sum_j c_j v_j over current's basis; unknowns c.
        for i in 0..n {
            // column j: residue of [e_i, v_j]
            let cols: Vec<Vec<Scalar>> = current
                .basis()
                .iter()
                .map(|v| reduce_mod(&current, &g.bracket_of(&vec_ops::basis_vec(n, i), v)))
                .collect();
            for r in 0..n {
                rows.push((0..d).map(|j| cols[j][r].clone()).collect());
            }
        }
        let kernel = QMat::from_rows(rows).kernel();
        let next = Subspace::from_rows(
            n,
            kernel
                .into_iter()
                .map(|c| {
                    let mut v = vec_ops::zeros(n);
                    for (j, b) in current.basis().iter().enumerate() {
                        vec_ops::axpy(&mut v, &c[j], b);
                    }
                    v
                })
                .collect(),
        );
        if next == current {
            return current;
        }
        current = next;
    }
}

fn reduce_mod(space: &Subspace, v: &[Scalar]) -> Vec<Scalar> {
    let mut v = v.to_vec();
    for row in space.basis() {
        let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
        if !v[pivot].is_zero() {
            let f = v[pivot].clone();
            for j in 0..v.len() {
                let t = &v[j] - &(&f * &row[j]);
                v[j] = t;
            }
        }
    }
    v
}

/// Quotient `G` by the maximal ideal of `G` inside `h`, returning the induced
/// pair. The result contains no nonzero ideal of the quotient inside its `h`,
/// and the operation is idempotent.
pub fn canonical_envelope(p: &EnvelopePair) -> EnvelopePair {
    let ideal = maximal_ideal_in_h(p);
    if ideal.is_zero() {
        return p.clone();
    }
    let g = &p.algebra;
    let n = p.dim();
    // Representatives: B basis, then h basis vectors independent mod the ideal.
    let mut reps: Vec<Vec<Scalar>> = p.tangent.basis().to_vec();
    let mut h_rep_count = 0usize;
    let mut seen = ideal.clone();
    for v in p.subalgebra.basis() {
        if !seen.contains(v) {
            reps.push(v.clone());
            h_rep_count += 1;
            seen = seen.sum(&Subspace::from_rows(n, vec![v.clone()]));
        }
    }
    let q = reps.len();
    debug_assert_eq!(q + ideal.dim(), n);
    // Solve [reps | ideal] coords for each bracket, keep the reps part.
    let mut basis_mat = QMat::zero(n, n);
    for (j, v) in reps.iter().chain(ideal.basis().iter()).enumerate() {
        for i in 0..n {
            basis_mat[(i, j)] = v[i].clone();
        }
    }
    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            let br = g.bracket_of(&reps[i], &reps[j]);
            let coords = basis_mat.solve(&br).expect("full basis");
            for (k, c) in coords.iter().take(q).enumerate() {
                if !c.is_zero() {
                    entries.push((k, i, j, c.clone()));
                }
            }
        }
    }
    let bracket = StructureConstants2::from_entries(q, &entries).expect("quotient brackets");
    let quotient = LieAlgebra { dim: q, bracket, label: p.algebra.label.clone() };
    let bt = p.tangent.dim();
    let tangent = Subspace::from_rows(q, (0..bt).map(|i| vec_ops::basis_vec(q, i)).collect());
    let sub = Subspace::from_rows(
        q,
        (bt..bt + h_rep_count).map(|i| vec_ops::basis_vec(q, i)).collect(),
    );
    let mut out = EnvelopePair::new(quotient, tangent, sub)
        .expect("quotient of a valid pair is a valid pair");
    out.label = p.label.clone();
    out
}

/// Read off the Bol algebra carried by a pair: `x . y` is the projection of
/// `[x, y]` onto `B` along `h`, and `(x, y, z) = [[x, y], z]`.
pub fn bol_from_pair(p: &EnvelopePair) -> Result<BolAlgebra, EnvelopeError> {
    let g = &p.algebra;
    let n = p.dim();
    let b_dim = p.tangent.dim();
    if p.tangent.dim() + p.subalgebra.dim() != n
        || !p.tangent.intersect(&p.subalgebra).is_zero()
    {
        return Err(EnvelopeError::NotComplementary);
    }
    if !p.bol_closure_holds() {
        return Err(EnvelopeError::BolClosureViolated);
    }
    // Coordinates in the (B, h) basis; the B block gives both projection and
    // B coordinates.
    let mut basis_mat = QMat::zero(n, n);
    for (j, v) in p.tangent.basis().iter().chain(p.subalgebra.basis().iter()).enumerate() {
        for i in 0..n {
            basis_mat[(i, j)] = v[i].clone();
        }
    }
    let binv = basis_mat.inverse().expect("complementary bases");
    let b_coords = |v: &[Scalar]| -> Vec<Scalar> {
        binv.mul_vec(v).into_iter().take(b_dim).collect()
    };
    let bb = p.tangent.basis();
    let mut dot_entries = Vec::new();
    let mut triple_entries = Vec::new();
    for i in 0..b_dim {
        for j in i + 1..b_dim {
            let br = g.bracket_of(&bb[i], &bb[j]);
            for (k, c) in b_coords(&br).into_iter().enumerate() {
                if !c.is_zero() {
                    dot_entries.push((k, i, j, c));
                }
            }
        }
    }
    for i in 0..b_dim {
        for j in 0..b_dim {
            let br = g.bracket_of(&bb[i], &bb[j]);
            for k in 0..b_dim {
                let t = g.bracket_of(&br, &bb[k]);
                debug_assert!(p.tangent.contains(&t));
                for (l, c) in b_coords(&t).into_iter().enumerate() {
                    if !c.is_zero() {
                        triple_entries.push((l, i, j, k, c));
                    }
                }
            }
        }
    }
    let dot = StructureConstants2::from_entries(b_dim, &dot_entries)
        .map_err(|_| EnvelopeError::NotComplementary)?;
    let triple = StructureConstants3::from_entries(b_dim, &triple_entries)
        .map_err(|_| EnvelopeError::NotComplementary)?;
    Ok(BolAlgebra { dim: b_dim, dot, triple, label: p.label.clone() })
}

/// Solvable radical of a Lie algebra by the Killing-form criterion
/// `r = {x : kappa(x, [L, L]) = 0}` (characteristic zero).
pub fn radical_lie(l: &LieAlgebra) -> Result<Subspace, EnvelopeError> {
    if !verify_lie(l).is_valid() {
        return Err(EnvelopeError::InvalidAlgebra);
    }
    let n = l.dim;
    let ad = |v: &[Scalar]| l.bracket.left_mult_matrix(v);
    let derived = bracket_span(l, &Subspace::full(n), &Subspace::full(n));
    let mut rows = Vec::new();
    for d in derived.basis() {
        let ad_d = ad(d);
        // row_i = kappa(e_i, d)
        let row: Vec<Scalar> = (0..n)
            .map(|i| ad(&vec_ops::basis_vec(n, i)).mul(&ad_d).trace())
            .collect();
        rows.push(row);
    }
    let radical = if rows.is_empty() {
        Subspace::full(n)
    } else {
        Subspace::from_rows(n, QMat::from_rows(rows).kernel())
    };
    debug_assert!(lie_subspace_solvable(l, &radical));
    Ok(radical)
}

/// Derived series check that a bracket-closed subspace is solvable.
pub fn lie_subspace_solvable(l: &LieAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    loop {
        let next = bracket_span_sub(l, &cur);
        if next.is_zero() {
            return true;
        }
        if next == cur {
            return false;
        }
        cur = next;
    }
}

fn bracket_span_sub(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for (i, x) in s.basis().iter().enumerate() {
        for y in s.basis().iter().skip(i + 1) {
            rows.push(l.bracket_of(x, y));
        }
    }
    Subspace::from_rows(l.dim, rows)
}

/// Radical of a Lie triple system: embed, take the Lie radical, and intersect
/// with the image of `M` (Levi-style decomposition restricted to `M`).
pub fn lts_radical(m: &LieTripleSystem) -> Result<Subspace, EnvelopeError> {
    let pair = standard_embedding(m)?;
    let rad = radical_lie(&pair.algebra)?;
    let n = m.dim;
    let dim = pair.dim();
    let m_image =
        Subspace::from_rows(dim, (0..n).map(|i| vec_ops::basis_vec(dim, i)).collect());
    let inter = rad.intersect(&m_image);
    // Drop the zero tail coordinates to land back in Q^n.
    let rows = inter
        .basis()
        .iter()
        .map(|v| v.iter().take(n).cloned().collect())
        .collect();
    Ok(Subspace::from_rows(n, rows))
}

/// JSON form of an envelope pair: the Lie algebra tensor plus `B_basis`,
/// `h_basis`, and `sigma`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnvelopePairJson {
    pub dim: usize,
    pub bilinear: Vec<(usize, usize, usize, Scalar)>,
    pub b_basis: Vec<Vec<Scalar>>,
    pub h_basis: Vec<Vec<Scalar>>,
    pub sigma: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl EnvelopePairJson {
    pub fn from_pair(p: &EnvelopePair) -> Self {
        let n = p.dim();
        EnvelopePairJson {
            dim: n,
            bilinear: p.algebra.bracket.entries(),
            b_basis: p.tangent.basis().to_vec(),
            h_basis: p.subalgebra.basis().to_vec(),
            sigma: (0..n).map(|i| p.sigma.row_vec(i)).collect(),
            label: p.label.clone(),
        }
    }

    pub fn to_pair(&self) -> Result<EnvelopePair, EnvelopeError> {
        let bracket = StructureConstants2::from_entries(self.dim, &self.bilinear)
            .map_err(|_| EnvelopeError::InvalidAlgebra)?;
        let mut pair = EnvelopePair::new(
            LieAlgebra::new(bracket),
            Subspace::from_rows(self.dim, self.b_basis.clone()),
            Subspace::from_rows(self.dim, self.h_basis.clone()),
        )?;
        pair.label = self.label.clone();
        Ok(pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::StructureConstants3;

    /// Type II triple: (e2,e3,e3) = e1.
    fn lts_type2() -> LieTripleSystem {
        LieTripleSystem::new(StructureConstants3::from_int_entries_antisym(
            3,
            &[(0, 1, 2, 2, 1)],
        ))
    }

    #[test]
    fn abelian_embedding_has_no_h() {
        let pair = standard_embedding(&LieTripleSystem::abelian(3)).unwrap();
        assert_eq!(pair.dim(), 3);
        assert!(pair.subalgebra.is_zero());
        assert!(pair.algebra.bracket.is_zero());
    }

    #[test]
    fn type2_embedding_matches_printed_relations() {
        let pair = standard_embedding(&lts_type2()).unwrap();
        assert_eq!(pair.dim(), 4);
        assert!(verify_lie(&pair.algebra).is_valid());
        assert!(pair.is_strictly_graded());
        assert!(pair.sigma_is_automorphism());
        // [e2,e3] = e4, [e3,e4] = -e1 (0-indexed: [1,2] = e3', [2,3] = -e0).
        let e = |i| vec_ops::basis_vec(4, i);
        assert_eq!(pair.algebra.bracket_of(&e(1), &e(2)), e(3));
        assert_eq!(
            pair.algebra.bracket_of(&e(2), &e(3)),
            vec![Scalar::from_int(-1), Scalar::zero(), Scalar::zero(), Scalar::zero()]
        );
    }

    #[test]
    fn round_trip_recovers_triple_with_zero_dot() {
        let m = lts_type2();
        let pair = standard_embedding(&m).unwrap();
        let bol = bol_from_pair(&pair).unwrap();
        assert!(bol.dot.is_zero());
        assert_eq!(bol.triple, m.triple);
    }

    #[test]
    fn radical_of_solvable_is_everything() {
        let pair = standard_embedding(&lts_type2()).unwrap();
        let rad = radical_lie(&pair.algebra).unwrap();
        assert_eq!(rad.dim(), 4);
        let mrad = lts_radical(&lts_type2()).unwrap();
        assert_eq!(mrad.dim(), 3);
    }
}
