//! Classification of low-dimensional Lie triple systems and Bol algebras:
//! canonical tensors, exact normalizing basis changes, isocline algebras,
//! and isomorphism/isotopy verdicts with verified witnesses.
//!
//! The three-dimensional solvable classifier follows the case analysis on
//! `dim (M,M,M)` with one correction the exact computations force: when all
//! triples lie in a line, the skew form `Phi(x,y)` defined by
//! `(x,y,w) = Phi(x,y) w` vanishes identically for every valid system, and
//! the symmetric form `a(x,y)` on `M/M'` given by `(w,x,y) = a(x,y) w` is
//! singular. Consequently the tensors tabulated for Types IV and VII are not
//! Lie triple systems as printed: Type IV requires one sign repair (after
//! which it is isomorphic to Type III of the same sign), and no repair of
//! Type VII exists inside the solvable class. `classify_lts3` therefore
//! never returns `IV` or `VII`; inputs isomorphic to the repaired Type IV
//! tensor classify as `III`, and the vacated branches report
//! `Unclassifiable` as a proof-coverage signal.

use serde::{Deserialize, Serialize};

use crate::envelope::EnvelopePair;
use crate::linalg::{vec_ops, QMat, Subspace};
use crate::sample::{self, Sampler};
use crate::scalar::Scalar;
use crate::structures::{
    invariants, is_solvable_lts, verify_lts, BolAlgebra, InvariantVector, LieTripleSystem,
    StructureConstants2, StructureConstants3,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("classification requires dimension 3, got {0}")]
    NotDim3(usize),
    #[error("input Lie triple system is not solvable")]
    NotSolvable,
    #[error("input fails the Lie triple system axioms")]
    InvalidLts,
    #[error("unclassifiable: {0}")]
    Unclassifiable(String),
    #[error("algebras have different dimensions")]
    DimensionMismatch,
    #[error("no symmetric form reproduces the trilinear operation")]
    NotBetaForm,
    #[error("malformed isotopy witness: {0}")]
    MalformedWitness(String),
}

/// Sign tag of the classified families: `Minus` tags the hyperbolic branch
/// (quadratic invariant `+1`, cosh/sinh loop laws), `Plus` the trigonometric
/// one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    /// The quadratic invariant carried by this tag: `+1` for `Minus`,
    /// `-1` for `Plus`.
    pub fn invariant(self) -> Scalar {
        match self {
            Sign::Minus => Scalar::one(),
            Sign::Plus => Scalar::from_int(-1),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        }
    }
}

/// Isomorphism type of a 3-dimensional solvable Lie triple system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lts3Type {
    I,
    II,
    III(Sign),
    IV(Sign),
    V(Sign),
    VI,
    VII,
}

impl std::fmt::Display for Lts3Type {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Lts3Type::I => write!(f, "Type I"),
            Lts3Type::II => write!(f, "Type II"),
            Lts3Type::III(s) => write!(f, "Type III{}", s.symbol()),
            Lts3Type::IV(s) => write!(f, "Type IV{}", s.symbol()),
            Lts3Type::V(s) => write!(f, "Type V{}", s.symbol()),
            Lts3Type::VI => write!(f, "Type VI"),
            Lts3Type::VII => write!(f, "Type VII"),
        }
    }
}

fn sign_i64(s: Sign) -> i64 {
    match s {
        Sign::Minus => 1,
        Sign::Plus => -1,
    }
}

/// The canonical structure tensor shipped for each type tag.
///
/// `IV` carries a single sign repair (the last entry of the operator
/// `(e3,e1,-)` is negated relative to the printed table) without which the
/// tensor fails the inner-derivation law; the repaired tensor is isomorphic
/// to `III` of the same sign via the kernel basis of its `a`-form. `VII` is
/// shipped exactly as printed and does not satisfy the axioms; see the
/// module docs.
pub fn canonical_lts3(tag: Lts3Type) -> LieTripleSystem {
    let t = |entries: &[(usize, usize, usize, usize, i64)]| {
        StructureConstants3::from_int_entries_antisym(3, entries)
    };
    let triple = match tag {
        Lts3Type::I => StructureConstants3::zero(3),
        Lts3Type::II => t(&[(0, 1, 2, 2, 1)]),
        Lts3Type::III(s) => t(&[(0, 0, 1, 1, sign_i64(s))]),
        Lts3Type::IV(s) => t(&[
            (0, 0, 1, 1, sign_i64(s)),
            (0, 0, 1, 2, 1),
            (0, 2, 0, 1, -1),
            (0, 2, 0, 2, -sign_i64(s)),
        ]),
        Lts3Type::V(s) => t(&[(0, 1, 2, 1, 1), (1, 1, 2, 2, sign_i64(s))]),
        Lts3Type::VI => t(&[(0, 1, 2, 2, 1), (1, 2, 0, 2, 1)]),
        Lts3Type::VII => t(&[(0, 1, 2, 0, 1), (0, 2, 0, 1, -1)]),
    };
    LieTripleSystem::with_label(triple, format!("canonical {tag}"))
}

/// Result of classifying a 3-dimensional solvable Lie triple system.
#[derive(Debug, Clone)]
pub struct Lts3Classification {
    pub tag: Lts3Type,
    /// Basis change `P` with `m.triple.conjugate(P) == canonical_lts3(tag)`,
    /// available whenever the input lies in the rational orbit of the
    /// canonical tensor (always the case for conjugated catalog tensors).
    /// `None` for members of the same coarse family outside that orbit,
    /// e.g. the Bianchi-derived systems whose quotient action is invertible
    /// but not a rotation.
    pub normalizer: Option<QMat>,
}

/// Classify a 3-dimensional solvable Lie triple system.
pub fn classify_lts3(m: &LieTripleSystem) -> Result<Lts3Classification, ClassifyError> {
    if m.dim != 3 {
        return Err(ClassifyError::NotDim3(m.dim));
    }
    if !verify_lts(m).is_valid() {
        return Err(ClassifyError::InvalidLts);
    }
    if !is_solvable_lts(m) {
        return Err(ClassifyError::NotSolvable);
    }
    let e = |i| vec_ops::basis_vec(3, i);
    let mut rows = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                rows.push(m.triple_of(&e(i), &e(j), &e(k)));
            }
        }
    }
    let derived = Subspace::from_rows(3, rows);
    match derived.dim() {
        0 => Ok(Lts3Classification { tag: Lts3Type::I, normalizer: Some(QMat::identity(3)) }),
        1 => classify_dim1(m, &derived),
        2 => classify_dim2(m, &derived),
        _ => Err(ClassifyError::NotSolvable),
    }
}

fn classify_dim1(
    m: &LieTripleSystem,
    derived: &Subspace,
) -> Result<Lts3Classification, ClassifyError> {
    let w = derived.basis()[0].clone();
    let comp = derived.complement_coords();
    let (u1, u2) = (vec_ops::basis_vec(3, comp[0]), vec_ops::basis_vec(3, comp[1]));
    let coef = |v: &[Scalar]| -> Result<Scalar, ClassifyError> {
        let c = derived
            .coords_of(v)
            .ok_or_else(|| ClassifyError::Unclassifiable("triple outside M'".into()))?;
        Ok(c[0].clone())
    };
    // Skew form Phi from (x,y,w) = Phi(x,y) w; provably zero for valid
    // solvable systems, so a nonzero value signals a coverage bug.
    for (x, y) in [(&u1, &u2), (&u1, &w), (&u2, &w)] {
        if !vec_ops::is_zero(&m.triple_of(x, y, &w)) {
            return Err(ClassifyError::Unclassifiable(
                "nonzero skew form Phi with 1-dimensional triple span (the \
                 shape of the printed Type VII tensor, which no solvable Lie \
                 triple system realizes)"
                    .into(),
            ));
        }
    }
    // Symmetric form a on the complement: (w, u_i, u_j) = a_ij w.
    let a11 = coef(&m.triple_of(&w, &u1, &u1))?;
    let a12 = coef(&m.triple_of(&w, &u1, &u2))?;
    let a21 = coef(&m.triple_of(&w, &u2, &u1))?;
    let a22 = coef(&m.triple_of(&w, &u2, &u2))?;
    if a12 != a21 {
        return Err(ClassifyError::Unclassifiable("a-form not symmetric".into()));
    }
    let det = &a11 * &a22 - &a12 * &a12;
    if !det.is_zero() {
        return Err(ClassifyError::Unclassifiable(
            "nonsingular a-form with 1-dimensional triple span (the shape of \
             the printed Type IV tensor, which fails the derivation law; the \
             repaired Type IV has rank one and classifies as Type III)"
                .into(),
        ));
    }
    if a11.is_zero() && a12.is_zero() && a22.is_zero() {
        // Type II: normalize from the functional l(z) with (u1,u2,z) = l(z) w.
        let l1 = coef(&m.triple_of(&u1, &u2, &u1))?;
        let l2 = coef(&m.triple_of(&u1, &u2, &u2))?;
        let (e3v, e2v, lval) = if !l2.is_zero() {
            (u2.clone(), vec_ops::sub(&vec_ops::scale(&u1, &l2), &vec_ops::scale(&u2, &l1)), l2)
        } else if !l1.is_zero() {
            (u1.clone(), vec_ops::sub(&vec_ops::scale(&u2, &l1), &vec_ops::scale(&u1, &l2)), l1)
        } else {
            return Err(ClassifyError::Unclassifiable("empty tensor in dim-1 branch".into()));
        };
        let theta = wedge_coeff(&e2v, &e3v, &u1, &u2);
        let e1v = vec_ops::scale(&w, &(&theta * &lval));
        return finish(m, Lts3Type::II, [e1v, e2v, e3v]);
    }
    // Rank-one symmetric a: a(x,x) = d * (linear form)^2.
    let (d, rep, ker) = if !a11.is_zero() {
        (
            a11.clone(),
            u1.clone(),
            vec_ops::sub(&vec_ops::scale(&u1, &a12), &vec_ops::scale(&u2, &a11)),
        )
    } else if !a22.is_zero() {
        (
            a22.clone(),
            u2.clone(),
            vec_ops::sub(&vec_ops::scale(&u2, &a12), &vec_ops::scale(&u1, &a22)),
        )
    } else {
        return Err(ClassifyError::Unclassifiable(
            "rank-one a-form with zero diagonal cannot occur".into(),
        ));
    };
    let sign = if d.is_positive() { Sign::Minus } else { Sign::Plus };
    let Some(r) = (&d / &sign.invariant()).sqrt_exact() else {
        // Same real family, but the square class of d is not +-1, so no
        // rational basis change reaches the canonical tensor.
        return Ok(Lts3Classification { tag: Lts3Type::III(sign), normalizer: None });
    };
    let e2v = vec_ops::scale(&rep, &r.recip());
    let mut e3v = ker;
    // Kill the residual (E2,E3,E2) component by shifting E3 along w.
    let kappa = coef(&m.triple_of(&e2v, &e3v, &e2v))?;
    if !kappa.is_zero() {
        e3v = vec_ops::add(&e3v, &vec_ops::scale(&w, &(&kappa / &sign.invariant())));
    }
    finish(m, Lts3Type::III(sign), [w, e2v, e3v])
}

fn classify_dim2(
    m: &LieTripleSystem,
    derived: &Subspace,
) -> Result<Lts3Classification, ClassifyError> {
    let comp = derived.complement_coords();
    let u = vec_ops::basis_vec(3, comp[0]);
    // The quotient action is well-defined only when M' is abelian in the
    // first two slots.
    for x in derived.basis() {
        for y in derived.basis() {
            for k in 0..3 {
                if !vec_ops::is_zero(&m.triple_of(x, y, &vec_ops::basis_vec(3, k))) {
                    return Err(ClassifyError::Unclassifiable(
                        "(M', M', -) nonzero in the 2-dimensional branch".into(),
                    ));
                }
            }
        }
    }
    // K(x) = (x, u, u) restricted to M'.
    let b = derived.basis();
    let mut k = QMat::zero(2, 2);
    for (j, v) in b.iter().enumerate() {
        let img = derived
            .coords_of(&m.triple_of(v, &u, &u))
            .ok_or_else(|| ClassifyError::Unclassifiable("K image outside M'".into()))?;
        for i in 0..2 {
            k[(i, j)] = img[i].clone();
        }
    }
    let tr = k.trace();
    let det = k.det();
    match k.rank() {
        1 => {
            if tr.is_zero() {
                return Err(ClassifyError::Unclassifiable(
                    "nilpotent rank-one quotient action".into(),
                ));
            }
            let sign = if tr.is_positive() { Sign::Minus } else { Sign::Plus };
            let Some(t) = (&tr / &sign.invariant()).sqrt_exact() else {
                return Ok(Lts3Classification { tag: Lts3Type::V(sign), normalizer: None });
            };
            let u_scaled = vec_ops::scale(&u, &t.recip());
            let eig = eigenvector_2x2(&k, &tr, derived)
                .ok_or_else(|| ClassifyError::Unclassifiable("missing eigenvector".into()))?;
            let e1v = m.triple_of(&eig, &u_scaled, &eig);
            if vec_ops::is_zero(&e1v) {
                return Err(ClassifyError::Unclassifiable("(E2,E3,E2) vanished".into()));
            }
            finish(m, Lts3Type::V(sign), [e1v, eig, u_scaled])
        }
        2 => {
            // Any invertible quotient action sits in the coarse Type VI
            // bucket; only the trace-free rotation orbit of the canonical
            // tensor admits an exact rational normalizer.
            if !tr.is_zero() || det.is_negative() {
                return Ok(Lts3Classification { tag: Lts3Type::VI, normalizer: None });
            }
            let Some(t2) = det.sqrt_exact().and_then(|s| s.sqrt_exact()) else {
                return Ok(Lts3Classification { tag: Lts3Type::VI, normalizer: None });
            };
            let u_scaled = vec_ops::scale(&u, &t2.recip());
            // K' = K / t2^2 squares to -Id; take the basis (K'v, v).
            let v0 = b[0].clone();
            let kv0 = vec_ops::scale(&m.triple_of(&v0, &u, &u), &(&t2 * &t2).recip());
            finish(m, Lts3Type::VI, [kv0, v0, u_scaled])
        }
        _ => Err(ClassifyError::Unclassifiable("zero quotient action".into())),
    }
}

fn eigenvector_2x2(k: &QMat, lambda: &Scalar, space: &Subspace) -> Option<Vec<Scalar>> {
    let mut shifted = k.clone();
    shifted[(0, 0)] = &shifted[(0, 0)] - lambda;
    shifted[(1, 1)] = &shifted[(1, 1)] - lambda;
    let kernel = shifted.kernel();
    let c = kernel.first()?;
    let mut v = vec_ops::zeros(space.ambient());
    for (j, bvec) in space.basis().iter().enumerate() {
        vec_ops::axpy(&mut v, &c[j], bvec);
    }
    Some(v)
}

fn wedge_coeff(x: &[Scalar], y: &[Scalar], u1: &[Scalar], u2: &[Scalar]) -> Scalar {
    let p1 = u1.iter().position(|c| c.is_one()).unwrap();
    let p2 = u2.iter().position(|c| c.is_one()).unwrap();
    &x[p1] * &y[p2] - &x[p2] * &y[p1]
}

fn finish(
    m: &LieTripleSystem,
    tag: Lts3Type,
    basis: [Vec<Scalar>; 3],
) -> Result<Lts3Classification, ClassifyError> {
    let mut p = QMat::zero(3, 3);
    for (j, v) in basis.iter().enumerate() {
        for i in 0..3 {
            p[(i, j)] = v[i].clone();
        }
    }
    if p.det().is_zero() {
        return Err(ClassifyError::Unclassifiable("degenerate normalizing basis".into()));
    }
    if m.triple.conjugate(&p) == canonical_lts3(tag).triple {
        Ok(Lts3Classification { tag, normalizer: Some(p) })
    } else {
        Ok(Lts3Classification { tag, normalizer: None })
    }
}

/// The five 2-dimensional cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lts2Case {
    Spherical,
    Lobachevski,
    NonCompactH,
    SolvableA,
    SolvableB,
    Abelian,
}

/// Which formula relates the 2-dimensional trilinear operation to the
/// symmetric form; the source tables disagree between sections and both readings are
/// supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BetaReading {
    /// `(x,y,z) = beta(x,z) y - beta(y,z) x`, consistent with the isocline
    /// formulas (the default).
    #[default]
    FirstThird,
    /// `(x,y,z) = beta(x,y) y - beta(y,z) x` as printed in the 2-dimensional
    /// section.
    AsPrinted,
}

#[derive(Debug, Clone)]
pub struct Lts2Form {
    pub case: Lts2Case,
    /// Diagonal of the congruence-normalized form, entries in {-1, 0, 1}.
    pub beta_diag: [i32; 2],
    /// Congruence transform making `P^T beta P` diagonal with the recorded
    /// sign pattern.
    pub transform: QMat,
}

/// Normalize a 2-dimensional Lie triple system expressible through a
/// symmetric form.
pub fn normalize_lts2(
    m: &LieTripleSystem,
    reading: BetaReading,
) -> Result<Lts2Form, ClassifyError> {
    if m.dim != 2 {
        return Err(ClassifyError::NotDim3(m.dim));
    }
    if !verify_lts(m).is_valid() {
        return Err(ClassifyError::InvalidLts);
    }
    let e = |i| vec_ops::basis_vec(2, i);
    let t121 = m.triple_of(&e(0), &e(1), &e(0));
    let t122 = m.triple_of(&e(0), &e(1), &e(1));
    let (b11, b12, b22) = match reading {
        BetaReading::FirstThird => {
            // (e1,e2,e1) = b11 e2 - b12 e1; (e1,e2,e2) = b12 e2 - b22 e1.
            let b12a = -&t121[0];
            if b12a != t122[1] {
                return Err(ClassifyError::NotBetaForm);
            }
            (t121[1].clone(), b12a, -&t122[0])
        }
        BetaReading::AsPrinted => {
            // (e1,e2,e1) = b12 e2 - b12 e1; (e1,e2,e2) = b12 e2 - b22 e1.
            let b12a = t121[1].clone();
            if b12a != -&t121[0] || b12a != t122[1] {
                return Err(ClassifyError::NotBetaForm);
            }
            (b12a.clone(), b12a, -&t122[0])
        }
    };
    let mut beta = QMat::zero(2, 2);
    beta[(0, 0)] = b11;
    beta[(0, 1)] = b12.clone();
    beta[(1, 0)] = b12;
    beta[(1, 1)] = b22;
    let form = |x: &[Scalar], z: &[Scalar]| -> Scalar {
        beta.mul_vec(z).iter().zip(x).map(|(a, b)| a * b).sum()
    };
    let model = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| -> Vec<Scalar> {
        let first = match reading {
            BetaReading::FirstThird => form(x, z),
            BetaReading::AsPrinted => form(x, y),
        };
        vec_ops::sub(&vec_ops::scale(y, &first), &vec_ops::scale(x, &form(y, z)))
    };
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                if m.triple_of(&e(i), &e(j), &e(k)) != model(&e(i), &e(j), &e(k)) {
                    return Err(ClassifyError::NotBetaForm);
                }
            }
        }
    }
    let (p, d1, d2) = diagonalize_congruence_2x2(&beta);
    let (case, diag) = match (d1.signum(), d2.signum()) {
        (1, 1) => (Lts2Case::Spherical, [1, 1]),
        (-1, -1) => (Lts2Case::Lobachevski, [-1, -1]),
        (1, -1) | (-1, 1) => (Lts2Case::NonCompactH, [1, -1]),
        (1, 0) | (0, 1) => (Lts2Case::SolvableA, [1, 0]),
        (-1, 0) | (0, -1) => (Lts2Case::SolvableB, [-1, 0]),
        _ => (Lts2Case::Abelian, [0, 0]),
    };
    Ok(Lts2Form { case, beta_diag: diag, transform: p })
}

fn diagonalize_congruence_2x2(beta: &QMat) -> (QMat, Scalar, Scalar) {
    let mut p = QMat::identity(2);
    let mut b = beta.clone();
    if b[(0, 0)].is_zero() && !b[(1, 1)].is_zero() {
        p = QMat::from_int_rows(&[&[0, 1], &[1, 0]]);
        b = p.transpose().mul(&beta.mul(&p));
    } else if b[(0, 0)].is_zero() && !b[(0, 1)].is_zero() {
        p = QMat::from_int_rows(&[&[1, 0], &[1, 1]]);
        b = p.transpose().mul(&beta.mul(&p));
    }
    if !b[(0, 0)].is_zero() && !b[(0, 1)].is_zero() {
        let mut q = QMat::identity(2);
        q[(0, 1)] = -&(&b[(0, 1)] / &b[(0, 0)]);
        p = p.mul(&q);
        b = q.transpose().mul(&b.mul(&q));
    }
    let mut q = QMat::identity(2);
    for i in 0..2 {
        let d = b[(i, i)].clone();
        if d.is_zero() {
            continue;
        }
        if let Some(r) = d.abs().sqrt_exact() {
            q[(i, i)] = r.recip();
        }
    }
    p = p.mul(&q);
    b = q.transpose().mul(&b.mul(&q));
    (p, b[(0, 0)].clone(), b[(1, 1)].clone())
}

/// Isocline Bol algebra from a linear form `alpha` and symmetric bilinear
/// form `beta`:
/// `x . y = alpha(x) y - alpha(y) x`,
/// `<x,y,z> = beta(x,z) y - beta(y,z) x`, stored triple
/// `(x,y,z) = (x.y).z - 2<x,y,z>`.
pub fn isocline_bol(alpha: &[Scalar], beta: &QMat) -> BolAlgebra {
    let n = alpha.len();
    assert!(beta.is_square() && beta.rows() == n);
    assert_eq!(beta, &beta.transpose(), "beta must be symmetric");
    let e = |i| vec_ops::basis_vec(n, i);
    let dot_val = |x: &[Scalar], y: &[Scalar]| {
        let ax: Scalar = alpha.iter().zip(x).map(|(a, b)| a * b).sum();
        let ay: Scalar = alpha.iter().zip(y).map(|(a, b)| a * b).sum();
        vec_ops::sub(&vec_ops::scale(y, &ax), &vec_ops::scale(x, &ay))
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
    let dot = StructureConstants2::from_entries(n, &dot_entries).expect("isocline dot");
    let angle = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| {
        let bz = beta.mul_vec(z);
        let bxz: Scalar = bz.iter().zip(x).map(|(a, b)| a * b).sum();
        let byz: Scalar = bz.iter().zip(y).map(|(a, b)| a * b).sum();
        vec_ops::sub(&vec_ops::scale(y, &bxz), &vec_ops::scale(x, &byz))
    };
    let two = Scalar::from_int(2);
    let mut triple_entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xy_z = dot.eval(&dot.eval(&e(i), &e(j)), &e(k));
                let ang = angle(&e(i), &e(j), &e(k));
                for l in 0..n {
                    let c = &xy_z[l] - &(&two * &ang[l]);
                    if !c.is_zero() {
                        triple_entries.push((l, i, j, k, c));
                    }
                }
            }
        }
    }
    let triple =
        StructureConstants3::from_entries(n, &triple_entries).expect("isocline triple");
    BolAlgebra::new(dot, triple)
}

/// Sample random rational planes and test each for closure under dot and
/// triple. Isocline algebras satisfy this for every plane.
pub fn plane_axiom_check(b: &BolAlgebra, trials: usize, rng: &mut Sampler) -> bool {
    assert!(b.dim >= 2);
    for _ in 0..trials {
        let plane = sample::subspace(rng, b.dim, 2, 3);
        let p = plane.basis()[0].clone();
        let q = plane.basis()[1].clone();
        let closed = plane.contains(&b.dot_of(&p, &q))
            && plane.contains(&b.triple_of(&p, &q, &p))
            && plane.contains(&b.triple_of(&p, &q, &q));
        if !closed {
            return false;
        }
    }
    true
}

/// How a pair of Bol algebras was told apart or matched.
#[derive(Debug, Clone)]
pub enum Verdict {
    /// Invariant vectors differ; the algebras are not isomorphic.
    Distinguished(Box<(InvariantVector, InvariantVector)>),
    /// An isomorphism was found and re-verified exactly; the matrix carries
    /// the first algebra onto the second.
    Witness(QMat),
    /// The bounded search found nothing; no conclusion.
    Inconclusive,
}

impl Verdict {
    pub fn is_witness(&self) -> bool {
        matches!(self, Verdict::Witness(_))
    }

    pub fn is_distinguished(&self) -> bool {
        matches!(self, Verdict::Distinguished(_))
    }
}

/// `p` transports `b1` onto `b2`, checked exactly: `p(x *1 y) = p(x) *2 p(y)`
/// for both operations.
pub fn is_bol_isomorphism(p: &QMat, b1: &BolAlgebra, b2: &BolAlgebra) -> bool {
    if p.det().is_zero() {
        return false;
    }
    b2.dot.conjugate(p) == b1.dot && b2.triple.conjugate(p) == b1.triple
}

/// Decide isomorphism of Bol algebras by invariants, then by a bounded
/// structured search over candidate matrices. Witnesses are re-verified
/// exactly, so `Witness` is sound; `Inconclusive` carries no information.
pub fn isomorphic_bol(b1: &BolAlgebra, b2: &BolAlgebra) -> Result<Verdict, ClassifyError> {
    if b1.dim != b2.dim {
        return Err(ClassifyError::DimensionMismatch);
    }
    let inv1 = invariants(b1).map_err(|_| ClassifyError::InvalidLts)?;
    let inv2 = invariants(b2).map_err(|_| ClassifyError::InvalidLts)?;
    if inv1 != inv2 {
        return Ok(Verdict::Distinguished(Box::new((inv1, inv2))));
    }
    if b1 == b2 {
        return Ok(Verdict::Witness(QMat::identity(b1.dim)));
    }
    if b1.dim == 3 {
        for p in candidate_matrices(b1, b2) {
            if is_bol_isomorphism(&p, b1, b2) {
                return Ok(Verdict::Witness(p));
            }
        }
    }
    Ok(Verdict::Inconclusive)
}

/// Deterministic candidate enumeration: signed/scaled permutations,
/// upper-triangular matrices shaped like the printed automorphism families,
/// and shear-augmented sign matrices built from entries occurring in the two
/// tensors.
fn candidate_matrices(b1: &BolAlgebra, b2: &BolAlgebra) -> Vec<QMat> {
    let diag_vals: Vec<Scalar> = [1, -1, 2, -2]
        .iter()
        .map(|&n| Scalar::from_int(n))
        .chain([Scalar::ratio(1, 2), Scalar::ratio(-1, 2)])
        .collect();
    let small: Vec<Scalar> = (-2..=2).map(Scalar::from_int).collect();
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for perm in &perms {
        for d0 in &diag_vals {
            for d1 in &diag_vals {
                for d2 in &diag_vals {
                    let mut m = QMat::zero(3, 3);
                    m[(perm[0], 0)] = d0.clone();
                    m[(perm[1], 1)] = d1.clone();
                    m[(perm[2], 2)] = d2.clone();
                    out.push(m);
                }
            }
        }
    }
    for d0 in [1i64, -1] {
        for d1 in [1i64, -1] {
            for d2 in [1i64, -1] {
                for a in &small {
                    for b in &small {
                        for c in &small {
                            if a.is_zero() && b.is_zero() && c.is_zero() {
                                continue;
                            }
                            let mut m = QMat::identity(3);
                            m[(0, 0)] = Scalar::from_int(d0);
                            m[(1, 1)] = Scalar::from_int(d1);
                            m[(2, 2)] = Scalar::from_int(d2);
                            m[(0, 1)] = a.clone();
                            m[(0, 2)] = b.clone();
                            m[(1, 2)] = c.clone();
                            out.push(m);
                        }
                    }
                }
            }
        }
    }
    let mut entry_vals: Vec<Scalar> = Vec::new();
    for (_, _, _, v) in b1.dot.entries().iter().chain(b2.dot.entries().iter()) {
        for c in [v.clone(), -v, Scalar::from_int(2) * v, Scalar::from_int(-2) * v] {
            if !c.is_zero() && !entry_vals.contains(&c) {
                entry_vals.push(c);
            }
        }
    }
    for val in &entry_vals {
        for d0 in [1i64, -1] {
            for d1 in [1i64, -1] {
                for d2 in [1i64, -1] {
                    for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)] {
                        let mut m = QMat::identity(3);
                        m[(0, 0)] = Scalar::from_int(d0);
                        m[(1, 1)] = Scalar::from_int(d1);
                        m[(2, 2)] = Scalar::from_int(d2);
                        m[(i, j)] = val.clone();
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// A claimed isotopy between the Bol algebras carried by two envelope pairs:
/// a Lie algebra isomorphism `phi` of the envelopes together with `xi` such
/// that `phi(h1) = Ad_xi(h2)`.
#[derive(Debug, Clone)]
pub struct IsotopyWitness {
    pub phi: QMat,
    pub xi: Vec<Scalar>,
}

/// Verify an isotopy witness: `phi` is a bracket isomorphism, maps tangent
/// onto tangent, and carries `h1` onto `Ad_xi(h2)`. Exact when `ad(xi)` is
/// nilpotent (polynomial exponential); otherwise the subspace comparison is
/// numeric to 1e-10.
pub fn isotopy_witness_check(
    p1: &EnvelopePair,
    p2: &EnvelopePair,
    w: &IsotopyWitness,
) -> Result<bool, ClassifyError> {
    let n = p1.dim();
    if p2.dim() != n {
        return Err(ClassifyError::DimensionMismatch);
    }
    if w.phi.rows() != n || w.phi.cols() != n || w.xi.len() != n {
        return Err(ClassifyError::MalformedWitness(format!(
            "expected a {n}x{n} matrix and a length-{n} vector"
        )));
    }
    if w.phi.det().is_zero() {
        return Err(ClassifyError::MalformedWitness("phi is singular".into()));
    }
    let e = |i| vec_ops::basis_vec(n, i);
    for i in 0..n {
        for j in i + 1..n {
            let lhs = w.phi.mul_vec(&p1.algebra.bracket_of(&e(i), &e(j)));
            let rhs =
                p2.algebra.bracket_of(&w.phi.mul_vec(&e(i)), &w.phi.mul_vec(&e(j)));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    if p1.tangent.map_by(&w.phi) != p2.tangent {
        return Ok(false);
    }
    let ad = p2.algebra.bracket.left_mult_matrix(&w.xi);
    if let Some(exp) = exact_nilpotent_exp(&ad) {
        Ok(p1.subalgebra.map_by(&w.phi) == p2.subalgebra.map_by(&exp))
    } else {
        let expf = f64_matrix_exp(&ad);
        let lhs: Vec<Vec<f64>> = p1
            .subalgebra
            .map_by(&w.phi)
            .basis()
            .iter()
            .map(|v| vec_ops::to_f64(v))
            .collect();
        let rhs: Vec<Vec<f64>> = p2
            .subalgebra
            .basis()
            .iter()
            .map(|v| mat_vec_f64(&expf, &vec_ops::to_f64(v)))
            .collect();
        Ok(spans_match_f64(&lhs, &rhs, 1e-10))
    }
}

/// Exact `exp(ad)` when `ad` is nilpotent; `None` otherwise.
pub fn exact_nilpotent_exp(ad: &QMat) -> Option<QMat> {
    let n = ad.rows();
    let mut nilpotency = ad.clone();
    for _ in 0..n {
        nilpotency = nilpotency.mul(ad);
    }
    if !nilpotency.is_zero() {
        return None;
    }
    let mut term = QMat::identity(n);
    let mut sum = QMat::identity(n);
    for k in 1..=n {
        term = term.mul(ad).scale(&Scalar::ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
    }
    Some(sum)
}

fn f64_matrix_exp(ad: &QMat) -> Vec<Vec<f64>> {
    let n = ad.rows();
    let a: Vec<Vec<f64>> =
        (0..n).map(|i| (0..n).map(|j| ad[(i, j)].to_f64()).collect()).collect();
    let mut result = vec![vec![0.0; n]; n];
    let mut term = vec![vec![0.0; n]; n];
    for i in 0..n {
        result[i][i] = 1.0;
        term[i][i] = 1.0;
    }
    for k in 1..40 {
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for l in 0..n {
                if term[i][l] == 0.0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += term[i][l] * a[l][j] / k as f64;
                }
            }
        }
        term = next;
        for i in 0..n {
            for j in 0..n {
                result[i][j] += term[i][j];
            }
        }
    }
    result
}

fn mat_vec_f64(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn spans_match_f64(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let resid = |v: &[f64], basis: &[Vec<f64>]| -> f64 {
        let k = basis.len();
        if k == 0 {
            return norm_f64(v);
        }
        let mut g = vec![vec![0.0; k + 1]; k];
        for i in 0..k {
            for j in 0..k {
                g[i][j] = dot_f64(&basis[i], &basis[j]);
            }
            g[i][k] = dot_f64(&basis[i], v);
        }
        for col in 0..k {
            let piv = (col..k)
                .max_by(|&r, &s| g[r][col].abs().partial_cmp(&g[s][col].abs()).unwrap())
                .unwrap();
            g.swap(col, piv);
            if g[col][col].abs() < 1e-14 {
                continue;
            }
            for r in 0..k {
                if r != col {
                    let f = g[r][col] / g[col][col];
                    for c in col..=k {
                        g[r][c] -= f * g[col][c];
                    }
                }
            }
        }
        let coeffs: Vec<f64> = (0..k)
            .map(|i| if g[i][i].abs() < 1e-14 { 0.0 } else { g[i][k] / g[i][i] })
            .collect();
        let mut r = v.to_vec();
        for (c, bv) in coeffs.iter().zip(basis) {
            for (ri, bi) in r.iter_mut().zip(bv) {
                *ri -= c * bi;
            }
        }
        norm_f64(&r)
    };
    a.iter().all(|v| resid(v, b) <= tol * (1.0 + norm_f64(v)))
        && b.iter().all(|v| resid(v, a) <= tol * (1.0 + norm_f64(v)))
}

fn dot_f64(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm_f64(a: &[f64]) -> f64 {
    dot_f64(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::verify_bol;

    #[test]
    fn canonical_tensors_verify_except_vii() {
        for tag in [
            Lts3Type::I,
            Lts3Type::II,
            Lts3Type::III(Sign::Minus),
            Lts3Type::III(Sign::Plus),
            Lts3Type::IV(Sign::Minus),
            Lts3Type::IV(Sign::Plus),
            Lts3Type::V(Sign::Minus),
            Lts3Type::V(Sign::Plus),
            Lts3Type::VI,
        ] {
            let m = canonical_lts3(tag);
            assert!(verify_lts(&m).is_valid(), "{tag} fails axioms");
            assert!(is_solvable_lts(&m), "{tag} not solvable");
        }
        assert!(!verify_lts(&canonical_lts3(Lts3Type::VII)).is_valid());
    }

    #[test]
    fn classify_fixed_points() {
        for tag in [
            Lts3Type::I,
            Lts3Type::II,
            Lts3Type::III(Sign::Minus),
            Lts3Type::III(Sign::Plus),
            Lts3Type::V(Sign::Minus),
            Lts3Type::V(Sign::Plus),
            Lts3Type::VI,
        ] {
            let m = canonical_lts3(tag);
            let c = classify_lts3(&m).unwrap();
            assert_eq!(c.tag, tag);
            let p = c.normalizer.expect("canonical tensors normalize exactly");
            assert_eq!(m.triple.conjugate(&p), canonical_lts3(tag).triple);
        }
    }

    #[test]
    fn repaired_type_iv_classifies_as_iii() {
        for s in [Sign::Minus, Sign::Plus] {
            let m = canonical_lts3(Lts3Type::IV(s));
            let c = classify_lts3(&m).unwrap();
            assert_eq!(c.tag, Lts3Type::III(s));
            assert!(c.normalizer.is_some());
        }
    }

    #[test]
    fn classify_random_conjugates() {
        let mut rng = sample::sampler(11);
        for tag in
            [Lts3Type::II, Lts3Type::III(Sign::Minus), Lts3Type::V(Sign::Plus), Lts3Type::VI]
        {
            let m = canonical_lts3(tag);
            for _ in 0..5 {
                let p = sample::invertible(&mut rng, 3, 2, 2);
                let conj = LieTripleSystem::new(m.triple.conjugate(&p));
                let c = classify_lts3(&conj).unwrap();
                assert_eq!(c.tag, tag);
                let q = c.normalizer.expect("orbit members normalize exactly");
                assert_eq!(conj.triple.conjugate(&q), canonical_lts3(tag).triple);
            }
        }
    }

    #[test]
    fn isocline_outputs_verify_and_satisfy_plane_axiom() {
        let alpha = vec![Scalar::from_int(1), Scalar::zero(), Scalar::zero()];
        let beta = QMat::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]);
        let b = isocline_bol(&alpha, &beta);
        assert!(verify_bol(&b).is_valid());
        let mut rng = sample::sampler(3);
        assert!(plane_axiom_check(&b, 25, &mut rng));
    }

    #[test]
    fn lts2_solvable_case_after_scaling() {
        // (x,y,z) = beta(x,z) y - beta(y,z) x with beta = diag(5, 0).
        let direct = StructureConstants3::from_entries(
            2,
            &[
                (1, 0, 1, 0, Scalar::from_int(5)),
                (1, 1, 0, 0, Scalar::from_int(-5)),
            ],
        )
        .unwrap();
        let form =
            normalize_lts2(&LieTripleSystem::new(direct), BetaReading::FirstThird).unwrap();
        assert_eq!(form.case, Lts2Case::SolvableA);
        assert_eq!(form.beta_diag, [1, 0]);

        // beta = identity: spherical.
        let spherical = StructureConstants3::from_entries(
            2,
            &[
                (1, 0, 1, 0, Scalar::one()),
                (1, 1, 0, 0, Scalar::from_int(-1)),
                (0, 1, 0, 1, Scalar::one()),
                (0, 0, 1, 1, Scalar::from_int(-1)),
            ],
        )
        .unwrap();
        let form =
            normalize_lts2(&LieTripleSystem::new(spherical), BetaReading::FirstThird).unwrap();
        assert_eq!(form.case, Lts2Case::Spherical);
    }
}
