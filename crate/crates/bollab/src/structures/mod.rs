//! Exact tensor core: finite-dimensional algebras over the rationals and the
//! verifiers for their defining identities.

mod invariants;
mod series;
mod tensor;
mod verify;

pub use invariants::{invariants, AdjointClass, InvariantVector};
pub use series::{derived_series_lts, is_ideal_lts, is_solvable_lts, triple_span};
pub use tensor::{StructureConstants2, StructureConstants3, TensorError};
pub use verify::{verify_bol, verify_lie, verify_lts, ValidityReport, Violation};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Errors from structure-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructuresError {
    #[error("subspace ambient dimension {subspace} does not match algebra dimension {algebra}")]
    DimensionMismatch { subspace: usize, algebra: usize },
    #[error("subspace is not an ideal: ({0:?}, M, M) is not contained in it")]
    NotAnIdeal(Vec<Scalar>),
    #[error("algebra fails its defining identities: {0}")]
    InvalidAlgebra(String),
}

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Antisymmetry is structural; the Jacobi identity holds iff
/// [`verify_lie`] reports valid.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LieAlgebra {
    pub dim: usize,
    pub bracket: StructureConstants2,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl LieAlgebra {
    pub fn new(bracket: StructureConstants2) -> Self {
        LieAlgebra { dim: bracket.dim(), bracket, label: None }
    }

    pub fn with_label(bracket: StructureConstants2, label: impl Into<String>) -> Self {
        LieAlgebra { dim: bracket.dim(), bracket, label: Some(label.into()) }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(StructureConstants2::zero(dim))
    }

    /// `[x, y]`.
    pub fn bracket_of(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.bracket.eval(x, y)
    }
}

/// A Lie triple system: trilinear operation subject to alternation, the
/// cyclic identity, and the inner-derivation law ([`verify_lts`]).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LieTripleSystem {
    pub dim: usize,
    pub triple: StructureConstants3,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl LieTripleSystem {
    pub fn new(triple: StructureConstants3) -> Self {
        LieTripleSystem { dim: triple.dim(), triple, label: None }
    }

    pub fn with_label(triple: StructureConstants3, label: impl Into<String>) -> Self {
        LieTripleSystem { dim: triple.dim(), triple, label: Some(label.into()) }
    }

    pub fn abelian(dim: usize) -> Self {
        LieTripleSystem::new(StructureConstants3::zero(dim))
    }

    /// `(x, y, z)`.
    pub fn triple_of(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.triple.eval(x, y, z)
    }
}

/// A Bol algebra: antisymmetric bilinear `x . y` plus trilinear `(x, y, z)`
/// subject to identities (9)-(11) ([`verify_bol`]).
///
/// The bracket-style operation `<x, y, z>` is derived, not stored:
/// `<x, y, z> = ((x . y) . z - (x, y, z)) / 2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BolAlgebra {
    pub dim: usize,
    pub dot: StructureConstants2,
    pub triple: StructureConstants3,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl BolAlgebra {
    pub fn new(dot: StructureConstants2, triple: StructureConstants3) -> Self {
        assert_eq!(dot.dim(), triple.dim());
        BolAlgebra { dim: dot.dim(), dot, triple, label: None }
    }

    pub fn with_label(
        dot: StructureConstants2,
        triple: StructureConstants3,
        label: impl Into<String>,
    ) -> Self {
        let mut b = BolAlgebra::new(dot, triple);
        b.label = Some(label.into());
        b
    }

    pub fn abelian(dim: usize) -> Self {
        BolAlgebra::new(StructureConstants2::zero(dim), StructureConstants3::zero(dim))
    }

    pub fn dot_of(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.dot.eval(x, y)
    }

    pub fn triple_of(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.triple.eval(x, y, z)
    }

    /// Derived operation `<x, y, z> = ((x . y) . z - (x, y, z)) / 2`.
    pub fn angle_of(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let xy_z = self.dot.eval(&self.dot.eval(x, y), z);
        let t = self.triple.eval(x, y, z);
        xy_z.iter()
            .zip(&t)
            .map(|(a, b)| (a - b) * Scalar::ratio(1, 2))
            .collect()
    }

    /// The underlying Lie triple system (the trilinear part alone), which is
    /// one whenever the Bol identities hold.
    pub fn lts_part(&self) -> LieTripleSystem {
        LieTripleSystem { dim: self.dim, triple: self.triple.clone(), label: self.label.clone() }
    }

    /// Transport along an invertible matrix `p`; the result `b'` satisfies
    /// `p(b'(x,y)) = b(px, py)` entrywise, i.e. `p : b' -> b` is an
    /// isomorphism.
    pub fn conjugate(&self, p: &crate::linalg::QMat) -> BolAlgebra {
        BolAlgebra {
            dim: self.dim,
            dot: self.dot.conjugate(p),
            triple: self.triple.conjugate(p),
            label: None,
        }
    }
}

/// Interchange JSON schema for structure constants, shared with the CLI:
/// `{"dim": n, "bilinear": [[k,i,j,"p/q"],...], "trilinear": [[l,i,j,k,"p/q"],...]}`.
///
/// Omitted entries are zero. The antisymmetric completion is applied to
/// `bilinear`; `trilinear` is taken literally.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TensorJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bilinear: Vec<(usize, usize, usize, Scalar)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trilinear: Vec<(usize, usize, usize, usize, Scalar)>,
    /// Optional hint: "lie", "lts", or "bol".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl TensorJson {
    pub fn bilinear_tensor(&self) -> Result<StructureConstants2, TensorError> {
        StructureConstants2::from_entries(self.dim, &self.bilinear)
    }

    pub fn trilinear_tensor(&self) -> Result<StructureConstants3, TensorError> {
        StructureConstants3::from_entries(self.dim, &self.trilinear)
    }

    pub fn from_lie(l: &LieAlgebra) -> Self {
        TensorJson {
            dim: l.dim,
            bilinear: l.bracket.entries(),
            trilinear: Vec::new(),
            kind: Some("lie".into()),
            label: l.label.clone(),
        }
    }

    pub fn from_lts(m: &LieTripleSystem) -> Self {
        TensorJson {
            dim: m.dim,
            bilinear: Vec::new(),
            trilinear: m.triple.entries(),
            kind: Some("lts".into()),
            label: m.label.clone(),
        }
    }

    pub fn from_bol(b: &BolAlgebra) -> Self {
        TensorJson {
            dim: b.dim,
            bilinear: b.dot.entries(),
            trilinear: b.triple.entries(),
            kind: Some("bol".into()),
            label: b.label.clone(),
        }
    }
}
