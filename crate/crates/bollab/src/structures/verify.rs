//! Exact verifiers for the defining identities of Lie algebras, Lie triple
//! systems, and Bol algebras.
//!
//! Reports list *every* violating index tuple, not just the first, so a
//! hand-entered tensor can be debugged in one pass.

use serde::{Deserialize, Serialize};

use super::{BolAlgebra, LieAlgebra, LieTripleSystem};
use crate::linalg::vec_ops;
use crate::scalar::Scalar;

/// One violated identity instance: which identity, at which basis indices,
/// with the nonzero defect vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub defect: Vec<Scalar>,
}

/// Outcome of a verifier run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub subject: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, identity: &str, indices: &[usize], defect: Vec<Scalar>) {
        self.checked += 1;
        if !vec_ops::is_zero(&defect) {
            self.violations.push(Violation {
                identity: identity.to_string(),
                indices: indices.to_vec(),
                defect,
            });
        } else {
            // defect zero, nothing to record
        }
    }
}

/// Check the Jacobi identity on all basis triples.
pub fn verify_lie(l: &LieAlgebra) -> ValidityReport {
    let n = l.dim;
    let mut report = ValidityReport {
        subject: l.label.clone().unwrap_or_else(|| "lie algebra".into()),
        checked: 0,
        violations: Vec::new(),
    };
    let e = |i| vec_ops::basis_vec(n, i);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut d = l.bracket_of(&l.bracket_of(&e(i), &e(j)), &e(k));
                let t2 = l.bracket_of(&l.bracket_of(&e(j), &e(k)), &e(i));
                let t3 = l.bracket_of(&l.bracket_of(&e(k), &e(i)), &e(j));
                d = vec_ops::add(&d, &t2);
                d = vec_ops::add(&d, &t3);
                report.record("jacobi", &[i, j, k], d);
            }
        }
    }
    report
}

/// Check the three Lie-triple-system axioms on all basis tuples:
/// alternation `(x,x,y) = 0`, the cyclic identity, and the inner-derivation
/// law of `(a,b,-)` over the triple product.
pub fn verify_lts(m: &LieTripleSystem) -> ValidityReport {
    let n = m.dim;
    let mut report = ValidityReport {
        subject: m.label.clone().unwrap_or_else(|| "lie triple system".into()),
        checked: 0,
        violations: Vec::new(),
    };
    check_triple_axioms(&mut report, n, &|x, y, z| m.triple_of(x, y, z));
    report
}

/// Check the Bol algebra identities (9)-(11) plus the derivation identity (8)
/// of the triple operation over itself.
///
/// Identity (11) is read with the grouping `(x.y).(z.w)` in its final term:
/// `(x,y,z).w - (x,y,w).z + (z,w,x.y) - (x,y,z.w) + (x.y).(z.w) = 0`.
pub fn verify_bol(b: &BolAlgebra) -> ValidityReport {
    let n = b.dim;
    let mut report = ValidityReport {
        subject: b.label.clone().unwrap_or_else(|| "bol algebra".into()),
        checked: 0,
        violations: Vec::new(),
    };
    // (9), (10), (8): the triple is a Lie triple system.
    check_triple_axioms(&mut report, n, &|x, y, z| b.triple_of(x, y, z));
    // (11): the mixed identity tying dot and triple together.
    let e = |i| vec_ops::basis_vec(n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (x, y, z, w) = (e(i), e(j), e(k), e(l));
                    let xy = b.dot_of(&x, &y);
                    let zw = b.dot_of(&z, &w);
                    let mut d = b.dot_of(&b.triple_of(&x, &y, &z), &w);
                    d = vec_ops::sub(&d, &b.dot_of(&b.triple_of(&x, &y, &w), &z));
                    d = vec_ops::add(&d, &b.triple_of(&z, &w, &xy));
                    d = vec_ops::sub(&d, &b.triple_of(&x, &y, &zw));
                    d = vec_ops::add(&d, &b.dot_of(&xy, &zw));
                    report.record("mixed identity (11)", &[i, j, k, l], d);
                }
            }
        }
    }
    report
}

fn check_triple_axioms(
    report: &mut ValidityReport,
    n: usize,
    t: &dyn Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vec<Scalar>,
) {
    let e = |i| vec_ops::basis_vec(n, i);
    // Alternation, polarized: (x,y,z) + (y,x,z) = 0 on all basis pairs.
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let d = vec_ops::add(&t(&e(i), &e(j), &e(k)), &t(&e(j), &e(i), &e(k)));
                report.record("alternation (x,x,y)=0", &[i, j, k], d);
            }
        }
    }
    // Cyclic identity.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut d = t(&e(i), &e(j), &e(k));
                d = vec_ops::add(&d, &t(&e(j), &e(k), &e(i)));
                d = vec_ops::add(&d, &t(&e(k), &e(i), &e(j)));
                report.record("cyclic sum", &[i, j, k], d);
            }
        }
    }
    // Inner-derivation law on all basis 5-tuples.
    for a in 0..n {
        for b in a + 1..n {
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        let lhs = t(&e(a), &e(b), &t(&e(u), &e(v), &e(w)));
                        let mut rhs = t(&t(&e(a), &e(b), &e(u)), &e(v), &e(w));
                        rhs = vec_ops::add(&rhs, &t(&e(u), &t(&e(a), &e(b), &e(v)), &e(w)));
                        rhs = vec_ops::add(&rhs, &t(&e(u), &e(v), &t(&e(a), &e(b), &e(w))));
                        report.record("derivation law", &[a, b, u, v, w], vec_ops::sub(&lhs, &rhs));
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{StructureConstants2, StructureConstants3};

    #[test]
    fn abelian_everything_valid() {
        assert!(verify_lie(&LieAlgebra::abelian(4)).is_valid());
        assert!(verify_lts(&LieTripleSystem::abelian(3)).is_valid());
        assert!(verify_bol(&BolAlgebra::abelian(3)).is_valid());
    }

    #[test]
    fn jacobi_violation_is_reported_with_triple() {
        // [e1,e2]=e3, [e1,e3]=e3, [e2,e3]=e1 fails Jacobi.
        let bracket = StructureConstants2::from_int_entries(
            3,
            &[(2, 0, 1, 1), (2, 0, 2, 1), (0, 1, 2, 1)],
        );
        let report = verify_lie(&LieAlgebra::new(bracket));
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.indices == vec![0, 1, 2]));
    }

    #[test]
    fn lts_alternation_violation() {
        // (e1,e1,e2) = e1 breaks (x,x,y) = 0.
        let triple =
            StructureConstants3::from_entries(2, &[(0, 0, 0, 1, Scalar::one())]).unwrap();
        let report = verify_lts(&LieTripleSystem::new(triple));
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.identity.starts_with("alternation")));
    }
}
