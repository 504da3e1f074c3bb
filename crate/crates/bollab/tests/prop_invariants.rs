//! Property tests over randomly generated exact data.

use proptest::prelude::*;

use bollab::classify::{classify_lts3, isocline_bol};
use bollab::linalg::{QMat, Subspace};
use bollab::scalar::Scalar;
use bollab::structures::{
    verify_bol, verify_lts, LieTripleSystem, StructureConstants2,
};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn small_matrix(n: usize) -> impl Strategy<Value = QMat> {
    proptest::collection::vec(small_scalar(), n * n).prop_map(move |v| {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = v[i * n + j].clone();
            }
        }
        m
    })
}

fn invertible_matrix(n: usize) -> impl Strategy<Value = QMat> {
    small_matrix(n).prop_filter("invertible", |m| !m.det().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Antisymmetry holds for every constructible bilinear tensor.
    #[test]
    fn bilinear_tensors_are_antisymmetric(
        entries in proptest::collection::vec(
            (0usize..3, 0usize..3, 0usize..3, small_scalar()), 0..6)
    ) {
        let filtered: Vec<_> = entries.into_iter().filter(|(_, i, j, _)| i != j).collect();
        if let Ok(t) = StructureConstants2::from_entries(3, &filtered) {
            for k in 0..3 {
                for i in 0..3 {
                    for j in 0..3 {
                        prop_assert_eq!(&(t.get(k, i, j) + t.get(k, j, i)), &Scalar::zero());
                    }
                }
            }
        }
    }

    /// Subspace arithmetic satisfies the dimension formula.
    #[test]
    fn subspace_dimension_formula(
        rows_a in proptest::collection::vec(
            proptest::collection::vec(small_scalar(), 4), 1..4),
        rows_b in proptest::collection::vec(
            proptest::collection::vec(small_scalar(), 4), 1..4),
    ) {
        let a = Subspace::from_rows(4, rows_a);
        let b = Subspace::from_rows(4, rows_b);
        let sum = a.sum(&b);
        let inter = a.intersect(&b);
        prop_assert_eq!(sum.dim() + inter.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_space(&a) && sum.contains_space(&b));
        prop_assert!(a.contains_space(&inter) && b.contains_space(&inter));
    }

    /// Validity of the triple-system axioms is conjugation invariant, and the
    /// classifier tag is stable.
    #[test]
    fn classification_is_conjugation_invariant(p in invertible_matrix(3)) {
        use bollab::classify::{canonical_lts3, Lts3Type, Sign};
        for tag in [Lts3Type::II, Lts3Type::V(Sign::Minus), Lts3Type::VI] {
            let m = canonical_lts3(tag);
            let conj = LieTripleSystem::new(m.triple.conjugate(&p));
            prop_assert!(verify_lts(&conj).is_valid());
            let c = classify_lts3(&conj).unwrap();
            prop_assert_eq!(c.tag, tag);
        }
    }

    /// Every isocline algebra verifies the Bol identities.
    #[test]
    fn isocline_algebras_always_verify(
        alpha in proptest::collection::vec(small_scalar(), 3),
        m in small_matrix(3),
    ) {
        let mut beta = QMat::zero(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                beta[(i, j)] = (&m[(i, j)] + &m[(j, i)]) * Scalar::ratio(1, 2);
            }
        }
        let b = isocline_bol(&alpha, &beta);
        prop_assert!(verify_bol(&b).is_valid());
    }
}
