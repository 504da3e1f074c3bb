//! Validation of the non-nilpotent closed-form families: unit law, left Bol
//! residual, and tangent tensors against the enveloping-pair expectations.

use bollab::loops::{
    check_left_bol, check_unit, tangent_tensors, AnalyticLoop, Branch, HeisRot, LoopLaw,
    LoopSource, TransBoost, TypeII5d, TypeIICase,
};
use bollab::sample;

fn mk(law: LoopLaw) -> AnalyticLoop {
    AnalyticLoop::new(3, law, LoopSource::UserSupplied)
}

fn bol_ok(l: &AnalyticLoop, tol: f64) -> f64 {
    let mut rng = sample::sampler(42);
    let rep = check_left_bol(l, 300, 0.1, tol, &mut rng);
    assert_eq!(rep.skipped, 0, "skipped samples");
    assert!(rep.pass, "left Bol residual {}", rep.max_residual);
    let unit = check_unit(l, 100, 0.1, 1e-12, &mut rng);
    assert!(unit.pass, "unit residual {}", unit.max_residual);
    rep.max_residual
}

#[test]
fn transboost_iii_minus_1() {
    let l = mk(LoopLaw::TransBoost(TransBoost {
        branch: Branch::Hyperbolic,
        weights: [1.0, 0.0],
        h: [0.0, 1.0, 0.0],
    }));
    bol_ok(&l, 1e-9);
    let t = tangent_tensors(&l, 1e-3).unwrap();
    // e1.e2 = -e2, (e1,e2,e2) = e1
    assert!((t.dot[1][0][1] + 1.0).abs() < 1e-5, "dot {}", t.dot[1][0][1]);
    assert!((t.triple[0][0][1][1] - 1.0).abs() < 1e-4, "triple {}", t.triple[0][0][1][1]);
}

#[test]
fn transboost_iii_plus_2_with_x() {
    let l = mk(LoopLaw::TransBoost(TransBoost {
        branch: Branch::Trigonometric,
        weights: [1.0, 0.0],
        h: [1.0, 0.0, 0.0],
    }));
    bol_ok(&l, 1e-9);
    let t = tangent_tensors(&l, 1e-3).unwrap();
    // e1.e2 = -x e1 = -e1, (e1,e2,e2) = -e1 (trig branch)
    assert!((t.dot[0][0][1] + 1.0).abs() < 1e-5);
    assert!((t.triple[0][0][1][1] + 1.0).abs() < 1e-4);
}

#[test]
fn transboost_iii_minus_3() {
    let l = mk(LoopLaw::TransBoost(TransBoost {
        branch: Branch::Hyperbolic,
        weights: [1.0, 0.0],
        h: [1.5, 0.0, 1.0],
    }));
    bol_ok(&l, 1e-9);
    let t = tangent_tensors(&l, 1e-3).unwrap();
    // e1.e2 = -1.5 e1 - e3
    assert!((t.dot[0][0][1] + 1.5).abs() < 1e-5);
    assert!((t.dot[2][0][1] + 1.0).abs() < 1e-5);
}

#[test]
fn transboost_iv_families() {
    for (branch, w3, sgn) in [
        (Branch::Hyperbolic, 1.0, 1.0),
        (Branch::Trigonometric, -1.0, -1.0),
    ] {
        let l = mk(LoopLaw::TransBoost(TransBoost {
            branch,
            weights: [1.0, w3],
            h: [0.5, 0.75, 1.0],
        }));
        bol_ok(&l, 1e-9);
        let t = tangent_tensors(&l, 1e-3).unwrap();
        // (e1,e2,e2) = sgn*e1
        assert!(
            (t.triple[0][0][1][1] - sgn).abs() < 1e-4,
            "branch {:?}: {}",
            branch,
            t.triple[0][0][1][1]
        );
        // dot e1.e2 = -(0.5 e1 + 0.75 e2 + e3)
        assert!((t.dot[0][0][1] + 0.5).abs() < 1e-5);
        assert!((t.dot[1][0][1] + 0.75).abs() < 1e-5);
        assert!((t.dot[2][0][1] + 1.0).abs() < 1e-5);
    }
}

#[test]
fn heisrot_v_families() {
    // V-.1: h = e4 + e3, hyperbolic.
    let l = mk(LoopLaw::HeisRot(HeisRot { branch: Branch::Hyperbolic, h: [0.0, 0.0, 1.0] }));
    bol_ok(&l, 1e-9);
    let t = tangent_tensors(&l, 1e-3).unwrap();
    // e2.e3 = -e3; (e2,e3,e2) = e1; (e2,e3,e3) = +e2 (hyperbolic)
    assert!((t.dot[2][1][2] + 1.0).abs() < 1e-5, "dot {}", t.dot[2][1][2]);
    assert!((t.triple[0][1][2][1] - 1.0).abs() < 1e-4, "t121 {}", t.triple[0][1][2][1]);
    assert!((t.triple[1][1][2][2] - 1.0).abs() < 1e-4, "t122 {}", t.triple[1][1][2][2]);

    // V+.2 with y = 1.5: h = e4 + 1.5 e2, trigonometric.
    let l2 = mk(LoopLaw::HeisRot(HeisRot { branch: Branch::Trigonometric, h: [0.0, 1.5, 0.0] }));
    bol_ok(&l2, 1e-9);
    let t2 = tangent_tensors(&l2, 1e-3).unwrap();
    // e2.e3 = -1.5 e2; (e2,e3,e3) = -e2 (trig)
    assert!((t2.dot[1][1][2] + 1.5).abs() < 1e-5, "dot {}", t2.dot[1][1][2]);
    assert!((t2.triple[1][1][2][2] + 1.0).abs() < 1e-4, "t122 {}", t2.triple[1][1][2][2]);
    assert!((t2.triple[0][1][2][1] - 1.0).abs() < 1e-4, "t121 {}", t2.triple[0][1][2][1]);
}

#[test]
fn type_ii_cases_and_5d() {
    for case in [2u8, 3, 4] {
        let l = mk(LoopLaw::TypeIICase(TypeIICase { case }));
        bol_ok(&l, 1e-10);
        let t = tangent_tensors(&l, 1e-3).unwrap();
        // dot e2.e3 = -e_{axis}, triple (e2,e3,e3) = e1
        let axis = match case {
            2 => 2,
            3 => 1,
            _ => 0,
        };
        assert!((t.dot[axis][1][2] + 1.0).abs() < 1e-5, "case {case}");
        assert!((t.triple[0][1][2][2] - 1.0).abs() < 1e-4, "case {case}");
    }
    let l = mk(LoopLaw::TypeII5d(TypeII5d { beta: 0.5 }));
    bol_ok(&l, 1e-10);
    let t = tangent_tensors(&l, 1e-3).unwrap();
    // e2.e3 = -1/2 e2, e1.e3 = e1, (e2,e3,e3) = e1
    assert!((t.dot[1][1][2] + 0.5).abs() < 1e-5);
    assert!((t.dot[0][0][2] - 1.0).abs() < 1e-5);
    assert!((t.triple[0][1][2][2] - 1.0).abs() < 1e-4);
}
