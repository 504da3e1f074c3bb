//! Acceptance suite: runs every criterion of the catalog-wide regression
//! report at the pinned parameters (seed 42, 1000 samples, radius 0.1,
//! tolerance 1e-9) and prints one pass/fail line per criterion.
//!
//! Three families of checks fail by design against data whose printed source
//! tables are provably inconsistent (the Type VII family, the printed Type IV
//! sign, and a handful of printed witness/non-isomorphism claims). Those
//! failures are intentional: the checks run faithfully against the printed
//! data, every affected catalog entry documents its defect, and the analysis
//! lives alongside the entries. Nothing is loosened to force them green.

use std::sync::OnceLock;

use bollab::report::{run_report, CriterionResult, Report, ReportOptions};

fn report() -> &'static Report {
    static REPORT: OnceLock<Report> = OnceLock::new();
    REPORT.get_or_init(|| {
        run_report(&ReportOptions { seed: 42, samples: 1000, radius: 0.1, tol: 1e-9 })
    })
}

fn criterion(id: &str) -> &'static CriterionResult {
    report().criteria.iter().find(|c| c.id == id).expect("criterion id")
}

fn assert_criterion(id: &str) {
    let c = criterion(id);
    println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.description);
    let failures: Vec<String> = c
        .items
        .iter()
        .filter(|i| !i.pass)
        .map(|i| format!("  - {}: {}", i.item, i.info))
        .collect();
    assert!(
        c.pass,
        "criterion {} failed on {} item(s):\n{}",
        id,
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn criterion_01_axiom_regression() {
    assert_criterion("C1");
}

#[test]
fn criterion_02_envelope_reproduction() {
    assert_criterion("C2");
}

#[test]
fn criterion_03_classifier_soundness() {
    assert_criterion("C3");
}

#[test]
fn criterion_04_bol_identity_suite() {
    assert_criterion("C4");
}

#[test]
fn criterion_05_generic_closed_form_cross_validation() {
    assert_criterion("C5");
}

#[test]
fn criterion_06_tangent_round_trip() {
    assert_criterion("C6");
}

#[test]
fn criterion_07_isomorphism_isotopy_claims() {
    assert_criterion("C7");
}

#[test]
fn criterion_08_isocline_suite() {
    assert_criterion("C8");
}

#[test]
fn criterion_09_solvability() {
    assert_criterion("C9");
}

#[test]
fn criterion_10_determinism() {
    assert_criterion("C10");
    // Byte-identical JSON for two fresh runs at the same seed.
    let opts = ReportOptions { seed: 42, samples: 60, radius: 0.1, tol: 1e-9 };
    let a = serde_json::to_string(&run_report(&opts)).unwrap();
    let b = serde_json::to_string(&run_report(&opts)).unwrap();
    assert_eq!(a, b, "report JSON must be byte-identical for a fixed seed");
}

/// Every failing item across the suite must be one of the documented source
/// defects: this pins the failure surface so that a regression elsewhere
/// cannot hide behind the known-red items.
#[test]
fn failures_are_exactly_the_documented_defects() {
    let failures = report().failures();
    for (cid, item) in &failures {
        let documented = item.info.contains("documented defect");
        assert!(
            documented,
            "criterion {cid} item {:?} fails without a documented defect: {}",
            item.item, item.info
        );
    }
    let failing_ids: Vec<String> =
        failures.iter().map(|(c, i)| format!("{c}:{}", i.item)).collect();
    let expected = [
        "C1:LTS IV- as printed",
        "C1:LTS IV+ as printed",
        "C1:LTS VII as printed",
        "C1:all tabulated Bol entries verify (including the Type VII rows)",
        "C2:type VI: printed relations form a Lie algebra",
        "C2:type VII: printed relations form a Lie algebra",
        "C3:canonical IV- classified as IV-",
        "C3:canonical VII classified as VII",
        "C4:LOOP/VII.6[omega=1] left Bol",
        "C7:printed witness diag(-1,1,1) transports A onto B exactly",
        "C7:III.3 vs III.4 distinguished by invariants (printed claim)",
        "C9:LTS/VII solvable with full radical",
    ];
    assert_eq!(
        failing_ids,
        expected.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "the set of failing acceptance items changed"
    );
}
