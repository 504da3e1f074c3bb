//! Verbatim transcriptions of composition-law formulas whose printed forms
//! disagree with the coset-loop derivation, kept behind this module so the
//! discrepancies can be measured instead of silently repaired.
//!
//! The catalog laws are authoritative (they are re-derived from the envelope
//! pairs and pass the Bol checks); [`discrepancy`] quantifies how far each
//! printed variant is from the corresponding catalog law, and whether the
//! printed variant happens to satisfy the left Bol identity on its own.

use crate::loops::{check_left_bol, AnalyticLoop, LoopError, LoopLaw, LoopSource};
use crate::sample::{self};
use serde::{Deserialize, Serialize};

/// Type III.3 composition law as printed: the numerator matches the catalog
/// law but the denominator carries the opposite sign of `v + v'`.
pub fn iii3_star(a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    let (t, u, v) = (a[0], a[1], a[2]);
    let (tp, up, vp) = (b[0], b[1], b[2]);
    let den = 2.0 - (v + vp);
    if den.abs() < 1e-12 {
        return Err(LoopError::OutsideDomain);
    }
    Ok(vec![t + tp + (t * vp - v * tp) / den, u + up, v + vp])
}

/// Type II case 4 law as printed: the order-2 term appears with the opposite
/// sign relative to the printed algebra relations, and the quartic
/// `(uv' - vu')(v + v')/4` term of the exact factorization is absent.
pub fn ii_case4_star(a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    let (t, u, v) = (a[0], a[1], a[2]);
    let (tp, up, vp) = (b[0], b[1], b[2]);
    Ok(vec![
        t + tp
            + (u * vp - v * up) / 2.0
            + (v * v * up - u * v * vp) / 12.0
            + (u * vp * vp - v * up * vp) / 12.0,
        u + up,
        v + vp,
    ])
}

/// Type II case 2 law as printed, including the long `L` polynomial verbatim.
pub fn ii_case2_star(a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    let (t, u, v) = (a[0], a[1], a[2]);
    let (tp, up, vp) = (b[0], b[1], b[2]);
    let den = 2.0 - (u + up);
    if den.abs() < 1e-9 {
        return Err(LoopError::OutsideDomain);
    }
    let l = 24.0 * t + 24.0 * tp - 24.0 * t * u - 24.0 * tp * u - 24.0 * t * up
        - 24.0 * tp * up
        + 12.0 * t * u * up
        + 12.0 * tp * u * up
        + 6.0 * t * u * u
        + 6.0 * tp * u * u
        + 6.0 * t * up * up
        + 6.0 * tp * up * up
        - 2.0 * u * v * up
        - 2.0 * u * up * vp
        + 6.0 * u * v * vp
        - 6.0 * v * up * vp
        - 6.0 * u * up * vp * v
        + 2.0 * u * u * v * up
        + 2.0 * u * u * up * vp
        - 4.0 * u * u * v * vp
        + 2.0 * u * vp * vp
        - 4.0 * v * v * up
        + 2.0 * u * v * v * up
        + 2.0 * u * v * up * up
        - 6.0 * u * up * vp * vp
        + 6.0 * u * vp * vp
        + 2.0 * u * up * up * vp
        + 4.0 * v * up * up * vp
        - 3.0 * u * u * vp * vp
        + 5.0 * v * v * up * up
        - u * u * v * up * up
        + u * u * up * vp * vp
        - u * u * up * up * vp
        + u * up * up * vp * vp
        - v * v * up * up * up
        + 5.0 * u * u * v * up * vp / 2.0
        - u * v * v * up * up
        + 3.0 * u * v * vp * up * up / 2.0
        - u * u * u * v * up / 2.0
        - up * vp * u * u * u / 2.0
        - u * v * up * up * up / 2.0
        - u * up * up * up / 2.0
        - v * vp * up * up * up / 2.0
        + v * vp * u * u * u / 2.0;
    Ok(vec![l / (6.0 * den * den), u + up, v + vp + (u * vp - v * up) / den])
}

/// The 5-dimensional Type II example's first coordinate as printed (the `X`
/// polynomial with its integral and projection terms).
pub fn ii5d_star(beta: f64, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    let (t, u, v) = (a[0], a[1], a[2]);
    let (tp, up, vp) = (b[0], b[1], b[2]);
    let den = 2.0 + beta * (v + vp);
    if den.abs() < 1e-12 {
        return Err(LoopError::OutsideDomain);
    }
    let vv = v + vp;
    let x = t + tp - (u * v * vp - v * up) / 12.0 - (v * up * vp - u * vp * vp) / 12.0
        + (t * vp - v * tp) / 2.0
        - (u * vp - v * up) * vv / 2.0
        + (vv / 2.0 + beta * vv * vv / 12.0) * (u * vp - v * up) / den;
    Ok(vec![
        x,
        u + up + beta * (u * vp - up * v) / den,
        v + vp,
    ])
}

/// Which printed variants exist; the Type VII chain is the catalog law
/// `LOOP/VII.6[omega=1]` itself (no corrected counterpart exists).
pub const VARIANT_IDS: [&str; 4] =
    ["LOOP/III.3", "LOOP/II.c2", "LOOP/II.c4", "LOOP/II5.f2[beta=1/2]"];

fn printed_compose(id: &str, a: &[f64], b: &[f64]) -> Option<Result<Vec<f64>, LoopError>> {
    match id {
        "LOOP/III.3" => Some(iii3_star(a, b)),
        "LOOP/II.c2" => Some(ii_case2_star(a, b)),
        "LOOP/II.c4" => Some(ii_case4_star(a, b)),
        "LOOP/II5.f2[beta=1/2]" => Some(ii5d_star(0.5, a, b)),
        _ => None,
    }
}

/// Comparison of a printed variant against the catalog law.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Discrepancy {
    pub id: String,
    /// Max coordinate difference from the catalog law over the samples.
    pub max_difference: f64,
    /// Max left-Bol residual of the printed variant itself.
    pub printed_bol_residual: f64,
    pub samples: usize,
}

/// Measure a printed variant: how far from the catalog law, and whether the
/// printed form is a Bol loop in its own right. `None` when `id` has no
/// printed variant.
pub fn discrepancy(id: &str, samples: usize, radius: f64, seed: u64) -> Option<Discrepancy> {
    printed_compose(id, &[0.0; 3], &[0.0; 3])?.ok();
    let entry = crate::catalog::catalog_get(id).ok()?;
    let catalog_loop = entry.to_loop()?;
    let mut rng = sample::sampler(seed);
    let mut max_diff: f64 = 0.0;
    for _ in 0..samples {
        let a = sample::f64_point(&mut rng, 3, radius);
        let b = sample::f64_point(&mut rng, 3, radius);
        if let (Some(Ok(p)), Ok(c)) = (printed_compose(id, &a, &b), catalog_loop.compose(&a, &b))
        {
            for i in 0..3 {
                max_diff = max_diff.max((p[i] - c[i]).abs());
            }
        }
    }
    let law = match id {
        "LOOP/III.3" => LoopLaw::AsPrintedProbe(0),
        "LOOP/II.c2" => LoopLaw::AsPrintedProbe(1),
        "LOOP/II.c4" => LoopLaw::AsPrintedProbe(2),
        _ => LoopLaw::AsPrintedProbe(3),
    };
    let l = AnalyticLoop::new(3, law, LoopSource::UserSupplied);
    let mut rng = sample::sampler(seed.wrapping_add(1));
    let rep = check_left_bol(&l, samples, radius, 1e-9, &mut rng);
    Some(Discrepancy {
        id: id.into(),
        max_difference: max_diff,
        printed_bol_residual: rep.max_residual,
        samples,
    })
}

pub(crate) fn probe_compose(which: u8, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    match which {
        0 => iii3_star(a, b),
        1 => ii_case2_star(a, b),
        2 => ii_case4_star(a, b),
        _ => ii5d_star(0.5, a, b),
    }
}
