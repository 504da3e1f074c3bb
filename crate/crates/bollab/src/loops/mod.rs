//! Local analytic Bol loops: composition laws (closed-form and
//! BCH-generated), loop identity checks, divisions, principal isotopes, and
//! tangent-tensor extraction by jets.

pub mod as_printed;
pub mod bch;
pub mod laws;
pub mod newton;
pub mod rightalt;

pub use bch::{bch, bch_f64, F64Bracket, UnsupportedOrder};
pub use laws::{Branch, HeisRot, LoopError, RightAltLaw, TransBoost, TypeIFamily, TypeII5d, TypeIICase, Vii6AsPrinted};
pub use newton::SolveError;
pub use rightalt::{bol_from_right_alt, RightAltAlgebra, RightAltError};

use serde::{Deserialize, Serialize};

use crate::envelope::EnvelopePair;
use crate::linalg::vec_ops;
use crate::sample::{self, Sampler};
use crate::structures::BolAlgebra;

/// Where a loop's composition law comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LoopSource {
    ClosedForm(String),
    BchGenerated { order: usize },
    UserSupplied,
}

/// Numeric data of an envelope pair, for the generic (BCH + Newton) path.
#[derive(Debug, Clone)]
pub struct GenericPairData {
    pub bracket: F64Bracket,
    /// Rows are basis vectors of the tangent part, in `G` coordinates.
    pub b_basis: Vec<Vec<f64>>,
    pub h_basis: Vec<Vec<f64>>,
    pub order: usize,
}

impl GenericPairData {
    pub fn from_pair(p: &EnvelopePair, order: usize) -> Self {
        GenericPairData {
            bracket: F64Bracket::from_lie(&p.algebra),
            b_basis: p.tangent.basis().iter().map(|v| vec_ops::to_f64(v)).collect(),
            h_basis: p.subalgebra.basis().iter().map(|v| vec_ops::to_f64(v)).collect(),
            order,
        }
    }

    fn dim_g(&self) -> usize {
        self.bracket.dim
    }

    fn embed(&self, b_coords: &[f64], h_coords: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let n = self.dim_g();
        let mut vb = vec![0.0; n];
        for (c, row) in b_coords.iter().zip(&self.b_basis) {
            for i in 0..n {
                vb[i] += c * row[i];
            }
        }
        let mut vh = vec![0.0; n];
        for (c, row) in h_coords.iter().zip(&self.h_basis) {
            for i in 0..n {
                vh[i] += c * row[i];
            }
        }
        (vb, vh)
    }

    /// Factor `g = exp(b) exp(h)` by Newton in the `(b, h)` coordinates;
    /// returns both coordinate vectors.
    pub fn factor(&self, g: &[f64]) -> Result<(Vec<f64>, Vec<f64>), LoopError> {
        let nb = self.b_basis.len();
        let nh = self.h_basis.len();
        if nh == 0 {
            // g is already in B.
            return Ok((project_coords(&self.b_basis, g)?, Vec::new()));
        }
        let order = self.order;
        let f = |x: &[f64]| -> Option<Vec<f64>> {
            let (vb, vh) = self.embed(&x[..nb], &x[nb..]);
            let prod = bch_f64(&vb, &vh, &self.bracket, order).ok()?;
            Some(prod.iter().zip(g).map(|(a, b)| a - b).collect())
        };
        let mut x0 = vec![0.0; nb + nh];
        let approx = project_coords_least_squares(&self.b_basis, g);
        x0[..nb].copy_from_slice(&approx[..nb.min(approx.len())]);
        let sol = newton::newton_system(f, &x0).map_err(LoopError::Solve)?;
        Ok((sol[..nb].to_vec(), sol[nb..].to_vec()))
    }

    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let (va, _) = self.embed(a, &[]);
        let (vb, _) = self.embed(b, &[]);
        let g = bch_f64(&va, &vb, &self.bracket, self.order)
            .map_err(|_| LoopError::OutsideDomain)?;
        Ok(self.factor(&g)?.0)
    }
}

/// Exact coordinates of `g` in a spanning row set (fails when outside).
fn project_coords(basis: &[Vec<f64>], g: &[f64]) -> Result<Vec<f64>, LoopError> {
    let coords = project_coords_least_squares(basis, g);
    // residual check
    let n = g.len();
    let mut r = g.to_vec();
    for (c, row) in coords.iter().zip(basis) {
        for i in 0..n {
            r[i] -= c * row[i];
        }
    }
    if newton::max_abs(&r) > 1e-9 {
        return Err(LoopError::OutsideDomain);
    }
    Ok(coords)
}

fn project_coords_least_squares(basis: &[Vec<f64>], g: &[f64]) -> Vec<f64> {
    let k = basis.len();
    if k == 0 {
        return Vec::new();
    }
    let mut gram = vec![vec![0.0; k + 1]; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = basis[i].iter().zip(&basis[j]).map(|(a, b)| a * b).sum();
        }
        gram[i][k] = basis[i].iter().zip(g).map(|(a, b)| a * b).sum();
    }
    for col in 0..k {
        let piv = (col..k)
            .max_by(|&r, &s| gram[r][col].abs().partial_cmp(&gram[s][col].abs()).unwrap())
            .unwrap();
        gram.swap(col, piv);
        if gram[col][col].abs() < 1e-300 {
            continue;
        }
        for r in 0..k {
            if r != col {
                let f = gram[r][col] / gram[col][col];
                for c in col..=k {
                    gram[r][c] -= f * gram[col][c];
                }
            }
        }
    }
    (0..k)
        .map(|i| if gram[i][i].abs() < 1e-300 { 0.0 } else { gram[i][k] / gram[i][i] })
        .collect()
}

/// A composition law, dispatched by family.
#[derive(Debug, Clone)]
pub enum LoopLaw {
    Abelian { dim: usize },
    TypeI(TypeIFamily),
    TypeIICase(TypeIICase),
    TypeII5d(TypeII5d),
    TransBoost(TransBoost),
    HeisRot(HeisRot),
    RightAlt(RightAltLaw),
    Vii6AsPrinted(Vii6AsPrinted),
    Generic(GenericPairData),
    /// The negative control `x * y = x + y + x1^2 y2 e1`.
    PerturbedAbelian { dim: usize },
    /// Internal dispatch for the as-printed variant probes.
    AsPrintedProbe(u8),
    Isotope(Box<IsotopeLaw>),
}

#[derive(Debug, Clone)]
pub struct IsotopeLaw {
    pub base: AnalyticLoop,
    pub f: Vec<f64>,
    /// `f * f`, the isotope's unit before recentering.
    pub unit: Vec<f64>,
}

/// A local analytic loop: a composition law on a neighborhood of 0 with unit
/// at the origin.
#[derive(Debug, Clone)]
pub struct AnalyticLoop {
    pub dim: usize,
    pub law: LoopLaw,
    pub domain_radius: f64,
    pub source: LoopSource,
}

impl AnalyticLoop {
    pub fn new(dim: usize, law: LoopLaw, source: LoopSource) -> Self {
        AnalyticLoop { dim, law, domain_radius: 0.1, source }
    }

    pub fn compose(&self, x: &[f64], y: &[f64]) -> Result<Vec<f64>, LoopError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(LoopError::Dimension { expected: self.dim, got: x.len().max(y.len()) });
        }
        match &self.law {
            LoopLaw::Abelian { .. } => Ok(x.iter().zip(y).map(|(a, b)| a + b).collect()),
            LoopLaw::TypeI(f) => f.compose(x, y),
            LoopLaw::TypeIICase(f) => f.compose(x, y),
            LoopLaw::TypeII5d(f) => f.compose(x, y),
            LoopLaw::TransBoost(f) => f.compose(x, y),
            LoopLaw::HeisRot(f) => f.compose(x, y),
            LoopLaw::RightAlt(f) => Ok(f.compose(x, y)),
            LoopLaw::Vii6AsPrinted(f) => f.compose(x, y),
            LoopLaw::Generic(f) => f.compose(x, y),
            LoopLaw::PerturbedAbelian { .. } => {
                let mut out: Vec<f64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                out[0] += x[0] * x[0] * y[1];
                Ok(out)
            }
            LoopLaw::AsPrintedProbe(which) => as_printed::probe_compose(*which, x, y),
            LoopLaw::Isotope(iso) => {
                let xs = vec_add(x, &iso.unit);
                let ys = vec_add(y, &iso.unit);
                let xf = right_divide(&iso.base, &iso.f, &xs)?;
                let fy = left_divide(&iso.base, &iso.f, &ys)?;
                let out = iso.base.compose(&xf, &fy)?;
                Ok(vec_sub(&out, &iso.unit))
            }
        }
    }
}

fn vec_add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Solve `a * x = b` by Newton.
pub fn left_divide(loop_: &AnalyticLoop, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    let f = |x: &[f64]| -> Option<Vec<f64>> {
        let ax = loop_.compose(a, x).ok()?;
        Some(ax.iter().zip(b).map(|(p, q)| p - q).collect())
    };
    let x0 = vec_sub(b, a);
    newton::newton_system(f, &x0).map_err(LoopError::Solve)
}

/// Solve `a * x = 0`.
pub fn inverse(loop_: &AnalyticLoop, a: &[f64]) -> Result<Vec<f64>, LoopError> {
    left_divide(loop_, a, &vec![0.0; loop_.dim])
}

/// Solve `x * a = b` through the Bol-loop formula
/// `x = a^{-1} * ((a * b) * a^{-1})`.
pub fn right_divide(loop_: &AnalyticLoop, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
    let ainv = inverse(loop_, a)?;
    let ab = loop_.compose(a, b)?;
    let ab_ainv = loop_.compose(&ab, &ainv)?;
    loop_.compose(&ainv, &ab_ainv)
}

/// Solve `x * a = b` directly by Newton (cross-check for `right_divide`).
pub fn right_divide_newton(
    loop_: &AnalyticLoop,
    a: &[f64],
    b: &[f64],
) -> Result<Vec<f64>, LoopError> {
    let f = |x: &[f64]| -> Option<Vec<f64>> {
        let xa = loop_.compose(x, a).ok()?;
        Some(xa.iter().zip(b).map(|(p, q)| p - q).collect())
    };
    let x0 = vec_sub(b, a);
    newton::newton_system(f, &x0).map_err(LoopError::Solve)
}

/// Outcome of a sampled identity check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_residual: f64,
    pub samples: usize,
    pub skipped: usize,
    pub tol: f64,
    pub pass: bool,
}

impl ResidualReport {
    fn from_max(max_residual: f64, samples: usize, skipped: usize, tol: f64) -> Self {
        ResidualReport { max_residual, samples, skipped, tol, pass: max_residual <= tol }
    }
}

/// Max residual of the left Bol identity
/// `a * (b * (a * c)) = (a * (b * a)) * c` over sampled triples.
pub fn check_left_bol(
    loop_: &AnalyticLoop,
    samples: usize,
    radius: f64,
    tol: f64,
    rng: &mut Sampler,
) -> ResidualReport {
    let mut max_res: f64 = 0.0;
    let mut skipped = 0usize;
    for _ in 0..samples {
        let a = sample::f64_point(rng, loop_.dim, radius);
        let b = sample::f64_point(rng, loop_.dim, radius);
        let c = sample::f64_point(rng, loop_.dim, radius);
        let lhs = loop_
            .compose(&a, &c)
            .and_then(|ac| loop_.compose(&b, &ac))
            .and_then(|bac| loop_.compose(&a, &bac));
        let rhs = loop_
            .compose(&b, &a)
            .and_then(|ba| loop_.compose(&a, &ba))
            .and_then(|aba| loop_.compose(&aba, &c));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let res = l.iter().zip(&r).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
                max_res = max_res.max(res);
            }
            _ => skipped += 1,
        }
    }
    ResidualReport::from_max(max_res, samples, skipped, tol)
}

/// Max residual of the two-sided unit law over sampled points.
pub fn check_unit(
    loop_: &AnalyticLoop,
    samples: usize,
    radius: f64,
    tol: f64,
    rng: &mut Sampler,
) -> ResidualReport {
    let zero = vec![0.0; loop_.dim];
    let mut max_res: f64 = 0.0;
    let mut skipped = 0usize;
    for _ in 0..samples {
        let y = sample::f64_point(rng, loop_.dim, radius);
        match (loop_.compose(&zero, &y), loop_.compose(&y, &zero)) {
            (Ok(l), Ok(r)) => {
                let res = l
                    .iter()
                    .zip(&y)
                    .chain(r.iter().zip(&y))
                    .fold(0.0f64, |m, (x, t)| m.max((x - t).abs()));
                max_res = max_res.max(res);
            }
            _ => skipped += 1,
        }
    }
    ResidualReport::from_max(max_res, samples, skipped, tol)
}

/// Power associativity: `a^m * a^r = a^{m+r}` for `|m|, |r| <= max_m`,
/// powers by `a^m = a^{m-1} * a` and `a^{-m} = (a^{-1})^m`.
pub fn check_power_assoc(
    loop_: &AnalyticLoop,
    samples: usize,
    radius: f64,
    max_m: i64,
    tol: f64,
    rng: &mut Sampler,
) -> ResidualReport {
    let mut max_res: f64 = 0.0;
    let mut skipped = 0usize;
    'outer: for _ in 0..samples {
        let a = sample::f64_point(rng, loop_.dim, radius);
        let Ok(powers) = power_table(loop_, &a, max_m) else {
            skipped += 1;
            continue;
        };
        for m in -max_m..=max_m {
            for r in -max_m..=max_m {
                let s = m + r;
                if s.abs() > max_m {
                    continue;
                }
                let am = &powers[(m + max_m) as usize];
                let ar = &powers[(r + max_m) as usize];
                let asum = &powers[(s + max_m) as usize];
                match loop_.compose(am, ar) {
                    Ok(prod) => {
                        let res = prod
                            .iter()
                            .zip(asum)
                            .fold(0.0f64, |mx, (x, y)| mx.max((x - y).abs()));
                        max_res = max_res.max(res);
                    }
                    Err(_) => {
                        skipped += 1;
                        continue 'outer;
                    }
                }
            }
        }
    }
    ResidualReport::from_max(max_res, samples, skipped, tol)
}

fn power_table(loop_: &AnalyticLoop, a: &[f64], max_m: i64) -> Result<Vec<Vec<f64>>, LoopError> {
    let mut table = vec![vec![0.0; loop_.dim]; (2 * max_m + 1) as usize];
    let ainv = inverse(loop_, a)?;
    for m in 1..=max_m {
        let prev = table[(m - 1 + max_m) as usize].clone();
        table[(m + max_m) as usize] = loop_.compose(&prev, a)?;
        let prev_neg = table[(-m + 1 + max_m) as usize].clone();
        table[(-m + max_m) as usize] = loop_.compose(&prev_neg, &ainv)?;
    }
    Ok(table)
}

/// Order-3 Taylor data of a composition law at the origin:
/// `(x y)^i = x^i + y^i + tau^i_jk x^j y^k + mu^i_jkl x^j x^k y^l
///  + nu^i_jkl x^j y^k y^l + O(4)`.
#[derive(Debug, Clone)]
pub struct TaylorJet {
    pub dim: usize,
    /// `tau[i][j][k]`: coefficient of `x_j y_k` in coordinate `i`.
    pub tau: Vec<Vec<Vec<f64>>>,
    /// Antisymmetrized part `alpha[i][j][k] = (tau[i][j][k] - tau[i][k][j]) / 2`.
    pub alpha: Vec<Vec<Vec<f64>>>,
    /// `mu[i][j][k][l]`: coefficient of `x_j x_k y_l`, symmetric in `j, k`.
    pub mu: Vec<Vec<Vec<Vec<f64>>>>,
    /// `nu[i][j][k][l]`: coefficient of `x_j y_k y_l`, symmetric in `k, l`.
    pub nu: Vec<Vec<Vec<Vec<f64>>>>,
}

impl TaylorJet {
    /// Evaluate the jet.
    pub fn eval(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.dim;
        let mut out: Vec<f64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[i] += self.tau[i][j][k] * x[j] * y[k];
                    for l in 0..n {
                        out[i] += self.mu[i][j][k][l] * x[j] * x[k] * y[l]
                            + self.nu[i][j][k][l] * x[j] * y[k] * y[l];
                    }
                }
            }
        }
        out
    }
}

/// Tangent tensors extracted from a loop by Richardson-extrapolated central
/// differences of the quotient curves.
#[derive(Debug, Clone)]
pub struct TangentTensors {
    pub jet: TaylorJet,
    /// `dot[i][j][k]`: coefficient of `e_i` in `e_j . e_k`.
    pub dot: Vec<Vec<Vec<f64>>>,
    /// `triple[i][j][k][l]`: coefficient of `e_i` in `(e_j, e_k, e_l)`.
    pub triple: Vec<Vec<Vec<Vec<f64>>>>,
}

/// Extract the tangent Bol operations:
/// the commutator from `(b t . a t) \ (a t . b t) = t^2 [x,y] + O(t^4)` after
/// symmetrization, the bracket-style triple from
/// `[a(t) (b(t) c(t))] \ [(a(t) b(t)) c(t)] = t^3 <x,y,z> + O(t^5)` after
/// antisymmetrization, and the stored triple via
/// `(x,y,z) = (x.y).z - 2<x,y,z>`. One Richardson level each.
pub fn tangent_tensors(loop_: &AnalyticLoop, step: f64) -> Result<TangentTensors, LoopError> {
    let n = loop_.dim;
    let e = |i: usize, t: f64| -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i] = t;
        v
    };
    // Commutator curve value at parameter t for basis directions (j, k).
    let comm = |j: usize, k: usize, t: f64| -> Result<Vec<f64>, LoopError> {
        let a = e(j, t);
        let b = e(k, t);
        let ab = loop_.compose(&a, &b)?;
        let ba = loop_.compose(&b, &a)?;
        left_divide(loop_, &ba, &ab)
    };
    let mut dot = vec![vec![vec![0.0; n]; n]; n];
    for j in 0..n {
        for k in 0..n {
            if j == k {
                continue;
            }
            let estimate = |t: f64| -> Result<Vec<f64>, LoopError> {
                let wp = comm(j, k, t)?;
                let wm = comm(j, k, -t)?;
                Ok((0..n).map(|i| (wp[i] + wm[i]) / (2.0 * t * t)).collect())
            };
            let c1 = estimate(step)?;
            let c2 = estimate(step / 2.0)?;
            for i in 0..n {
                dot[i][j][k] = (4.0 * c2[i] - c1[i]) / 3.0;
            }
        }
    }
    // Associator curve for the bracket-style triple.
    let assoc = |j: usize, k: usize, l: usize, t: f64| -> Result<Vec<f64>, LoopError> {
        let a = e(j, t);
        let b = e(k, t);
        let c = e(l, t);
        let bc = loop_.compose(&b, &c)?;
        let a_bc = loop_.compose(&a, &bc)?;
        let ab = loop_.compose(&a, &b)?;
        let ab_c = loop_.compose(&ab, &c)?;
        left_divide(loop_, &a_bc, &ab_c)
    };
    let mut angle = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                let estimate = |t: f64| -> Result<Vec<f64>, LoopError> {
                    let wp = assoc(j, k, l, t)?;
                    let wm = assoc(j, k, l, -t)?;
                    Ok((0..n).map(|i| (wp[i] - wm[i]) / (2.0 * t * t * t)).collect())
                };
                let c1 = estimate(step)?;
                let c2 = estimate(step / 2.0)?;
                for i in 0..n {
                    angle[i][j][k][l] = (4.0 * c2[i] - c1[i]) / 3.0;
                }
            }
        }
    }
    // (x,y,z) = (x.y).z - 2<x,y,z>.
    let mut triple = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                for i in 0..n {
                    let mut xy_z = 0.0;
                    for m in 0..n {
                        xy_z += dot[m][j][k] * dot[i][m][l];
                    }
                    triple[i][j][k][l] = xy_z - 2.0 * angle[i][j][k][l];
                }
            }
        }
    }
    // Second-order jet by central differences of the law itself.
    let mut tau = vec![vec![vec![0.0; n]; n]; n];
    for j in 0..n {
        for k in 0..n {
            let eval = |s: f64, t: f64| -> Result<Vec<f64>, LoopError> {
                loop_.compose(&e(j, s), &e(k, t))
            };
            let h = step;
            let pp = eval(h, h)?;
            let pm = eval(h, -h)?;
            let mp = eval(-h, h)?;
            let mm = eval(-h, -h)?;
            for i in 0..n {
                tau[i][j][k] = (pp[i] - pm[i] - mp[i] + mm[i]) / (4.0 * h * h);
            }
        }
    }
    let mut alpha = vec![vec![vec![0.0; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                alpha[i][j][k] = (tau[i][j][k] - tau[i][k][j]) / 2.0;
            }
        }
    }
    // Third-order coefficients by polarization: f(x, y) - linear - bilinear
    // has the expansion mu(x,x,y) + nu(x,y,y) + O(4); scaling x and y
    // independently separates the two.
    let rem = |x: &[f64], y: &[f64]| -> Result<Vec<f64>, LoopError> {
        let full = loop_.compose(x, y)?;
        Ok((0..n)
            .map(|i| {
                let mut v = full[i] - x[i] - y[i];
                for j in 0..n {
                    for k in 0..n {
                        v -= tau[i][j][k] * x[j] * y[k];
                    }
                }
                v
            })
            .collect())
    };
    let h = step;
    let mut mu = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    let mut nu = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for x_j in 0..n {
        for y_l in 0..n {
            // mu[i][j][j][l] and nu[i][j][l][l] from single-direction probes
            // g(s e_j, t e_l) = s^2 t mu_jjl + s t^2 nu_jll + O(4).
            let probe = |sv: f64, tv: f64| -> Result<Vec<f64>, LoopError> {
                let mut x = vec![0.0; n];
                let mut y = vec![0.0; n];
                x[x_j] = sv;
                y[y_l] = tv;
                rem(&x, &y)
            };
            let g11 = probe(h, h)?;
            let g1m = probe(h, -h)?;
            let gm1 = probe(-h, h)?;
            let gmm = probe(-h, -h)?;
            for i in 0..n {
                let mu_val = (g11[i] - g1m[i] + gm1[i] - gmm[i]) / (4.0 * h * h * h);
                let nu_val = (g11[i] + g1m[i] - gm1[i] - gmm[i]) / (4.0 * h * h * h);
                mu[i][x_j][x_j][y_l] = mu_val;
                nu[i][x_j][y_l][y_l] = nu_val;
            }
        }
    }
    // Mixed second slots by polarization: mu(e_j, e_k, e_l) for j < k from
    // the (e_j + e_k) probe minus the pure terms; likewise for nu.
    for j in 0..n {
        for k in j + 1..n {
            for l in 0..n {
                let probe = |sv: f64, tv: f64| -> Result<Vec<f64>, LoopError> {
                    let mut x = vec![0.0; n];
                    let mut y = vec![0.0; n];
                    x[j] = sv;
                    x[k] = sv;
                    y[l] = tv;
                    rem(&x, &y)
                };
                let g11 = probe(h, h)?;
                let g1m = probe(h, -h)?;
                let gm1 = probe(-h, h)?;
                let gmm = probe(-h, -h)?;
                for i in 0..n {
                    let total = (g11[i] - g1m[i] + gm1[i] - gmm[i]) / (4.0 * h * h * h);
                    let mixed = total - mu[i][j][j][l] - mu[i][k][k][l];
                    mu[i][j][k][l] = mixed / 2.0;
                    mu[i][k][j][l] = mixed / 2.0;
                }
                let probe_y = |sv: f64, tv: f64| -> Result<Vec<f64>, LoopError> {
                    let mut x = vec![0.0; n];
                    let mut y = vec![0.0; n];
                    x[l] = sv;
                    y[j] = tv;
                    y[k] = tv;
                    rem(&x, &y)
                };
                let g11 = probe_y(h, h)?;
                let g1m = probe_y(h, -h)?;
                let gm1 = probe_y(-h, h)?;
                let gmm = probe_y(-h, -h)?;
                for i in 0..n {
                    let total = (g11[i] + g1m[i] - gm1[i] - gmm[i]) / (4.0 * h * h * h);
                    let mixed = total - nu[i][l][j][j] - nu[i][l][k][k];
                    nu[i][l][j][k] = mixed / 2.0;
                    nu[i][l][k][j] = mixed / 2.0;
                }
            }
        }
    }
    Ok(TangentTensors { jet: TaylorJet { dim: n, tau, alpha, mu, nu }, dot, triple })
}

/// Max difference between extracted float tensors and an exact Bol algebra.
pub fn tangent_distance(t: &TangentTensors, b: &BolAlgebra) -> f64 {
    let n = b.dim;
    let mut max: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                max = max.max((t.dot[i][j][k] - b.dot.get(i, j, k).to_f64()).abs());
                for l in 0..n {
                    max = max
                        .max((t.triple[i][j][k][l] - b.triple.get(i, j, k, l).to_f64()).abs());
                }
            }
        }
    }
    max
}

/// Which composition path to take in [`loop_compose`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeMethod {
    /// Truncated-BCH group law plus Newton factorization of the pair.
    Generic { order: usize },
    /// The supplied closed-form law.
    ClosedForm,
}

/// Compose two tangent points through the loop of an envelope pair, either
/// generically (BCH + Newton projection onto the tangent section) or through
/// a closed-form law. The two paths agree to high accuracy wherever the
/// truncated group law is exact (every nilpotent envelope in the catalog).
pub fn loop_compose(
    pair: &EnvelopePair,
    closed_form: Option<&AnalyticLoop>,
    a: &[f64],
    b: &[f64],
    method: ComposeMethod,
) -> Result<Vec<f64>, LoopError> {
    match method {
        ComposeMethod::Generic { order } => {
            GenericPairData::from_pair(pair, order).compose(a, b)
        }
        ComposeMethod::ClosedForm => match closed_form {
            Some(l) => l.compose(a, b),
            None => Err(LoopError::NoClosedForm),
        },
    }
}

/// Factor a group element `g` (in envelope coordinates) as
/// `g = exp(b) exp(h)` with `b` in the tangent part and `h` in the
/// subalgebra, through the truncated-BCH group law and Newton iteration.
/// Returns the coordinate vectors of `b` and `h` in the pair's bases.
pub fn factor_element(
    pair: &EnvelopePair,
    g: &[f64],
    order: usize,
) -> Result<(Vec<f64>, Vec<f64>), LoopError> {
    GenericPairData::from_pair(pair, order).factor(g)
}

/// The solved scalar parameter of a law's implicit factorization relation
/// for the product `exp(a) exp(b)`, to |residual| <= 1e-13 by safeguarded
/// Newton with bisection fallback inside [-1, 1]. `None` for laws whose
/// factorization is linear (no implicit relation); an error signals no root
/// in the bracket.
pub fn solve_implicit_parameter(
    law: &LoopLaw,
    a: &[f64],
    b: &[f64],
) -> Result<Option<f64>, LoopError> {
    match law {
        LoopLaw::TransBoost(f) => f.implicit_parameter(a, b),
        LoopLaw::HeisRot(f) => f.implicit_parameter(a, b),
        _ => Ok(None),
    }
}

/// The implicit relation's residual at `s`, exposed for independent root
/// checks; `None` when the law has no implicit relation.
pub fn implicit_residual_of(law: &LoopLaw, a: &[f64], b: &[f64], s: f64) -> Option<f64> {
    match law {
        LoopLaw::TransBoost(f) => f.implicit_residual(a, b, s),
        LoopLaw::HeisRot(f) => f.implicit_residual(a, b, s),
        _ => None,
    }
}

/// The principal isotope `x (.) y = (x / f) * (f \ y)` with unit `f * f`,
/// recentered to the origin by coordinate translation.
pub fn principal_isotope(loop_: &AnalyticLoop, f: &[f64]) -> Result<AnalyticLoop, LoopError> {
    let unit = loop_.compose(f, f)?;
    Ok(AnalyticLoop {
        dim: loop_.dim,
        law: LoopLaw::Isotope(Box::new(IsotopeLaw {
            base: loop_.clone(),
            f: f.to_vec(),
            unit,
        })),
        domain_radius: loop_.domain_radius / 2.0,
        source: LoopSource::UserSupplied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    fn iii5_loop() -> AnalyticLoop {
        AnalyticLoop::new(
            3,
            LoopLaw::TypeI(TypeIFamily::Iii5),
            LoopSource::ClosedForm("LOOP/III.5".into()),
        )
    }

    #[test]
    fn left_bol_holds_for_coset_law() {
        let l = iii5_loop();
        let mut rng = sample::sampler(42);
        let rep = check_left_bol(&l, 200, 0.1, 1e-10, &mut rng);
        assert!(rep.pass, "residual {}", rep.max_residual);
        assert_eq!(rep.skipped, 0);
    }

    #[test]
    fn perturbed_law_fails_left_bol() {
        let l = AnalyticLoop::new(3, LoopLaw::PerturbedAbelian { dim: 3 }, LoopSource::UserSupplied);
        let mut rng = sample::sampler(42);
        let rep = check_left_bol(&l, 500, 0.1, 1e-9, &mut rng);
        assert!(!rep.pass);
        assert!(rep.max_residual > 1e-3 * 1e-2);
    }

    #[test]
    fn divisions_round_trip() {
        let l = iii5_loop();
        let a = [0.04, -0.03, 0.06];
        let b = [0.01, 0.02, -0.05];
        let x = left_divide(&l, &a, &b).unwrap();
        let back = l.compose(&a, &x).unwrap();
        for i in 0..3 {
            assert!((back[i] - b[i]).abs() < 1e-11);
        }
        let ab = l.compose(&a, &b).unwrap();
        let a2 = right_divide(&l, &b, &ab).unwrap();
        for i in 0..3 {
            assert!((a2[i] - a[i]).abs() < 1e-9);
        }
        let a3 = right_divide_newton(&l, &b, &ab).unwrap();
        for i in 0..3 {
            assert!((a3[i] - a2[i]).abs() < 1e-9);
        }
    }

    #[test]
    fn tangent_tensors_of_iii5() {
        let l = iii5_loop();
        let t = tangent_tensors(&l, 1e-3).unwrap();
        // e1 . e3 = e1 and e2 . e3 = e2, zero triple.
        assert!((t.dot[0][0][2] - 1.0).abs() < 1e-6);
        assert!((t.dot[1][1][2] - 1.0).abs() < 1e-6);
        assert!(t.dot[0][1][2].abs() < 1e-6);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for m in 0..3 {
                        assert!(t.triple[i][j][k][m].abs() < 1e-5);
                    }
                }
            }
        }
    }

    #[test]
    fn isotope_keeps_unit_and_bol() {
        let l = iii5_loop();
        let iso = principal_isotope(&l, &[0.05, 0.0, 0.05]).unwrap();
        let mut rng = sample::sampler(7);
        let unit_rep = check_unit(&iso, 50, 0.05, 1e-10, &mut rng);
        assert!(unit_rep.pass, "unit residual {}", unit_rep.max_residual);
        let rep = check_left_bol(&iso, 60, 0.04, 1e-8, &mut rng);
        assert!(rep.pass, "bol residual {}", rep.max_residual);
    }
}
