//! Newton solvers for the loop machinery: a multivariate solver with
//! finite-difference Jacobians, and a safeguarded scalar solver with a
//! bisection fallback for the implicit parameters of the closed-form laws.

/// Convergence tolerance used by every Newton solve in this module.
pub const NEWTON_TOL: f64 = 1e-13;
/// Finite-difference step for numeric Jacobians.
pub const FD_STEP: f64 = 1e-7;
/// Iteration cap; exceeding it signals the input left the local chart.
pub const MAX_ITER: usize = 50;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolveError {
    #[error("no convergence after {0} iterations (point outside the local chart?)")]
    NoConvergence(usize),
    #[error("no root inside the bracket [{0}, {1}]")]
    NoRoot(f64, f64),
    #[error("function evaluation failed during the solve")]
    EvalFailed,
}

/// Solve `f(x) = 0` for square systems by damped Newton with a
/// finite-difference Jacobian.
pub fn newton_system<F>(f: F, x0: &[f64]) -> Result<Vec<f64>, SolveError>
where
    F: Fn(&[f64]) -> Option<Vec<f64>>,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut fx = f(&x).ok_or(SolveError::EvalFailed)?;
    for _ in 0..MAX_ITER {
        let norm = max_abs(&fx);
        if norm <= NEWTON_TOL {
            return Ok(x);
        }
        // Finite-difference Jacobian, column by column.
        let mut jac = vec![vec![0.0; n]; n];
        for j in 0..n {
            let mut xp = x.clone();
            xp[j] += FD_STEP;
            let fp = f(&xp).ok_or(SolveError::EvalFailed)?;
            for i in 0..n {
                jac[i][j] = (fp[i] - fx[i]) / FD_STEP;
            }
        }
        let Some(step) = solve_dense(&mut jac, &fx) else {
            return Err(SolveError::NoConvergence(MAX_ITER));
        };
        // Damped update: halve until the residual does not blow up.
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..12 {
            let xn: Vec<f64> = x.iter().zip(&step).map(|(a, s)| a - lambda * s).collect();
            if let Some(fn_) = f(&xn) {
                if max_abs(&fn_) <= (1.0 - 0.25 * lambda) * norm || max_abs(&fn_) <= NEWTON_TOL {
                    x = xn;
                    fx = fn_;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(SolveError::NoConvergence(MAX_ITER));
        }
    }
    if max_abs(&fx) <= NEWTON_TOL {
        Ok(x)
    } else {
        Err(SolveError::NoConvergence(MAX_ITER))
    }
}

/// Gaussian elimination with partial pivoting; consumes the matrix.
fn solve_dense(a: &mut [Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let piv = (col..n).max_by(|&r, &s| a[r][col].abs().partial_cmp(&a[s][col].abs()).unwrap())?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        rhs.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = rhs[i];
        for j in i + 1..n {
            s -= a[i][j] * x[j];
        }
        x[i] = s / a[i][i];
    }
    Some(x)
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Safeguarded scalar Newton: iterate from `guess`, keep the iterate inside
/// the bracket, and fall back to bisection whenever Newton leaves it or
/// stalls. The bracket is scanned for a sign change if the endpoints do not
/// provide one.
pub fn newton_scalar<F>(f: F, guess: f64, lo: f64, hi: f64) -> Result<f64, SolveError>
where
    F: Fn(f64) -> Option<f64>,
{
    let eval = |x: f64| f(x).filter(|v| v.is_finite());
    // Plain Newton from the guess often lands immediately; try it first.
    let mut x = guess.clamp(lo, hi);
    for _ in 0..MAX_ITER {
        let Some(fx) = eval(x) else { break };
        if fx.abs() <= NEWTON_TOL {
            return Ok(x);
        }
        let h = FD_STEP * (1.0 + x.abs());
        let Some(fph) = eval(x + h) else { break };
        let d = (fph - fx) / h;
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let xn = x - fx / d;
        if !(lo..=hi).contains(&xn) || !xn.is_finite() {
            break;
        }
        if (xn - x).abs() <= NEWTON_TOL * (1.0 + x.abs()) {
            x = xn;
            if let Some(v) = eval(x) {
                if v.abs() <= 1e-10 {
                    return Ok(x);
                }
            }
            break;
        }
        x = xn;
    }
    // Bracket a sign change by scanning, then bisect with Newton polishing.
    let segments = 64;
    let mut a = lo;
    let mut fa = eval(a).ok_or(SolveError::EvalFailed)?;
    if fa.abs() <= NEWTON_TOL {
        return Ok(a);
    }
    for k in 1..=segments {
        let b = lo + (hi - lo) * k as f64 / segments as f64;
        let Some(fb) = eval(b) else {
            a = b;
            fa = f64::NAN;
            continue;
        };
        if fb.abs() <= NEWTON_TOL {
            return Ok(b);
        }
        if fa.is_finite() && fa * fb < 0.0 {
            return bisect_polish(&eval, a, b, fa);
        }
        a = b;
        fa = fb;
    }
    Err(SolveError::NoRoot(lo, hi))
}

fn bisect_polish<F>(eval: &F, mut a: f64, mut b: f64, mut fa: f64) -> Result<f64, SolveError>
where
    F: Fn(f64) -> Option<f64>,
{
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let Some(fm) = eval(mid) else { return Err(SolveError::EvalFailed) };
        if fm.abs() <= NEWTON_TOL || (b - a).abs() < 1e-16 {
            return Ok(mid);
        }
        if fa * fm < 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    let mid = 0.5 * (a + b);
    let fm = eval(mid).ok_or(SolveError::EvalFailed)?;
    if fm.abs() <= 1e-10 {
        Ok(mid)
    } else {
        Err(SolveError::NoConvergence(200))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_root_of_transcendental() {
        // p + sin(p)/2 = 0.3
        let f = |p: f64| Some(p + 0.5 * p.sin() - 0.3);
        let p = newton_scalar(f, 0.0, -1.0, 1.0).unwrap();
        assert!((p + 0.5 * p.sin() - 0.3).abs() <= 1e-12);
    }

    #[test]
    fn scalar_no_root_reported() {
        let f = |_p: f64| Some(1.5);
        assert!(matches!(newton_scalar(f, 0.0, -1.0, 1.0), Err(SolveError::NoRoot(_, _))));
    }

    #[test]
    fn system_quadratic() {
        // x^2 + y - 2 = 0, x - y = 0 has root near (1, 1).
        let f = |v: &[f64]| Some(vec![v[0] * v[0] + v[1] - 2.0, v[0] - v[1]]);
        let r = newton_system(f, &[0.5, 0.2]).unwrap();
        assert!((r[0] - 1.0).abs() < 1e-10 && (r[1] - 1.0).abs() < 1e-10);
    }
}
