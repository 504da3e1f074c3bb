//! Closed-form composition laws of the catalog's local analytic Bol loops.
//!
//! Every law here is the coset-loop `a * b = Pi_B(exp a . exp b)` of a
//! concrete enveloping pair, written out in closed form. The nilpotent
//! families are plain polynomials (their group law is the truncated BCH
//! product, which is exact); the non-nilpotent families work in a product
//! chart `translation x one-parameter action` where the group law, the
//! exponential of the tangent section, and the coset factorization are
//! elementary hyperbolic/trigonometric expressions, with at most one scalar
//! implicit equation solved by safeguarded Newton.
//!
//! Removable singularities (`sinh(u)/u` and friends) switch to series below
//! `|u| < 1e-4`.

use super::newton::{self, SolveError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LoopError {
    #[error("point outside the law's domain (singular denominator)")]
    OutsideDomain,
    #[error("iteration failed: {0}")]
    Solve(#[from] SolveError),
    #[error("dimension mismatch: law expects {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("no closed-form law available for this pair")]
    NoClosedForm,
}

/// Hyperbolic or trigonometric branch of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Hyperbolic,
    Trigonometric,
}

impl Branch {
    /// `R(theta)` on the translation plane: the flow of `[[0,-1],[-1,0]]`
    /// (hyperbolic) or `[[0,1],[-1,0]]` (trigonometric).
    fn rot(self, theta: f64) -> [[f64; 2]; 2] {
        match self {
            Branch::Hyperbolic => {
                let (c, s) = (theta.cosh(), theta.sinh());
                [[c, -s], [-s, c]]
            }
            Branch::Trigonometric => {
                let (c, s) = (theta.cos(), theta.sin());
                [[c, s], [-s, c]]
            }
        }
    }

    /// `phi(theta) = integral of R(tau theta) (1,0) over tau in [0,1]`.
    fn phi(self, theta: f64) -> [f64; 2] {
        match self {
            Branch::Hyperbolic => [sinhc(theta), -coshm1_over(theta)],
            Branch::Trigonometric => [sinc(theta), -versine_over(theta)],
        }
    }

    /// `psi(theta) = integral of R(tau theta) (0,1)`.
    fn psi(self, theta: f64) -> [f64; 2] {
        match self {
            Branch::Hyperbolic => [-coshm1_over(theta), sinhc(theta)],
            Branch::Trigonometric => [versine_over(theta), sinc(theta)],
        }
    }

    /// Central accumulation of the Heisenberg-rotation exponential:
    /// `chi(v) = (sinh v - v) / (2 v^2)` or `(v - sin v) / (2 v^2)`.
    fn chi(self, v: f64) -> f64 {
        match self {
            Branch::Hyperbolic => {
                if v.abs() < 1e-4 {
                    v / 12.0 + v.powi(3) / 240.0
                } else {
                    (v.sinh() - v) / (2.0 * v * v)
                }
            }
            Branch::Trigonometric => {
                if v.abs() < 1e-4 {
                    v / 12.0 - v.powi(3) / 240.0
                } else {
                    (v - v.sin()) / (2.0 * v * v)
                }
            }
        }
    }
}

/// `sinh(t)/t` with the removable singularity filled in.
fn sinhc(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        1.0 + t * t / 6.0
    } else {
        t.sinh() / t
    }
}

/// `sin(t)/t`.
fn sinc(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        1.0 - t * t / 6.0
    } else {
        t.sin() / t
    }
}

/// `(cosh(t) - 1)/t`.
fn coshm1_over(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        t / 2.0 + t * t * t / 24.0
    } else {
        (t.cosh() - 1.0) / t
    }
}

/// `(1 - cos(t))/t`.
fn versine_over(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        t / 2.0 - t * t * t / 24.0
    } else {
        (1.0 - t.cos()) / t
    }
}

fn mat_vec(m: [[f64; 2]; 2], v: [f64; 2]) -> [f64; 2] {
    [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Loop family with a 2-dimensional abelian translation ideal `(e1, e4)` on
/// which `e2`, `e3` act through one shared hyperbolic/trigonometric flow:
/// Types III(+-) (weights `(1, 0)`, `e3` central) and IV(+-) (weights
/// `(1, +-1)`).
///
/// The subalgebra is `h = <e4 + x e1 + y e2 + z e3>`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransBoost {
    pub branch: Branch,
    pub weights: [f64; 2],
    pub h: [f64; 3],
}

impl TransBoost {
    fn theta(&self, c2: f64, c3: f64) -> f64 {
        self.weights[0] * c2 + self.weights[1] * c3
    }

    /// Chart of `exp(t e1 + u e2 + v e3)`: `(w1, u, v, w4)`.
    fn chart(&self, p: &[f64]) -> ([f64; 2], f64, f64) {
        let (t, u, v) = (p[0], p[1], p[2]);
        let th = self.theta(u, v);
        let phi = self.branch.phi(th);
        ([t * phi[0], t * phi[1]], u, v)
    }

    /// Chart of `exp(s (e4 + x e1 + y e2 + z e3))`.
    fn h_chart(&self, s: f64) -> ([f64; 2], f64, f64) {
        let [x, y, z] = self.h;
        let th_rate = self.theta(y, z);
        let th = s * th_rate;
        let phi = self.branch.phi(th);
        let psi = self.branch.psi(th);
        ([s * (x * phi[0] + psi[0]), s * (x * phi[1] + psi[1])], s * y, s * z)
    }

    /// Factor `g = b . h` and return the tangent coordinates of `b`.
    fn factor(&self, gw: [f64; 2], g2: f64, g3: f64) -> Result<Vec<f64>, LoopError> {
        let [x, y, z] = self.h;
        let th_rate = self.theta(y, z);
        let thg = self.theta(g2, g3);
        if th_rate == 0.0 {
            // w_h(s) = s (x, 1): linear 2x2 solve for (t, s).
            let phi = self.branch.phi(thg);
            let r = self.branch.rot(thg);
            let col2 = mat_vec(r, [x, 1.0]);
            let det = phi[0] * col2[1] - phi[1] * col2[0];
            if det.abs() < 1e-12 {
                return Err(LoopError::OutsideDomain);
            }
            let t = (gw[0] * col2[1] - gw[1] * col2[0]) / det;
            let s = (phi[0] * gw[1] - phi[1] * gw[0]) / det;
            Ok(vec![t, g2 - s * y, g3 - s * z])
        } else {
            // Scalar implicit equation in s.
            let residual = |s: f64| -> Option<f64> {
                let th = thg - s * th_rate;
                let (hw, _, _) = self.h_chart(s);
                let r = self.branch.rot(th);
                let rhw = mat_vec(r, hw);
                let rem = [gw[0] - rhw[0], gw[1] - rhw[1]];
                Some(cross2(rem, self.branch.phi(th)))
            };
            let s = newton::newton_scalar(residual, 0.0, -1.0, 1.0)?;
            let th = thg - s * th_rate;
            let (hw, h2, h3) = self.h_chart(s);
            let rhw = mat_vec(self.branch.rot(th), hw);
            let phi = self.branch.phi(th);
            let t = if phi[0].abs() >= phi[1].abs() {
                (gw[0] - rhw[0]) / phi[0]
            } else {
                (gw[1] - rhw[1]) / phi[1]
            };
            Ok(vec![t, g2 - h2, g3 - h3])
        }
    }

    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let (gw, g2, g3) = self.product_chart(a, b);
        self.factor(gw, g2, g3)
    }

    fn product_chart(&self, a: &[f64], b: &[f64]) -> ([f64; 2], f64, f64) {
        let (wa, a2, a3) = self.chart(a);
        let (wb, b2, b3) = self.chart(b);
        let r = self.branch.rot(self.theta(a2, a3));
        let rwb = mat_vec(r, wb);
        ([wa[0] + rwb[0], wa[1] + rwb[1]], a2 + b2, a3 + b3)
    }

    /// Residual of the scalar implicit factorization relation at `s`, for the
    /// product `exp(a) exp(b)`; `None` when this subalgebra leads to a linear
    /// factorization instead.
    pub fn implicit_residual(&self, a: &[f64], b: &[f64], s: f64) -> Option<f64> {
        let [_, y, z] = self.h;
        let th_rate = self.theta(y, z);
        if th_rate == 0.0 {
            return None;
        }
        let (gw, g2, g3) = self.product_chart(a, b);
        let thg = self.theta(g2, g3);
        let th = thg - s * th_rate;
        let (hw, _, _) = self.h_chart(s);
        let rhw = mat_vec(self.branch.rot(th), hw);
        Some(cross2([gw[0] - rhw[0], gw[1] - rhw[1]], self.branch.phi(th)))
    }

    /// Solve the implicit relation for the product `exp(a) exp(b)`.
    pub fn implicit_parameter(&self, a: &[f64], b: &[f64]) -> Result<Option<f64>, LoopError> {
        if self.implicit_residual(a, b, 0.0).is_none() {
            return Ok(None);
        }
        let f = |s: f64| self.implicit_residual(a, b, s);
        Ok(Some(newton::newton_scalar(f, 0.0, -1.0, 1.0)?))
    }
}

/// Loop family over the Heisenberg-rotation group (Type V(+-)): central `e1`,
/// symplectic plane `(e2, e4)` with `[e2,e4] = -e1`, and `e3` acting through
/// the hyperbolic/trigonometric flow. `h = <e4 + x e1 + y e2 + z e3>`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeisRot {
    pub branch: Branch,
    pub h: [f64; 3],
}

impl HeisRot {
    /// omega((a2,a4),(b2,b4)) from `[e2,e4] = -e1`.
    fn omega(a: [f64; 2], b: [f64; 2]) -> f64 {
        a[1] * b[0] - a[0] * b[1]
    }

    /// Chart `(c, w, theta)` of `exp(t e1 + u e2 + v e3)`.
    fn chart(&self, p: &[f64]) -> (f64, [f64; 2], f64) {
        let (t, u, v) = (p[0], p[1], p[2]);
        let phi = self.branch.phi(v);
        (t + u * u * self.branch.chi(v), [u * phi[0], u * phi[1]], v)
    }

    /// Chart of `exp(s (e4 + x e1 + y e2 + z e3))`.
    fn h_chart(&self, s: f64) -> (f64, [f64; 2], f64) {
        let [x, y, z] = self.h;
        if z == 0.0 {
            // Straight line in the symplectic plane; no central accumulation.
            (s * x, [s * y, s], 0.0)
        } else {
            let th = s * z;
            let phi = self.branch.phi(th);
            let psi = self.branch.psi(th);
            let w = [s * (y * phi[0] + psi[0]), s * (y * phi[1] + psi[1])];
            // Central accumulation: c'(sigma) = x + omega(w(sigma), R(sigma z)(y,1))/2,
            // which integrates in closed form when y = 0 (the catalog laws).
            let c = if y == 0.0 {
                let tail = match self.branch {
                    Branch::Hyperbolic => {
                        if th.abs() < 1e-4 {
                            -(th.powi(3) / 6.0 + th.powi(5) / 120.0) / (2.0 * z * z)
                        } else {
                            (th - th.sinh()) / (2.0 * z * z)
                        }
                    }
                    Branch::Trigonometric => {
                        if th.abs() < 1e-4 {
                            (th.powi(3) / 6.0 - th.powi(5) / 120.0) / (2.0 * z * z)
                        } else {
                            (th - th.sin()) / (2.0 * z * z)
                        }
                    }
                };
                s * x + tail
            } else {
                // Not needed by the catalog; integrate numerically (Simpson).
                let mut acc = 0.0;
                let steps = 64;
                let hstep = s / steps as f64;
                let integrand = |sig: f64| {
                    let thl = sig * z;
                    let phil = self.branch.phi(thl);
                    let psil = self.branch.psi(thl);
                    let w_s = [
                        sig * (y * phil[0] + psil[0]),
                        sig * (y * phil[1] + psil[1]),
                    ];
                    let dir = mat_vec(self.branch.rot(thl), [y, 1.0]);
                    HeisRot::omega(w_s, dir) / 2.0
                };
                for k in 0..steps {
                    let s0 = k as f64 * hstep;
                    acc += hstep / 6.0
                        * (integrand(s0)
                            + 4.0 * integrand(s0 + hstep / 2.0)
                            + integrand(s0 + hstep));
                }
                s * x + acc
            };
            (c, w, th)
        }
    }

    fn factor(&self, gc: f64, gw: [f64; 2], gth: f64) -> Result<Vec<f64>, LoopError> {
        let [_, y, z] = self.h;
        if z == 0.0 {
            // v = gth; linear 2x2 in (u, s).
            let v = gth;
            let phi = self.branch.phi(v);
            let col2 = mat_vec(self.branch.rot(v), [y, 1.0]);
            let det = phi[0] * col2[1] - phi[1] * col2[0];
            if det.abs() < 1e-12 {
                return Err(LoopError::OutsideDomain);
            }
            let u = (gw[0] * col2[1] - gw[1] * col2[0]) / det;
            let s = (phi[0] * gw[1] - phi[1] * gw[0]) / det;
            let (ch, hw, _) = self.h_chart(s);
            let bw = [u * phi[0], u * phi[1]];
            let t = gc
                - u * u * self.branch.chi(v)
                - ch
                - HeisRot::omega(bw, mat_vec(self.branch.rot(v), hw)) / 2.0;
            Ok(vec![t, u, v])
        } else {
            let residual = |s: f64| -> Option<f64> {
                let v = gth - s * z;
                let (_, hw, _) = self.h_chart(s);
                let rhw = mat_vec(self.branch.rot(v), hw);
                let rem = [gw[0] - rhw[0], gw[1] - rhw[1]];
                Some(cross2(rem, self.branch.phi(v)))
            };
            let s = newton::newton_scalar(residual, 0.0, -1.0, 1.0)?;
            let v = gth - s * z;
            let (ch, hw, _) = self.h_chart(s);
            let rhw = mat_vec(self.branch.rot(v), hw);
            let phi = self.branch.phi(v);
            let u = if phi[0].abs() >= phi[1].abs() {
                (gw[0] - rhw[0]) / phi[0]
            } else {
                (gw[1] - rhw[1]) / phi[1]
            };
            let bw = [u * phi[0], u * phi[1]];
            let t = gc
                - u * u * self.branch.chi(v)
                - ch
                - HeisRot::omega(bw, rhw) / 2.0;
            Ok(vec![t, u, v])
        }
    }

    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let (gc, gw, gth) = self.product_chart(a, b);
        self.factor(gc, gw, gth)
    }

    fn product_chart(&self, a: &[f64], b: &[f64]) -> (f64, [f64; 2], f64) {
        let (ca, wa, tha) = self.chart(a);
        let (cb, wb, thb) = self.chart(b);
        let rwb = mat_vec(self.branch.rot(tha), wb);
        let gc = ca + cb + HeisRot::omega(wa, rwb) / 2.0;
        (gc, [wa[0] + rwb[0], wa[1] + rwb[1]], tha + thb)
    }

    /// Residual of the scalar implicit factorization relation at `s`;
    /// `None` when the subalgebra has no rotation component.
    pub fn implicit_residual(&self, a: &[f64], b: &[f64], s: f64) -> Option<f64> {
        let [_, _, z] = self.h;
        if z == 0.0 {
            return None;
        }
        let (_, gw, gth) = self.product_chart(a, b);
        let v = gth - s * z;
        let (_, hw, _) = self.h_chart(s);
        let rhw = mat_vec(self.branch.rot(v), hw);
        Some(cross2([gw[0] - rhw[0], gw[1] - rhw[1]], self.branch.phi(v)))
    }

    /// Solve the implicit relation for the product `exp(a) exp(b)`.
    pub fn implicit_parameter(&self, a: &[f64], b: &[f64]) -> Result<Option<f64>, LoopError> {
        if self.implicit_residual(a, b, 0.0).is_none() {
            return Ok(None);
        }
        let f = |s: f64| self.implicit_residual(a, b, s);
        Ok(Some(newton::newton_scalar(f, 0.0, -1.0, 1.0)?))
    }
}

/// Nilpotent Type II family (4-dimensional envelope, class 3): the shared
/// group law with `h = <e4 + axis>` for axis `e3`, `e2`, or `e1`
/// (printed cases 2, 3, 4).
#[derive(Debug, Clone, PartialEq)]
pub struct TypeIICase {
    /// 2, 3, or 4.
    pub case: u8,
}

impl TypeIICase {
    /// `Delta` of `[e2,e3]=e4, [e3,e4]=-e1` in normal coordinates.
    fn delta(x: &[f64], y: &[f64]) -> [f64; 4] {
        let c4 = x[1] * y[2] - x[2] * y[1];
        [
            x[0] + y[0]
                + (x[3] * y[2] - x[2] * y[3]) / 2.0
                + (x[2] * x[2] * y[1] - x[2] * x[1] * y[2]) / 12.0
                + (x[1] * y[2] * y[2] - x[2] * y[1] * y[2]) / 12.0,
            x[1] + y[1],
            x[2] + y[2],
            x[3] + y[3] + c4 / 2.0,
        ]
    }

    fn factor(&self, g: [f64; 4]) -> Result<Vec<f64>, LoopError> {
        match self.case {
            2 => {
                // h = s(e4 + e3)
                let den = 2.0 + g[1];
                if den.abs() < 1e-12 {
                    return Err(LoopError::OutsideDomain);
                }
                let s = 2.0 * g[3] / den;
                let b2 = g[1];
                let b3 = g[2] - s;
                let b1 = g[0] + b3 * s / 2.0 + b2 * b3 * s / 12.0 - b2 * s * s / 12.0;
                Ok(vec![b1, b2, b3])
            }
            3 => {
                // h = s(e4 + e2)
                let den = 2.0 - g[2];
                if den.abs() < 1e-12 {
                    return Err(LoopError::OutsideDomain);
                }
                let s = 2.0 * g[3] / den;
                let b3 = g[2];
                let b2 = g[1] - s;
                let b1 = g[0] + b3 * s / 2.0 - b3 * b3 * s / 12.0;
                Ok(vec![b1, b2, b3])
            }
            4 => {
                // h = s(e4 + e1)
                let s = g[3];
                let b1 = g[0] - s + g[2] * s / 2.0;
                Ok(vec![b1, g[1], g[2]])
            }
            _ => Err(LoopError::OutsideDomain),
        }
    }

    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let xa = [a[0], a[1], a[2], 0.0];
        let xb = [b[0], b[1], b[2], 0.0];
        self.factor(Self::delta(&xa, &xb))
    }
}

/// The 5-dimensional Type II family instance `(0, beta, 1, 0)`:
/// `[e2,e3]=e4, [e1,e3]=-e5, [e3,e4]=-e1`, `h = <e4 + beta e2, e5 + e1>`.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeII5d {
    pub beta: f64,
}

impl TypeII5d {
    fn delta(x: &[f64; 5], y: &[f64; 5]) -> [f64; 5] {
        let c4 = x[1] * y[2] - x[2] * y[1];
        let c1 = x[3] * y[2] - x[2] * y[3];
        let c5 = x[2] * y[0] - x[0] * y[2];
        [
            x[0] + y[0] + c1 / 2.0 + (y[2] - x[2]) * c4 / 12.0,
            x[1] + y[1],
            x[2] + y[2],
            x[3] + y[3] + c4 / 2.0,
            x[4] + y[4] + c5 / 2.0 + (x[2] - y[2]) * c1 / 12.0 + x[2] * y[2] * c4 / 24.0,
        ]
    }

    fn factor(&self, g: [f64; 5]) -> Result<Vec<f64>, LoopError> {
        let beta = self.beta;
        let den_s = 2.0 - beta * g[2];
        let den_q = 2.0 + g[2];
        if den_s.abs() < 1e-12 || den_q.abs() < 1e-12 {
            return Err(LoopError::OutsideDomain);
        }
        let v = g[2];
        let s = 2.0 * g[3] / den_s;
        let u = g[1] - s * beta;
        let q = (2.0 * g[4] + v * v * s / 6.0) / den_q;
        let t = g[0] - q + v * s / 2.0 - v * v * s * beta / 12.0;
        Ok(vec![t, u, v])
    }

    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let xa = [a[0], a[1], a[2], 0.0, 0.0];
        let xb = [b[0], b[1], b[2], 0.0, 0.0];
        self.factor(Self::delta(&xa, &xb))
    }
}

/// 2-step nilpotent Type I loops (the six Bol algebras with trivial triple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeIFamily {
    /// III.1: plain addition is handled by `Abelian`; III.2 is the unipotent
    /// group law with `e2 . e3 = e1`.
    Iii2,
    /// III.3: `[e1,e3]=e4`, `h = <e4 - e1>`.
    Iii3,
    /// III.4: `[e1,e3]=e4=[e2,e3]`, `h = <e4 - e1>`.
    Iii4,
    /// III.5: `[e1,e3]=e4, [e2,e3]=e5`, `h = <e4 - e1, e5 - e2>`.
    Iii5,
    /// III.6: same algebra as III.5 with `h = <e4 - e1 - e2, e5 - e2>`.
    Iii6,
}

impl TypeIFamily {
    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let (t, u, v) = (a[0], a[1], a[2]);
        let (tp, up, vp) = (b[0], b[1], b[2]);
        let vv = v + vp;
        let den = 2.0 + vv;
        match self {
            TypeIFamily::Iii2 => {
                Ok(vec![t + tp + (u * vp - v * up) / 2.0, u + up, v + vp])
            }
            TypeIFamily::Iii3 => {
                if den.abs() < 1e-12 {
                    return Err(LoopError::OutsideDomain);
                }
                Ok(vec![t + tp + (t * vp - v * tp) / den, u + up, vv])
            }
            TypeIFamily::Iii4 => {
                if den.abs() < 1e-12 {
                    return Err(LoopError::OutsideDomain);
                }
                Ok(vec![
                    t + tp + ((t + u) * vp - (tp + up) * v) / den,
                    u + up,
                    vv,
                ])
            }
            TypeIFamily::Iii5 => {
                if den.abs() < 1e-12 {
                    return Err(LoopError::OutsideDomain);
                }
                Ok(vec![
                    t + tp + (t * vp - v * tp) / den,
                    u + up + (u * vp - v * up) / den,
                    vv,
                ])
            }
            TypeIFamily::Iii6 => {
                if den.abs() < 1e-12 {
                    return Err(LoopError::OutsideDomain);
                }
                let s = (t * vp - v * tp) / den;
                let q = ((u * vp - v * up) - vv * s) / den;
                Ok(vec![t + tp + s, u + up + s + q, vv])
            }
        }
    }
}

/// The three right-alternative-algebra loops, as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightAltLaw {
    B,
    C,
    H,
}

impl RightAltLaw {
    pub fn compose(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let (x1, x2, x3) = (x[0], x[1], x[2]);
        let (y1, y2, y3) = (y[0], y[1], y[2]);
        match self {
            RightAltLaw::B => vec![
                x1 + y1 + x2 * y3,
                x2 + y2 + x3 * y2,
                x3 + y3 + x3 * y3,
            ],
            RightAltLaw::C => vec![
                x1 + y1 + x1 * y3 + x3 * y1,
                x2 + y2 + x1 * y3 + x3 * y2,
                x3 + y3 + x3 * y3,
            ],
            RightAltLaw::H => vec![
                x1 + y1 + x2 * y2 + x3 * y2 + x2 * y3,
                x2 + y2 + x3 * y2,
                x3 + y3 + x3 * y3,
            ],
        }
    }
}

/// The printed Type VII row-6 law, implemented verbatim (including the
/// Gauss-Legendre evaluation of its error-function-style integral). The
/// underlying algebra provably fails the Bol axioms, and the identity checks
/// report this defect; the law is shipped for the record.
#[derive(Debug, Clone, PartialEq)]
pub struct Vii6AsPrinted {
    pub omega: f64,
}

impl Vii6AsPrinted {
    /// `2 * integral_0^1 exp(-(u v / 2) alpha^2) d alpha` by 16-node
    /// Gauss-Legendre (well below 1e-13 error at desk radii).
    fn twice_gauss_integral(uv: f64) -> f64 {
        const T: [f64; 8] = [
            0.0950125098376374,
            0.2816035507792589,
            0.4580167776572274,
            0.6178762444026438,
            0.7554044083550030,
            0.8656312023878318,
            0.9445750230732326,
            0.9894009349916499,
        ];
        const W: [f64; 8] = [
            0.1894506104550685,
            0.1826034150449236,
            0.1691565193950025,
            0.1495959888165767,
            0.1246289712555339,
            0.0951585116824928,
            0.0622535239386479,
            0.0271524594117541,
        ];
        let f = |alpha: f64| (-(uv / 2.0) * alpha * alpha).exp();
        let mut acc = 0.0;
        for k in 0..8 {
            acc += W[k] * (f((1.0 + T[k]) / 2.0) + f((1.0 - T[k]) / 2.0));
        }
        acc // = 2 * (1/2) * sum = the doubled [0,1] integral
    }

    pub fn compose(&self, a: &[f64], b: &[f64]) -> Result<Vec<f64>, LoopError> {
        let (t, u, v) = (a[0], a[1], a[2]);
        let (tp, up, vp) = (b[0], b[1], b[2]);
        let omega = self.omega;
        let uu = u + up;
        let vv = v + vp;
        let euv = (-(u * v) / 2.0).exp();
        let euuvv = (-(uu * vv) / 2.0).exp();
        let beta_arg = uu * vv;
        let big = if beta_arg.abs() < 1e-12 {
            2.0 - euuvv
        } else {
            Self::twice_gauss_integral(beta_arg) - euuvv
        };
        let t2 = (t + tp * (1.0 + u * v) * euv - omega * (u * vp - v * up) / 2.0 * (1.0 + uu * vv))
            * (1.0 - uu);
        let r2 = (1.0 - uu + uu * vv) * (v * tp * euv + omega * vv * (u * vp - v * up) / 2.0);
        let m2 = big * (1.0 - vv) * euuvv;
        let n2 = if uu.abs() < 1e-9 {
            (1.0 - uu + uu * vv) * euuvv * (-vv / 2.0)
        } else {
            (1.0 - uu + uu * vv) * euuvv * (euuvv - 1.0) / uu
        };
        let den = m2 - n2;
        if den.abs() < 1e-12 {
            return Err(LoopError::OutsideDomain);
        }
        Ok(vec![(t2 - r2) / den, uu, vv])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_unit(compose: impl Fn(&[f64], &[f64]) -> Result<Vec<f64>, LoopError>) {
        let y = [0.07, -0.03, 0.05];
        let zero = [0.0; 3];
        let left = compose(&zero, &y).unwrap();
        let right = compose(&y, &zero).unwrap();
        for i in 0..3 {
            assert!((left[i] - y[i]).abs() < 1e-12, "left unit failed");
            assert!((right[i] - y[i]).abs() < 1e-12, "right unit failed");
        }
    }

    #[test]
    fn unit_laws_hold() {
        assert_unit(|a, b| TypeIFamily::Iii3.compose(a, b));
        assert_unit(|a, b| TypeIFamily::Iii6.compose(a, b));
        assert_unit(|a, b| TypeIICase { case: 2 }.compose(a, b));
        assert_unit(|a, b| TypeIICase { case: 4 }.compose(a, b));
        assert_unit(|a, b| TypeII5d { beta: 0.5 }.compose(a, b));
        let tb = TransBoost {
            branch: Branch::Hyperbolic,
            weights: [1.0, 0.0],
            h: [0.0, 1.0, 0.0],
        };
        assert_unit(|a, b| tb.compose(a, b));
        let tb2 = TransBoost {
            branch: Branch::Trigonometric,
            weights: [1.0, -1.0],
            h: [0.5, 1.0, 0.0],
        };
        assert_unit(|a, b| tb2.compose(a, b));
        let hr = HeisRot { branch: Branch::Hyperbolic, h: [0.0, 0.0, 1.0] };
        assert_unit(|a, b| hr.compose(a, b));
        let hr2 = HeisRot { branch: Branch::Trigonometric, h: [0.0, 1.5, 0.0] };
        assert_unit(|a, b| hr2.compose(a, b));
    }

    #[test]
    fn iii5_matches_printed_closed_form() {
        let (t, u, v) = (0.04, -0.02, 0.03);
        let (tp, up, vp) = (0.01, 0.05, -0.02);
        let got = TypeIFamily::Iii5.compose(&[t, u, v], &[tp, up, vp]).unwrap();
        let den = 2.0 + v + vp;
        let want0 = (2.0 * t + 2.0 * tp + t * v + 2.0 * t * vp + tp * vp) / den;
        let want1 = (2.0 * u + 2.0 * up + u * v + 2.0 * u * vp + up * vp) / den;
        assert!((got[0] - want0).abs() < 1e-15);
        assert!((got[1] - want1).abs() < 1e-15);
        assert!((got[2] - (v + vp)).abs() < 1e-15);
    }
}
