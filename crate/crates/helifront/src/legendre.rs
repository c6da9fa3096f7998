//! Profile curves in the plane carried with a unit normal.
//!
//! A profile is a pair `(gamma, nu)` with `gamma = (x, z)`, `|nu| = 1` and
//! `gamma' . nu = 0`, written with components `nu = (a, b)`. The pair stays
//! meaningful where `gamma'` vanishes, which is exactly where the swept
//! surface develops singular points. With `mu = (-b, a)` the curvature data
//! is the pair `ell = nu' . mu`, `beta = gamma' . mu`, and the components
//! obey `x' = -beta b`, `z' = beta a`, `a' = -ell b`, `b' = ell a`. Curvature
//! data determines the curve up to rotation and translation; reconstruction
//! integrates `theta' = ell`, `gamma' = beta (-sin theta, cos theta)`.

use crate::expr::Expr;
use crate::interp::CubicSpline;
use crate::jet::{Jet, JetError};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LegendreError {
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("curve domain is empty or reversed: [{0}, {1}]")]
    BadDomain(f64, f64),
}

/// Initial data anchoring a curve reconstructed from curvature.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct ReconstructionInit {
    /// Parameter value the initial data is attached to.
    pub u0: f64,
    /// Curve point at `u0`.
    pub gamma0: [f64; 2],
    /// Normal angle at `u0`: `nu(u0) = (cos angle0, sin angle0)`.
    pub angle0: f64,
}

impl Default for ReconstructionInit {
    fn default() -> Self {
        ReconstructionInit {
            u0: 0.0,
            gamma0: [0.0, 0.0],
            angle0: 0.0,
        }
    }
}

/// Profile curve with unit normal, jet-evaluable in the parameter.
#[derive(Debug, Clone)]
pub enum LegendreCurve {
    /// Components given in closed form.
    Explicit {
        x: Expr,
        z: Expr,
        a: Expr,
        b: Expr,
        domain: [f64; 2],
    },
    /// Curve determined by curvature data and initial values. Derivatives at
    /// any point are exact; values away from `init.u0` come from quadrature.
    FromCurvature {
        ell: Expr,
        beta: Expr,
        init: ReconstructionInit,
        domain: [f64; 2],
    },
}

/// Jets of the four curve components at a common base point.
#[derive(Debug, Clone, Copy)]
pub struct CurveJets {
    pub x: Jet,
    pub z: Jet,
    pub a: Jet,
    pub b: Jet,
}

impl CurveJets {
    /// Jets of the curvature pair `(ell, beta)`; one order lower than the
    /// component jets.
    pub fn ell_beta(&self) -> (Jet, Jet) {
        let ell = self.b.deriv().mul(&self.a).sub(&self.a.deriv().mul(&self.b));
        let beta = self.z.deriv().mul(&self.a).sub(&self.x.deriv().mul(&self.b));
        (ell, beta)
    }
}

/// Steps per unit parameter length used when a value query on a
/// curvature-defined curve has to integrate away from its anchor.
const QUAD_STEPS_PER_UNIT: f64 = 2048.0;

impl LegendreCurve {
    pub fn domain(&self) -> [f64; 2] {
        match self {
            LegendreCurve::Explicit { domain, .. } => *domain,
            LegendreCurve::FromCurvature { domain, .. } => *domain,
        }
    }

    /// Component jets at `u0`.
    pub fn jets(&self, u0: f64, order: usize) -> Result<CurveJets, LegendreError> {
        match self {
            LegendreCurve::Explicit { x, z, a, b, .. } => Ok(CurveJets {
                x: x.jet(u0, order)?,
                z: z.jet(u0, order)?,
                a: a.jet(u0, order)?,
                b: b.jet(u0, order)?,
            }),
            LegendreCurve::FromCurvature {
                ell, beta, init, ..
            } => {
                // local Taylor data is exact; only the 0th coefficients need
                // transport from the anchor point
                let (theta0, gamma0) = if u0 == init.u0 {
                    (init.angle0, init.gamma0)
                } else {
                    integrate_frame(ell, beta, init, u0)
                };
                let dord = order.saturating_sub(1);
                let theta = ell.jet(u0, dord)?.integrate(theta0)?.truncate(order);
                let (b, a) = theta.sin_cos();
                let betaj = beta.jet(u0, dord)?;
                let x = betaj.mul(&b).neg().integrate(gamma0[0])?.truncate(order);
                let z = betaj.mul(&a).integrate(gamma0[1])?.truncate(order);
                Ok(CurveJets { x, z, a, b })
            }
        }
    }

    /// Curve point and normal at `u`.
    pub fn point(&self, u: f64) -> Result<([f64; 2], [f64; 2]), LegendreError> {
        let j = self.jets(u, 0)?;
        Ok(([j.x.value(), j.z.value()], [j.a.value(), j.b.value()]))
    }
}

/// Transport `(theta, gamma)` from the anchor to `u1` with classical
/// fourth-order steps.
fn integrate_frame(
    ell: &Expr,
    beta: &Expr,
    init: &ReconstructionInit,
    u1: f64,
) -> (f64, [f64; 2]) {
    let span = u1 - init.u0;
    let n = ((span.abs() * QUAD_STEPS_PER_UNIT).ceil() as usize).max(16);
    let h = span / n as f64;
    let mut th = init.angle0;
    let mut g = init.gamma0;
    let f = |u: f64, th: f64| -> [f64; 3] {
        let (l, bt) = (ell.eval(u), beta.eval(u));
        [l, -bt * th.sin(), bt * th.cos()]
    };
    let mut u = init.u0;
    for _ in 0..n {
        let k1 = f(u, th);
        let k2 = f(u + 0.5 * h, th + 0.5 * h * k1[0]);
        let k3 = f(u + 0.5 * h, th + 0.5 * h * k2[0]);
        let k4 = f(u + h, th + h * k3[0]);
        th += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        g[0] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        g[1] += h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
        u += h;
    }
    (th, g)
}

/// Pointwise defect of the unit-normal and tangency constraints over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreCheck {
    /// Largest `| |nu| - 1 |` seen.
    pub max_norm_deviation: f64,
    /// Largest `| gamma' . nu |` seen.
    pub max_tangency_deviation: f64,
}

impl LegendreCheck {
    pub fn is_valid(&self, tol: f64) -> bool {
        self.max_norm_deviation <= tol && self.max_tangency_deviation <= tol
    }
}

/// Evaluate the defining constraints on `n_grid` uniform points of the
/// curve's domain.
pub fn legendre_check(curve: &LegendreCurve, n_grid: usize) -> Result<LegendreCheck, LegendreError> {
    let [lo, hi] = curve.domain();
    if !(lo < hi) {
        return Err(LegendreError::BadDomain(lo, hi));
    }
    let n = n_grid.max(2);
    let mut worst_norm = 0.0f64;
    let mut worst_tan = 0.0f64;
    for i in 0..n {
        let u = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let j = curve.jets(u, 1)?;
        let (a, b) = (j.a.value(), j.b.value());
        let (xd, zd) = (j.x.derivative(1), j.z.derivative(1));
        worst_norm = worst_norm.max(((a * a + b * b).sqrt() - 1.0).abs());
        worst_tan = worst_tan.max((xd * a + zd * b).abs());
    }
    Ok(LegendreCheck {
        max_norm_deviation: worst_norm,
        max_tangency_deviation: worst_tan,
    })
}

/// Jets of the curvature pair at `u0`.
pub fn curvature_of_legendre(
    curve: &LegendreCurve,
    u0: f64,
    order: usize,
) -> Result<(Jet, Jet), LegendreError> {
    let j = curve.jets(u0, (order + 1).min(crate::jet::MAX_ORDER))?;
    Ok(j.ell_beta())
}

/// Densely sampled reconstructed curve with a cubic interpolation contract.
#[derive(Debug, Clone)]
pub struct SampledLegendreCurve {
    start: f64,
    step: f64,
    pub us: Vec<f64>,
    pub gamma: Vec<[f64; 2]>,
    pub nu: Vec<[f64; 2]>,
    theta_spline: CubicSpline,
    x_spline: CubicSpline,
    z_spline: CubicSpline,
}

impl SampledLegendreCurve {
    pub fn gamma_at(&self, u: f64) -> [f64; 2] {
        [self.x_spline.eval(u), self.z_spline.eval(u)]
    }

    pub fn nu_at(&self, u: f64) -> [f64; 2] {
        let th = self.theta_spline.eval(u);
        [th.cos(), th.sin()]
    }

    pub fn gamma_deriv(&self, u: f64) -> [f64; 2] {
        [self.x_spline.deriv(u), self.z_spline.deriv(u)]
    }

    /// Curvature pair recovered from the interpolant. `ell` is the
    /// derivative of the normal angle; `beta` projects `gamma'` on
    /// `mu = (-b, a)`.
    pub fn curvature_at(&self, u: f64) -> (f64, f64) {
        let th = self.theta_spline.eval(u);
        let ell = self.theta_spline.deriv(u);
        let (b, a) = th.sin_cos();
        let g = self.gamma_deriv(u);
        (ell, -g[0] * b + g[1] * a)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn start(&self) -> f64 {
        self.start
    }
}

/// Integrate curvature data into a sampled curve on `u_range` with `n_steps`
/// uniform steps. The anchor `init.u0` is clamped into the range and the
/// integration runs outward from it in both directions.
pub fn reconstruct_curve(
    ell: &Expr,
    beta: &Expr,
    init: &ReconstructionInit,
    u_range: [f64; 2],
    n_steps: usize,
) -> Result<SampledLegendreCurve, LegendreError> {
    let [lo, hi] = u_range;
    if !(lo < hi) {
        return Err(LegendreError::BadDomain(lo, hi));
    }
    let n = n_steps.max(16);
    let h = (hi - lo) / n as f64;
    let anchor = init.u0.clamp(lo, hi);
    // snap the anchor to the nearest grid index so samples line up with it
    let ia = ((anchor - lo) / h).round() as usize;
    let ua = lo + ia as f64 * h;
    let (th_a, g_a) = if ua == init.u0 {
        (init.angle0, init.gamma0)
    } else {
        integrate_frame(ell, beta, init, ua)
    };

    let mut theta = vec![0.0; n + 1];
    let mut gx = vec![0.0; n + 1];
    let mut gz = vec![0.0; n + 1];
    theta[ia] = th_a;
    gx[ia] = g_a[0];
    gz[ia] = g_a[1];

    let f = |u: f64, th: f64| -> [f64; 3] {
        let (l, bt) = (ell.eval(u), beta.eval(u));
        [l, -bt * th.sin(), bt * th.cos()]
    };
    let mut march = |from: usize, to_exclusive: isize, dir: f64| {
        let mut i = from as isize;
        let mut th = theta[from];
        let mut x = gx[from];
        let mut z = gz[from];
        while i != to_exclusive {
            let u = lo + i as f64 * h;
            let hh = dir * h;
            let k1 = f(u, th);
            let k2 = f(u + 0.5 * hh, th + 0.5 * hh * k1[0]);
            let k3 = f(u + 0.5 * hh, th + 0.5 * hh * k2[0]);
            let k4 = f(u + hh, th + hh * k3[0]);
            th += hh / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
            x += hh / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
            z += hh / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
            i += dir as isize;
            theta[i as usize] = th;
            gx[i as usize] = x;
            gz[i as usize] = z;
        }
    };
    march(ia, n as isize, 1.0);
    march(ia, 0, -1.0);

    let us: Vec<f64> = (0..=n).map(|i| lo + i as f64 * h).collect();
    let gamma: Vec<[f64; 2]> = gx.iter().zip(&gz).map(|(&x, &z)| [x, z]).collect();
    let nu: Vec<[f64; 2]> = theta.iter().map(|&t| [t.cos(), t.sin()]).collect();
    Ok(SampledLegendreCurve {
        start: lo,
        step: h,
        us,
        gamma,
        nu,
        theta_spline: CubicSpline::not_a_knot(lo, h, &theta),
        x_spline: CubicSpline::not_a_knot(lo, h, &gx),
        z_spline: CubicSpline::not_a_knot(lo, h, &gz),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn expr(s: &str) -> Expr {
        Expr::parse(s).unwrap()
    }

    fn parabola_profile() -> LegendreCurve {
        // gamma = (u^2, u), nu = (1, -2u)/sqrt(1+4u^2)
        LegendreCurve::Explicit {
            x: expr("u^2"),
            z: expr("u"),
            a: expr("1 / sqrt(1 + 4*u^2)"),
            b: expr("-2*u / sqrt(1 + 4*u^2)"),
            domain: [-1.0, 1.0],
        }
    }

    #[test]
    fn parabola_profile_satisfies_constraints() {
        let c = legendre_check(&parabola_profile(), 101).unwrap();
        assert!(c.is_valid(1e-12), "{c:?}");
    }

    #[test]
    fn non_unit_or_non_orthogonal_pairs_are_flagged() {
        let bad_tangency = LegendreCurve::Explicit {
            x: expr("u"),
            z: expr("0"),
            a: expr("1"),
            b: expr("0"),
            domain: [-1.0, 1.0],
        };
        let c = legendre_check(&bad_tangency, 11).unwrap();
        assert!(c.max_tangency_deviation > 0.5);

        let ok_line = LegendreCurve::Explicit {
            x: expr("u"),
            z: expr("0"),
            a: expr("0"),
            b: expr("1"),
            domain: [-1.0, 1.0],
        };
        assert!(legendre_check(&ok_line, 11).unwrap().is_valid(1e-14));
    }

    #[test]
    fn curvature_of_parabola_profile_at_zero() {
        // ell(0) = -2, beta(0) = 1; closed forms ell = -2/(1+4u^2),
        // beta = sqrt(1+4u^2)
        let (ell, beta) = curvature_of_legendre(&parabola_profile(), 0.0, 3).unwrap();
        assert_relative_eq!(ell.value(), -2.0, epsilon = 1e-12);
        assert_relative_eq!(beta.value(), 1.0, epsilon = 1e-12);
        let le = expr("-2 / (1 + 4*u^2)");
        let be = expr("sqrt(1 + 4*u^2)");
        for &u in &[-0.8, -0.1, 0.3, 0.9] {
            let (l, b) = curvature_of_legendre(&parabola_profile(), u, 2).unwrap();
            assert_relative_eq!(l.value(), le.eval(u), epsilon = 1e-12);
            assert_relative_eq!(b.value(), be.eval(u), epsilon = 1e-12);
        }
    }

    #[test]
    fn curvature_derivative_of_cubic_profile() {
        // gamma = (u^3, u): ell = -6u/(1+9u^4), ell(0) = 0, ell'(0) = -6
        let cubic = LegendreCurve::Explicit {
            x: expr("u^3"),
            z: expr("u"),
            a: expr("1 / sqrt(1 + 9*u^4)"),
            b: expr("-3*u^2 / sqrt(1 + 9*u^4)"),
            domain: [-1.0, 1.0],
        };
        let (ell, beta) = curvature_of_legendre(&cubic, 0.0, 2).unwrap();
        assert_relative_eq!(ell.value(), 0.0, epsilon = 1e-12);
        assert_relative_eq!(ell.derivative(1), -6.0, epsilon = 1e-12);
        assert_relative_eq!(beta.value(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn frenet_relations_hold_along_profiles() {
        // x' = -beta b, z' = beta a at jet level
        let curve = parabola_profile();
        for i in 0..=40 {
            let u = -1.0 + 0.05 * i as f64;
            let j = curve.jets(u, 1).unwrap();
            let (_, beta) = j.ell_beta();
            assert_relative_eq!(
                j.x.derivative(1),
                -beta.value() * j.b.value(),
                epsilon = 1e-10
            );
            assert_relative_eq!(
                j.z.derivative(1),
                beta.value() * j.a.value(),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn reconstructs_vertical_line_from_zero_ell() {
        // (ell, beta) = (0, 1) from gamma0=(0,0), angle0=0: nu = (1,0),
        // gamma(u) = (0, u)
        let s = reconstruct_curve(
            &expr("0"),
            &expr("1"),
            &ReconstructionInit::default(),
            [0.0, 2.0],
            256,
        )
        .unwrap();
        for (i, &u) in s.us.iter().enumerate() {
            assert_relative_eq!(s.gamma[i][0], 0.0, epsilon = 1e-12);
            assert_relative_eq!(s.gamma[i][1], u, epsilon = 1e-12);
            assert_relative_eq!(s.nu[i][0], 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn reconstructs_unit_circle_from_unit_curvature() {
        // (ell, beta) = (1, 1): gamma(u) = (cos u - 1, sin u)
        let s = reconstruct_curve(
            &expr("1"),
            &expr("1"),
            &ReconstructionInit::default(),
            [0.0, std::f64::consts::TAU],
            4096,
        )
        .unwrap();
        let mut worst = 0.0f64;
        for (i, &u) in s.us.iter().enumerate() {
            let e = ((s.gamma[i][0] - (u.cos() - 1.0)).powi(2)
                + (s.gamma[i][1] - u.sin()).powi(2))
            .sqrt();
            worst = worst.max(e);
        }
        assert!(worst < 1e-8, "max deviation {worst}");
    }

    #[test]
    fn curvature_round_trip_through_interpolant() {
        // reconstruct from (ell, beta) = (cos u, 1 + u/2), then recover the
        // pair from the splined samples
        let (le, be) = (expr("cos(u)"), expr("1 + u/2"));
        let s = reconstruct_curve(
            &le,
            &be,
            &ReconstructionInit::default(),
            [-1.0, 1.0],
            4096,
        )
        .unwrap();
        let mut worst = 0.0f64;
        for i in 0..=500 {
            let u = -0.999 + 1.998 * i as f64 / 500.0;
            let (l, b) = s.curvature_at(u);
            worst = worst.max((l - le.eval(u)).abs().max((b - be.eval(u)).abs()));
        }
        assert!(worst < 1e-6, "round-trip error {worst}");
    }

    #[test]
    fn curvature_defined_curve_yields_exact_local_jets() {
        // (ell, beta) = (1, u): gamma''(0) = (0, 1), gamma'''(0) = (-2, 0),
        // so det = 2 at the singular point
        let c = LegendreCurve::FromCurvature {
            ell: expr("1"),
            beta: expr("u"),
            init: ReconstructionInit::default(),
            domain: [-1.0, 1.0],
        };
        let j = c.jets(0.0, 3).unwrap();
        let g2 = [j.x.derivative(2), j.z.derivative(2)];
        let g3 = [j.x.derivative(3), j.z.derivative(3)];
        assert_relative_eq!(g2[0], 0.0, epsilon = 1e-13);
        assert_relative_eq!(g2[1], 1.0, epsilon = 1e-13);
        assert_relative_eq!(g3[0], -2.0, epsilon = 1e-13);
        assert_relative_eq!(g3[1], 0.0, epsilon = 1e-13);
    }

    #[test]
    fn anchored_jets_match_sampling_away_from_anchor() {
        let (le, be) = (expr("cos(u)"), expr("1 + u/2"));
        let c = LegendreCurve::FromCurvature {
            ell: le.clone(),
            beta: be.clone(),
            init: ReconstructionInit::default(),
            domain: [-1.0, 1.0],
        };
        let s = reconstruct_curve(&le, &be, &ReconstructionInit::default(), [-1.0, 1.0], 4096)
            .unwrap();
        for &u in &[-0.75, 0.25, 0.5] {
            let j = c.jets(u, 1).unwrap();
            let g = s.gamma_at(u);
            assert_relative_eq!(j.x.value(), g[0], epsilon = 1e-9);
            assert_relative_eq!(j.z.value(), g[1], epsilon = 1e-9);
        }
    }

    #[test]
    fn congruence_invariance_of_curvature() {
        // rotating and translating the profile leaves (ell, beta) unchanged
        let (c, s) = (0.6f64.cos(), 0.6f64.sin());
        let rotated = LegendreCurve::Explicit {
            x: expr(&format!("{c} * u^2 - {s} * u + 0.7")),
            z: expr(&format!("{s} * u^2 + {c} * u - 1.3")),
            a: expr(&format!("({c} - {s}*(-2*u)) / sqrt(1 + 4*u^2)")),
            b: expr(&format!("({s} + {c}*(-2*u)) / sqrt(1 + 4*u^2)")),
            domain: [-1.0, 1.0],
        };
        let base = parabola_profile();
        for &u in &[-0.9, -0.4, 0.0, 0.3, 0.8] {
            let (l0, b0) = curvature_of_legendre(&base, u, 1).unwrap();
            let (l1, b1) = curvature_of_legendre(&rotated, u, 1).unwrap();
            assert_relative_eq!(l0.value(), l1.value(), epsilon = 1e-10);
            assert_relative_eq!(b0.value(), b1.value(), epsilon = 1e-10);
        }
    }
}
