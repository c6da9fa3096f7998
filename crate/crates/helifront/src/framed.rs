//! Moving-frame bookkeeping for surfaces that may have singular points.
//!
//! A framed surface carries an orthonormal pair along the surface map. In
//! strict mode the first vector is normal to the surface and the pair
//! `(s, t = n x s)` spans the tangent plane even where the map degenerates.
//! In the generalised mode the pair `(nu1, nu2)` merely contains the normal
//! direction of the surface in its span. Both modes share one invariant
//! record; a flag tells them apart.

use crate::linalg::{cross3, det2, dot3, norm3};
use thiserror::Error;

/// Frame vectors must be orthonormal to this tolerance.
pub const ORTHONORMAL_TOL: f64 = 1e-10;
/// Tangency (or span) defects beyond this reject the input frame.
pub const TANGENCY_TOL: f64 = 1e-9;
/// Threshold for "is zero" predicates on invariant values.
pub const EPS_ZERO: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum FramedError {
    #[error("frame pair is not orthonormal at the queried point (deviation {0:.3e})")]
    FrameNotOrthonormal(f64),
    #[error("surface tangents escape the plane allowed by the frame (deviation {0:.3e})")]
    NotTangent(f64),
    #[error("curvature needs strict invariants, the c entries must vanish")]
    NotStrictFramed,
}

/// Position and frame samples at one parameter point: the two first partials
/// of the surface map and the frame pair with their first partials.
///
/// For a strict frame `n` is the unit normal and `s` a unit tangent. For a
/// generalised frame the fields hold `nu1` and `nu2` instead.
#[derive(Debug, Clone, Copy)]
pub struct FramePointData {
    pub xu: [f64; 3],
    pub xv: [f64; 3],
    pub n: [f64; 3],
    pub nu: [f64; 3],
    pub nv: [f64; 3],
    pub s: [f64; 3],
    pub su: [f64; 3],
    pub sv: [f64; 3],
}

/// Samples maps at `(u, v)` with fourth order central differences of step `h`.
pub fn frame_samples<X, N, S>(x: X, n: N, s: S, u: f64, v: f64, h: f64) -> FramePointData
where
    X: Fn(f64, f64) -> [f64; 3],
    N: Fn(f64, f64) -> [f64; 3],
    S: Fn(f64, f64) -> [f64; 3],
{
    let d = |f: &dyn Fn(f64, f64) -> [f64; 3], du: bool| -> [f64; 3] {
        let at = |k: f64| {
            if du {
                f(u + k * h, v)
            } else {
                f(u, v + k * h)
            }
        };
        let (m2, m1, p1, p2) = (at(-2.0), at(-1.0), at(1.0), at(2.0));
        let mut out = [0.0; 3];
        for i in 0..3 {
            out[i] = (m2[i] - 8.0 * m1[i] + 8.0 * p1[i] - p2[i]) / (12.0 * h);
        }
        out
    };
    FramePointData {
        xu: d(&x, true),
        xv: d(&x, false),
        n: n(u, v),
        nu: d(&n, true),
        nv: d(&n, false),
        s: s(u, v),
        su: d(&s, true),
        sv: d(&s, false),
    }
}

/// First-order invariants of a framed or generalised framed surface at a point.
///
/// Rows of `g` expand the position partials in the moving basis. Strict mode
/// uses the basis `(s, t, n)` so the third column holds the normal defect and
/// stays below [`TANGENCY_TOL`]; generalised mode uses `(nu1, nu2, nu3)` with
/// `nu3 = nu1 x nu2`. `f1` and `f2` are the frame rotation triples `(e, f, g)`
/// in the `u` and `v` directions. `alpha_r` and `beta_r` decompose the
/// unnormalised surface normal along the generalised pair; they vanish in
/// strict mode where the normal is the frame vector itself.
#[derive(Debug, Clone, Copy)]
pub struct FrameInvariants {
    pub g: [[f64; 3]; 2],
    pub f1: [f64; 3],
    pub f2: [f64; 3],
    pub alpha_r: f64,
    pub beta_r: f64,
    pub strict: bool,
}

impl FrameInvariants {
    /// Assembles the record from raw entries, deriving `alpha_r`, `beta_r`.
    pub fn from_entries(g: [[f64; 3]; 2], f1: [f64; 3], f2: [f64; 3], strict: bool) -> Self {
        let alpha_r = det2(g[0][1], g[0][2], g[1][1], g[1][2]);
        let beta_r = -det2(g[0][0], g[0][2], g[1][0], g[1][2]);
        FrameInvariants {
            g,
            f1,
            f2,
            alpha_r,
            beta_r,
            strict,
        }
    }

    /// Frame rotation matrix in the `u` direction, skew by construction.
    pub fn f1_matrix(&self) -> [[f64; 3]; 3] {
        triple_to_skew(self.f1)
    }

    /// Frame rotation matrix in the `v` direction, skew by construction.
    pub fn f2_matrix(&self) -> [[f64; 3]; 3] {
        triple_to_skew(self.f2)
    }
}

fn triple_to_skew(t: [f64; 3]) -> [[f64; 3]; 3] {
    let [e, f, g] = t;
    [[0.0, e, f], [-e, 0.0, g], [-f, -g, 0.0]]
}

fn check_pair(a: [f64; 3], b: [f64; 3]) -> Result<(), FramedError> {
    let dev = (norm3(a) - 1.0)
        .abs()
        .max((norm3(b) - 1.0).abs())
        .max(dot3(a, b).abs());
    if dev > ORTHONORMAL_TOL {
        return Err(FramedError::FrameNotOrthonormal(dev));
    }
    Ok(())
}

/// Invariants of a strict framed surface from pointwise samples.
///
/// Requires `(n, s)` orthonormal and both position partials orthogonal to
/// `n`. Entries follow `x_u = a1 s + b1 t`, `e1 = n_u . s`, `f1 = n_u . t`,
/// `g1 = s_u . t` and the `v` counterparts.
pub fn basic_invariants(d: &FramePointData) -> Result<FrameInvariants, FramedError> {
    check_pair(d.n, d.s)?;
    let t = cross3(d.n, d.s);
    let cu = dot3(d.xu, d.n);
    let cv = dot3(d.xv, d.n);
    let dev = cu.abs().max(cv.abs());
    if dev > TANGENCY_TOL {
        return Err(FramedError::NotTangent(dev));
    }
    let g = [
        [dot3(d.xu, d.s), dot3(d.xu, t), cu],
        [dot3(d.xv, d.s), dot3(d.xv, t), cv],
    ];
    let f1 = [dot3(d.nu, d.s), dot3(d.nu, t), dot3(d.su, t)];
    let f2 = [dot3(d.nv, d.s), dot3(d.nv, t), dot3(d.sv, t)];
    let mut inv = FrameInvariants::from_entries(g, f1, f2, true);
    // the normal never tilts into the pair's span in strict mode
    inv.alpha_r = 0.0;
    inv.beta_r = 0.0;
    Ok(inv)
}

/// Invariants of a generalised framed surface from pointwise samples, with
/// `d.n` read as `nu1` and `d.s` as `nu2`.
///
/// Requires the pair orthonormal and the surface normal inside its span,
/// which is the same as `a1 b2 - a2 b1 = 0`.
pub fn gfs_invariants(d: &FramePointData) -> Result<FrameInvariants, FramedError> {
    check_pair(d.n, d.s)?;
    let nu3 = cross3(d.n, d.s);
    let g = [
        [dot3(d.xu, d.n), dot3(d.xu, d.s), dot3(d.xu, nu3)],
        [dot3(d.xv, d.n), dot3(d.xv, d.s), dot3(d.xv, nu3)],
    ];
    let span_defect = det2(g[0][0], g[0][1], g[1][0], g[1][1]);
    let scale = norm3(d.xu).max(norm3(d.xv)).max(1.0);
    if span_defect.abs() > TANGENCY_TOL * scale * scale {
        return Err(FramedError::NotTangent(span_defect.abs()));
    }
    let f1 = [dot3(d.nu, d.s), dot3(d.nu, nu3), dot3(d.su, nu3)];
    let f2 = [dot3(d.nv, d.s), dot3(d.nv, nu3), dot3(d.sv, nu3)];
    Ok(FrameInvariants::from_entries(g, f1, f2, false))
}

/// One invariant entry with its first partials, the input of the
/// integrability residuals.
#[derive(Debug, Clone, Copy, Default)]
pub struct EntryJet {
    pub value: f64,
    pub du: f64,
    pub dv: f64,
}

impl EntryJet {
    pub fn constant(value: f64) -> Self {
        EntryJet {
            value,
            du: 0.0,
            dv: 0.0,
        }
    }
}

/// All twelve invariant entries as [`EntryJet`]s at one point.
#[derive(Debug, Clone, Copy, Default)]
pub struct InvariantJets {
    pub a1: EntryJet,
    pub b1: EntryJet,
    pub c1: EntryJet,
    pub a2: EntryJet,
    pub b2: EntryJet,
    pub c2: EntryJet,
    pub e1: EntryJet,
    pub f1: EntryJet,
    pub g1: EntryJet,
    pub e2: EntryJet,
    pub f2: EntryJet,
    pub g2: EntryJet,
    pub strict: bool,
}

/// Left minus right of each compatibility equation the invariants of a genuine
/// surface satisfy. Six residuals in strict mode, seven in generalised mode
/// where the span condition `a1 b2 - a2 b1 = 0` joins the list.
pub fn integrability_residual(j: &InvariantJets) -> Vec<f64> {
    let (a1, b1, c1) = (j.a1, j.b1, j.c1);
    let (a2, b2, c2) = (j.a2, j.b2, j.c2);
    let (e1, f1, g1) = (j.e1, j.f1, j.g1);
    let (e2, f2, g2) = (j.e2, j.f2, j.g2);
    let frame = [
        (e1.dv - f1.value * g2.value) - (e2.du - f2.value * g1.value),
        (f1.dv - e2.value * g1.value) - (f2.du - e1.value * g2.value),
        (g1.dv - e1.value * f2.value) - (g2.du - e2.value * f1.value),
    ];
    if j.strict {
        vec![
            (a1.dv - b1.value * g2.value) - (a2.du - b2.value * g1.value),
            (b1.dv - a2.value * g1.value) - (b2.du - a1.value * g2.value),
            (a1.value * e2.value + b1.value * f2.value)
                - (a2.value * e1.value + b2.value * f1.value),
            frame[0],
            frame[1],
            frame[2],
        ]
    } else {
        vec![
            (a1.dv - b1.value * e2.value - c1.value * f2.value)
                - (a2.du - b2.value * e1.value - c2.value * f1.value),
            (b1.dv + a1.value * e2.value - c1.value * g2.value)
                - (b2.du + a2.value * e1.value - c2.value * g1.value),
            (c1.dv + a1.value * f2.value + b1.value * g2.value)
                - (c2.du + a2.value * f1.value + b2.value * g1.value),
            frame[0],
            frame[1],
            frame[2],
            a1.value * b2.value - a2.value * b1.value,
        ]
    }
}

/// Curvature triple of a framed surface. `jf` is the signed area density;
/// where it does not vanish the Gauss and mean curvatures are `kf / jf` and
/// `hf / jf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FramedCurvature {
    pub jf: f64,
    pub kf: f64,
    pub hf: f64,
}

impl FramedCurvature {
    pub fn norm(&self) -> f64 {
        (self.jf * self.jf + self.kf * self.kf + self.hf * self.hf).sqrt()
    }
}

/// Curvature from strict invariants, the three 2x2 determinants
/// `jf = det [[a1, b1], [a2, b2]]`, `kf = det [[e1, f1], [e2, f2]]`,
/// `hf = -(det [[a1, f1], [a2, f2]] - det [[b1, e1], [b2, e2]]) / 2`.
pub fn framed_curvature(inv: &FrameInvariants) -> Result<FramedCurvature, FramedError> {
    if !inv.strict {
        return Err(FramedError::NotStrictFramed);
    }
    let [[a1, b1, _], [a2, b2, _]] = inv.g;
    let [e1, f1, _g1] = inv.f1;
    let [e2, f2, _g2] = inv.f2;
    Ok(FramedCurvature {
        jf: det2(a1, b1, a2, b2),
        kf: det2(e1, f1, e2, f2),
        hf: -0.5 * (det2(a1, f1, a2, f2) - det2(b1, e1, b2, e2)),
    })
}

/// Pointwise regularity tests read off the curvature triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImmersionPredicates {
    /// The surface map is an immersion at the point.
    pub surface_regular: bool,
    /// The surface with its normal is a Legendre immersion at the point, so
    /// the singularity, if any, is of front type.
    pub legendre_immersion: bool,
}

pub fn immersion_predicates(cf: &FramedCurvature) -> ImmersionPredicates {
    ImmersionPredicates {
        surface_regular: cf.jf.abs() > EPS_ZERO,
        legendre_immersion: cf.norm() > EPS_ZERO,
    }
}

/// Surface point with partials up to second order, the input of the classical
/// curvature formulas.
#[derive(Debug, Clone, Copy)]
pub struct SurfacePartials {
    pub r: [f64; 3],
    pub ru: [f64; 3],
    pub rv: [f64; 3],
    pub ruu: [f64; 3],
    pub ruv: [f64; 3],
    pub rvv: [f64; 3],
}

impl SurfacePartials {
    /// Unnormalised surface normal `ru x rv`.
    pub fn raw_normal(&self) -> [f64; 3] {
        cross3(self.ru, self.rv)
    }
}

/// Gauss and mean curvature from the two fundamental forms, taken with the
/// supplied unit normal. Only valid where the point is regular.
pub fn gauss_mean_from_partials(sp: &SurfacePartials, unit_normal: [f64; 3]) -> (f64, f64) {
    let e = dot3(sp.ru, sp.ru);
    let f = dot3(sp.ru, sp.rv);
    let g = dot3(sp.rv, sp.rv);
    let l = dot3(sp.ruu, unit_normal);
    let m = dot3(sp.ruv, unit_normal);
    let n = dot3(sp.rvv, unit_normal);
    let den = e * g - f * f;
    let k = (l * n - m * m) / den;
    let h = (e * n - 2.0 * f * m + g * l) / (2.0 * den);
    (k, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const FD_STEP: f64 = 1e-3;

    #[test]
    fn flat_plane_invariants_curvature_and_predicates() {
        let d = frame_samples(
            |u, v| [u, v, 0.0],
            |_, _| [0.0, 0.0, 1.0],
            |_, _| [1.0, 0.0, 0.0],
            0.4,
            -0.2,
            FD_STEP,
        );
        let inv = basic_invariants(&d).unwrap();
        assert_abs_diff_eq!(inv.g[0][0], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inv.g[0][1], 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inv.g[1][0], 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inv.g[1][1], 1.0, epsilon = 1e-10);
        for k in 0..3 {
            assert_abs_diff_eq!(inv.f1[k], 0.0, epsilon = 1e-10);
            assert_abs_diff_eq!(inv.f2[k], 0.0, epsilon = 1e-10);
        }
        let cf = framed_curvature(&inv).unwrap();
        assert_abs_diff_eq!(cf.jf, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(cf.kf, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(cf.hf, 0.0, epsilon = 1e-10);
        let p = immersion_predicates(&cf);
        assert!(p.surface_regular && p.legendre_immersion);
    }

    #[test]
    fn sphere_patch_matches_hand_computed_entries() {
        let x = |u: f64, v: f64| [u.cos() * v.cos(), u.cos() * v.sin(), u.sin()];
        let s = |u: f64, v: f64| [-u.sin() * v.cos(), -u.sin() * v.sin(), u.cos()];
        let (u, v) = (0.3, 0.7);
        let d = frame_samples(x, x, s, u, v, FD_STEP);
        let inv = basic_invariants(&d).unwrap();
        assert_abs_diff_eq!(inv.g[0][0], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inv.g[0][1], 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inv.g[1][0], 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(inv.g[1][1], -u.cos(), epsilon = 1e-10);
        let cf = framed_curvature(&inv).unwrap();
        // area density up to sign
        assert_abs_diff_eq!(cf.jf.abs(), u.cos(), epsilon = 1e-10);
        // round sphere with outward normal
        assert_abs_diff_eq!(cf.kf / cf.jf, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(cf.hf / cf.jf, -1.0, epsilon = 1e-9);
        let sp = sphere_partials(u, v);
        let (k, h) = gauss_mean_from_partials(&sp, x(u, v));
        assert_abs_diff_eq!(cf.kf / cf.jf, k, epsilon = 1e-8);
        assert_abs_diff_eq!(cf.hf / cf.jf, h, epsilon = 1e-8);
    }

    fn sphere_partials(u: f64, v: f64) -> SurfacePartials {
        let (cu, su, cv, sv) = (u.cos(), u.sin(), v.cos(), v.sin());
        SurfacePartials {
            r: [cu * cv, cu * sv, su],
            ru: [-su * cv, -su * sv, cu],
            rv: [-cu * sv, cu * cv, 0.0],
            ruu: [-cu * cv, -cu * sv, -su],
            ruv: [su * sv, -su * cv, 0.0],
            rvv: [-cu * cv, -cu * sv, 0.0],
        }
    }

    #[test]
    fn rejects_bad_frames() {
        let d = frame_samples(
            |u, v| [u, v, 0.0],
            |_, _| [0.0, 0.0, 2.0],
            |_, _| [1.0, 0.0, 0.0],
            0.0,
            0.0,
            FD_STEP,
        );
        assert!(matches!(
            basic_invariants(&d),
            Err(FramedError::FrameNotOrthonormal(_))
        ));
        let d = frame_samples(
            |u, v| [u, v, 0.3 * u],
            |_, _| [0.0, 0.0, 1.0],
            |_, _| [1.0, 0.0, 0.0],
            0.0,
            0.0,
            FD_STEP,
        );
        assert!(matches!(
            basic_invariants(&d),
            Err(FramedError::NotTangent(_))
        ));
    }

    #[test]
    fn curvature_requires_strict_entries() {
        let inv = FrameInvariants::from_entries(
            [[0.0, 0.0, 1.0], [0.5, 0.25, 0.0]],
            [0.0; 3],
            [0.0; 3],
            false,
        );
        assert!(matches!(
            framed_curvature(&inv),
            Err(FramedError::NotStrictFramed)
        ));
    }

    #[test]
    fn perturbed_plane_hits_exactly_one_residual() {
        let mut j = InvariantJets {
            strict: true,
            ..Default::default()
        };
        j.a1 = EntryJet::constant(1.0);
        j.b2 = EntryJet::constant(1.0);
        assert!(integrability_residual(&j).iter().all(|r| *r == 0.0));
        // hand-edited frame rotation no surface can realise
        j.g2 = EntryJet::constant(0.1);
        let res = integrability_residual(&j);
        assert_eq!(res.len(), 6);
        assert_abs_diff_eq!(res[1], 0.1, epsilon = 1e-15);
        for (i, r) in res.iter().enumerate() {
            if i != 1 {
                assert_abs_diff_eq!(*r, 0.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn zero_invariants_have_zero_residuals() {
        for strict in [true, false] {
            let j = InvariantJets {
                strict,
                ..Default::default()
            };
            let res = integrability_residual(&j);
            assert_eq!(res.len(), if strict { 6 } else { 7 });
            assert!(res.iter().all(|r| *r == 0.0));
        }
    }

    #[test]
    fn rotation_matrices_are_skew_exactly() {
        let inv = FrameInvariants::from_entries(
            [[0.1, 0.2, 0.3], [0.4, 0.5, 0.6]],
            [0.7, -0.3, 0.9],
            [-0.2, 0.8, 0.4],
            false,
        );
        for m in [inv.f1_matrix(), inv.f2_matrix()] {
            for (i, row) in m.iter().enumerate() {
                for (k, entry) in row.iter().enumerate() {
                    assert_eq!(entry + m[k][i], 0.0);
                }
            }
        }
        // normal decomposition minors
        assert_eq!(inv.alpha_r, 0.2 * 0.6 - 0.3 * 0.5);
        assert_eq!(inv.beta_r, -(0.1 * 0.6 - 0.3 * 0.4));
    }
}
