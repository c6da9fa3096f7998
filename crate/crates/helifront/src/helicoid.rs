//! Screw surfaces swept from a profile curve: evaluation, the two natural
//! moving frames with their invariants and curvature, slice curves with their
//! induced plane Legendre structure, and parallel offsets.
//!
//! The surface is `r(u, v) = (x(u) cos v, x(u) sin v, z(u) + lambda v)` for a
//! profile `(x, z)` carrying a unit normal `(a, b)`. Everything swept is
//! v-independent up to the obvious rotation, so invariants are functions of
//! `u` alone; the frames still depend on `v`.

use crate::framed::{EntryJet, FrameInvariants, FramedCurvature, InvariantJets, SurfacePartials};
use crate::framed::{EPS_ZERO, ORTHONORMAL_TOL, TANGENCY_TOL};
use crate::jet::{Jet, JetError, MAX_ORDER, VANISH_TOL};
use crate::legendre::{LegendreCurve, LegendreError};
use crate::linalg::{add3, scale3, sub3};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HelicoidError {
    #[error(transparent)]
    Profile(#[from] LegendreError),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error("pitch must be nonzero")]
    ZeroPitch,
    #[error("no smooth frame selection at u = {u}: {reason}")]
    NoSmoothSelection { u: f64, reason: &'static str },
    #[error("supplied frame pair violates its constraints at u = {u} (deviation {deviation:.3e})")]
    InvalidFrameSelection { u: f64, deviation: f64 },
    #[error("polar radius vanishes at u = {u}, offset slice comparison undefined")]
    PolarDataUndefined { u: f64 },
}

/// How the unit pair `(k1, k2)` solving `-k1 x + k2 b lambda = 0` is chosen.
/// The frame normal is `n = k2 nu1 - k1 nu2`.
#[derive(Debug, Clone)]
pub enum FrameSelection {
    /// `(k1, k2)` proportional to `(b lambda, x)`, with the common vanishing
    /// factor divided out at isolated joint zeros before normalizing.
    Default,
    /// User-supplied pair, checked against both constraints at every query.
    User { k1: Expr, k2: Expr },
}

use crate::expr::Expr;

/// Surface normal `r_u x r_v` split along the swept frame pair.
#[derive(Debug, Clone, Copy)]
pub struct NormalDecomposition {
    pub raw: [f64; 3],
    pub nu1: [f64; 3],
    pub nu2: [f64; 3],
    /// Coefficient of `nu1`, equal to `-beta x`.
    pub alpha_r: f64,
    /// Coefficient of `nu2`, equal to `beta b lambda`.
    pub beta_r: f64,
}

/// Which of the two mirror-image plane slices to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SliceVariant {
    /// `(x cos(z/lambda), -x sin(z/lambda))`, the slice of the surface.
    Slice,
    /// `(x cos(z/lambda), x sin(z/lambda))`, its mirror image, the form the
    /// cusp tests are stated for.
    Mirror,
}

/// Slice curve data at one parameter value: the smooth unit pair `(l1, l2)`
/// with `l1 b lambda + l2 x a = 0`, the induced plane normal and tangent
/// direction, and the slice curvature pair in both printed and directly
/// differentiated form. The two disagree by `lambda` scalings; both are
/// reported, see `printed_defect`.
#[derive(Debug, Clone, Copy)]
pub struct SliceData {
    pub l1: f64,
    pub l2: f64,
    /// Power of `(u - u0)` divided out of `(x a, -b lambda)`.
    pub deflation_order: usize,
    pub nu_s: [f64; 2],
    pub mu_s: [f64; 2],
    /// `(l1 x a - l2 b) beta`.
    pub beta_s: f64,
    /// `-a beta + l1 l2' - l1' l2`.
    pub ell_s: f64,
    /// `s'(u) . mu_s`, the value the defining identity yields.
    pub beta_s_direct: f64,
    /// `nu_s'(u) . mu_s`, the value the defining identity yields.
    pub ell_s_direct: f64,
    /// `l1 b lambda + l2 x a`, zero for a valid pair.
    pub pair_residual: f64,
}

impl SliceData {
    /// Printed minus direct values of `(beta_s, ell_s)`.
    pub fn printed_defect(&self) -> [f64; 2] {
        [
            self.beta_s - self.beta_s_direct,
            self.ell_s - self.ell_s_direct,
        ]
    }
}

/// Both sides of the offset-slice rotation identity at one `u`.
#[derive(Debug, Clone, Copy)]
pub struct RotationRelation {
    /// Slice of the surface offset by `t_tilde` along its frame normal.
    pub lhs: [f64; 2],
    /// Offset slice, rotated.
    pub rhs: [f64; 2],
    pub residual: f64,
    pub rotation: [[f64; 2]; 2],
    /// Slice offset `t` matched to the surface offset.
    pub slice_offset: f64,
}

#[derive(Debug, Clone)]
pub struct HelicoidalSurface {
    profile: LegendreCurve,
    lambda: f64,
}

impl HelicoidalSurface {
    pub fn new(profile: LegendreCurve, lambda: f64) -> Result<Self, HelicoidError> {
        if lambda.abs() <= 1e-12 {
            return Err(HelicoidError::ZeroPitch);
        }
        Ok(HelicoidalSurface { profile, lambda })
    }

    pub fn profile(&self) -> &LegendreCurve {
        &self.profile
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn point(&self, u: f64, v: f64) -> Result<[f64; 3], HelicoidError> {
        let ([x, z], _) = self.profile.point(u)?;
        Ok([x * v.cos(), x * v.sin(), z + self.lambda * v])
    }

    /// Position with first and second partials.
    pub fn surface_partials(&self, u: f64, v: f64) -> Result<SurfacePartials, HelicoidError> {
        let cj = self.profile.jets(u, 2)?;
        let (cv, sv) = (v.cos(), v.sin());
        let (x, xd, xdd) = (cj.x.value(), cj.x.derivative(1), cj.x.derivative(2));
        let (z, zd, zdd) = (cj.z.value(), cj.z.derivative(1), cj.z.derivative(2));
        Ok(SurfacePartials {
            r: [x * cv, x * sv, z + self.lambda * v],
            ru: [xd * cv, xd * sv, zd],
            rv: [-x * sv, x * cv, self.lambda],
            ruu: [xdd * cv, xdd * sv, zdd],
            ruv: [-xd * sv, xd * cv, 0.0],
            rvv: [-x * cv, -x * sv, 0.0],
        })
    }

    /// Swept frame pair `nu1 = (a cos v, a sin v, b)`, `nu2 = (-sin v, cos v, 0)`.
    pub fn gfs_frames(&self, u: f64, v: f64) -> Result<([f64; 3], [f64; 3]), HelicoidError> {
        let (_, [a, b]) = self.profile.point(u)?;
        Ok((
            [a * v.cos(), a * v.sin(), b],
            [-v.sin(), v.cos(), 0.0],
        ))
    }

    /// Raw surface normal and its decomposition along the swept pair.
    pub fn normal(&self, u: f64, v: f64) -> Result<NormalDecomposition, HelicoidError> {
        let sp = self.surface_partials(u, v)?;
        let (nu1, nu2) = self.gfs_frames(u, v)?;
        let cj = self.profile.jets(u, 1)?;
        let (_, beta) = cj.ell_beta();
        let (x, b) = (cj.x.value(), cj.b.value());
        Ok(NormalDecomposition {
            raw: sp.raw_normal(),
            nu1,
            nu2,
            alpha_r: -beta.value() * x,
            beta_r: beta.value() * b * self.lambda,
        })
    }

    /// Jet of the squared normal length `beta^2 (x^2 + b^2 lambda^2)`; its
    /// zeros are exactly the singular parameters.
    pub fn normal_norm2_jet(&self, u: f64, order: usize) -> Result<Jet, HelicoidError> {
        let cj = self.profile.jets(u, (order + 1).min(MAX_ORDER))?;
        let (_, beta) = cj.ell_beta();
        let xx = cj.x.mul(&cj.x);
        let bb = cj.b.mul(&cj.b).scale(self.lambda * self.lambda);
        Ok(beta.mul(&beta).mul(&xx.add(&bb)).truncate(order))
    }

    /// Invariants of the swept (generalised) frame, by their closed forms:
    /// rows `(0, 0, beta)` and `(lambda b, x, lambda a)`, rotation triples
    /// `(0, ell, 0)` and `(a, 0, b)`.
    pub fn gfs_invariants(&self, u: f64) -> Result<FrameInvariants, HelicoidError> {
        let j = self.gfs_invariant_jets(u)?;
        Ok(FrameInvariants::from_entries(
            [
                [j.a1.value, j.b1.value, j.c1.value],
                [j.a2.value, j.b2.value, j.c2.value],
            ],
            [j.e1.value, j.f1.value, j.g1.value],
            [j.e2.value, j.f2.value, j.g2.value],
            false,
        ))
    }

    /// Same entries with their u-derivatives; all v-derivatives vanish.
    pub fn gfs_invariant_jets(&self, u: f64) -> Result<InvariantJets, HelicoidError> {
        let cj = self.profile.jets(u, 3)?;
        let (ell, beta) = cj.ell_beta();
        let lam = self.lambda;
        Ok(InvariantJets {
            a1: EntryJet::default(),
            b1: EntryJet::default(),
            c1: entry(&beta),
            a2: entry(&cj.b.scale(lam)),
            b2: entry(&cj.x),
            c2: entry(&cj.a.scale(lam)),
            e1: EntryJet::default(),
            f1: entry(&ell),
            g1: EntryJet::default(),
            e2: entry(&cj.a),
            f2: EntryJet::default(),
            g2: entry(&cj.b),
            strict: false,
        })
    }

    /// Unit pair jets for the strict frame at `u`, to the requested order.
    pub fn k_jets(
        &self,
        sel: &FrameSelection,
        u: f64,
        order: usize,
    ) -> Result<(Jet, Jet), HelicoidError> {
        match sel {
            FrameSelection::Default => {
                let cj = self.profile.jets(u, MAX_ORDER)?;
                let (k1, k2, _) = smooth_unit_pair(&cj.b.scale(self.lambda), &cj.x, u)?;
                if k1.order() < order {
                    return Err(HelicoidError::NoSmoothSelection {
                        u,
                        reason: "jet order exhausted by deflation",
                    });
                }
                Ok((k1.truncate(order), k2.truncate(order)))
            }
            FrameSelection::User { k1, k2 } => {
                let k1 = k1.jet(u, order)?;
                let k2 = k2.jet(u, order)?;
                let cj = self.profile.jets(u, 0)?;
                let (x, b) = (cj.x.value(), cj.b.value());
                let unit_dev = (k1.value() * k1.value() + k2.value() * k2.value() - 1.0).abs();
                let constraint_dev = (-k1.value() * x + k2.value() * b * self.lambda).abs();
                if unit_dev > ORTHONORMAL_TOL || constraint_dev > TANGENCY_TOL {
                    return Err(HelicoidError::InvalidFrameSelection {
                        u,
                        deviation: unit_dev.max(constraint_dev),
                    });
                }
                Ok((k1, k2))
            }
        }
    }

    pub fn k_values(&self, sel: &FrameSelection, u: f64) -> Result<(f64, f64), HelicoidError> {
        let (k1, k2) = self.k_jets(sel, u, 0)?;
        Ok((k1.value(), k2.value()))
    }

    /// Strict frame normal `n = k2 nu1 - k1 nu2`.
    pub fn frame_n(&self, sel: &FrameSelection, u: f64, v: f64) -> Result<[f64; 3], HelicoidError> {
        let (k1, k2) = self.k_values(sel, u)?;
        let (nu1, nu2) = self.gfs_frames(u, v)?;
        Ok(sub3(scale3(k2, nu1), scale3(k1, nu2)))
    }

    /// Strict frame tangent `s = (-b cos v, -b sin v, a)`, the unit direction
    /// of `r_u` wherever the surface is regular.
    pub fn frame_s(&self, u: f64, v: f64) -> Result<[f64; 3], HelicoidError> {
        let (_, [a, b]) = self.profile.point(u)?;
        Ok([-b * v.cos(), -b * v.sin(), a])
    }

    /// Invariants of the strict frame `(n, s)`, by their closed forms:
    /// rows `(beta, 0)` and `(lambda a, -k2 x - k1 b lambda)`, rotation
    /// triples `(k2 ell, k2 k1' - k1 k2', k1 ell)` and `(-k1 b, -a, k2 b)`.
    pub fn framed_invariants(
        &self,
        sel: &FrameSelection,
        u: f64,
    ) -> Result<FrameInvariants, HelicoidError> {
        let j = self.framed_invariant_jets(sel, u)?;
        Ok(FrameInvariants::from_entries(
            [
                [j.a1.value, j.b1.value, 0.0],
                [j.a2.value, j.b2.value, 0.0],
            ],
            [j.e1.value, j.f1.value, j.g1.value],
            [j.e2.value, j.f2.value, j.g2.value],
            true,
        ))
    }

    /// Same entries with their u-derivatives; all v-derivatives vanish.
    pub fn framed_invariant_jets(
        &self,
        sel: &FrameSelection,
        u: f64,
    ) -> Result<InvariantJets, HelicoidError> {
        let cj = self.profile.jets(u, 4)?;
        let (ell, beta) = cj.ell_beta();
        let (k1, k2) = self.k_jets(sel, u, 3)?;
        let lam = self.lambda;
        let b2 = k2.mul(&cj.x).add(&k1.mul(&cj.b).scale(lam)).neg();
        let f1 = k2.mul(&k1.deriv()).sub(&k1.mul(&k2.deriv()));
        Ok(InvariantJets {
            a1: entry(&beta),
            b1: EntryJet::default(),
            c1: EntryJet::default(),
            a2: entry(&cj.a.scale(lam)),
            b2: entry(&b2),
            c2: EntryJet::default(),
            e1: entry(&k2.mul(&ell)),
            f1: entry(&f1),
            g1: entry(&k1.mul(&ell)),
            e2: entry(&k1.mul(&cj.b).neg()),
            f2: entry(&cj.a.neg()),
            g2: entry(&k2.mul(&cj.b)),
            strict: true,
        })
    }

    /// Curvature of the strict frame by closed forms:
    /// `jf = -beta (k2 x + k1 b lambda)`,
    /// `kf = -(k2' b + k2 ell a)`,
    /// `hf = -(-beta a - lambda a (k2 k1' - k1 k2') - (k2 x + k1 b lambda) k2 ell) / 2`.
    pub fn curvature(
        &self,
        sel: &FrameSelection,
        u: f64,
    ) -> Result<FramedCurvature, HelicoidError> {
        let cj = self.profile.jets(u, 2)?;
        let (ell, beta) = cj.ell_beta();
        let (k1j, k2j) = self.k_jets(sel, u, 1)?;
        let (k1, k2) = (k1j.value(), k2j.value());
        let (k1d, k2d) = (k1j.derivative(1), k2j.derivative(1));
        let (x, a, b) = (cj.x.value(), cj.a.value(), cj.b.value());
        let (ell, beta) = (ell.value(), beta.value());
        let lam = self.lambda;
        let joint = k2 * x + k1 * b * lam;
        Ok(FramedCurvature {
            jf: -beta * joint,
            kf: -(k2d * b + k2 * ell * a),
            hf: -0.5 * (-beta * a - lam * a * (k2 * k1d - k1 * k2d) - joint * k2 * ell),
        })
    }

    pub fn slice_point(&self, u: f64, variant: SliceVariant) -> Result<[f64; 2], HelicoidError> {
        let ([x, z], _) = self.profile.point(u)?;
        let phi = z / self.lambda;
        let second = match variant {
            SliceVariant::Slice => -x * phi.sin(),
            SliceVariant::Mirror => x * phi.sin(),
        };
        Ok([x * phi.cos(), second])
    }

    /// Deflated unit pair `(l1, l2)` proportional to `(x a, -b lambda)`.
    pub fn slice_pair_jets(&self, u: f64) -> Result<(Jet, Jet, usize), HelicoidError> {
        let cj = self.profile.jets(u, MAX_ORDER)?;
        smooth_unit_pair(&cj.x.mul(&cj.a), &cj.b.scale(-self.lambda), u)
    }

    /// Legendre data of the slice curve at `u`.
    pub fn slice_legendre(&self, u: f64) -> Result<SliceData, HelicoidError> {
        let cj = self.profile.jets(u, MAX_ORDER)?;
        let (_, beta_j) = cj.ell_beta();
        let (l1, l2, deflation_order) = self.slice_pair_jets(u)?;
        let phi = cj.z.scale(1.0 / self.lambda);
        let (sphi, cphi) = phi.sin_cos();
        let s1 = cj.x.mul(&cphi);
        let s2 = cj.x.mul(&sphi).neg();
        let n1 = l2.mul(&sphi).neg().sub(&l1.mul(&cphi));
        let n2 = l2.mul(&cphi).neg().add(&l1.mul(&sphi));
        let mu1 = n2.neg();
        let mu2 = n1;
        let (x, a, b) = (cj.x.value(), cj.a.value(), cj.b.value());
        let beta = beta_j.value();
        let (l1v, l2v) = (l1.value(), l2.value());
        let (l1d, l2d) = (l1.derivative(1), l2.derivative(1));
        Ok(SliceData {
            l1: l1v,
            l2: l2v,
            deflation_order,
            nu_s: [n1.value(), n2.value()],
            mu_s: [mu1.value(), mu2.value()],
            beta_s: (l1v * x * a - l2v * b) * beta,
            ell_s: -a * beta + l1v * l2d - l1d * l2v,
            beta_s_direct: s1.derivative(1) * mu1.value() + s2.derivative(1) * mu2.value(),
            ell_s_direct: n1.derivative(1) * mu1.value() + n2.derivative(1) * mu2.value(),
            pair_residual: l1v * b * self.lambda + l2v * x * a,
        })
    }

    /// Surface point pushed along the strict frame normal by `t_tilde`.
    pub fn parallel_point(
        &self,
        sel: &FrameSelection,
        t_tilde: f64,
        u: f64,
        v: f64,
    ) -> Result<[f64; 3], HelicoidError> {
        let r = self.point(u, v)?;
        let n = self.frame_n(sel, u, v)?;
        Ok(add3(r, scale3(t_tilde, n)))
    }

    /// Slice point pushed along the slice normal by `t`.
    pub fn parallel_slice_point(&self, t: f64, u: f64) -> Result<[f64; 2], HelicoidError> {
        let s = self.slice_point(u, SliceVariant::Slice)?;
        let sd = self.slice_legendre(u)?;
        Ok([s[0] + t * sd.nu_s[0], s[1] + t * sd.nu_s[1]])
    }

    /// Checks that slicing the offset surface equals rotating the offset
    /// slice. The offset surface is again of screw type with radial part
    /// `A = |(x + t k2 a, t k1)|` and lifted angle, so its slice is computed
    /// in closed form; the right side offsets the slice by the matched `t`
    /// and applies the rotation by `t_tilde k2 b / lambda`.
    pub fn rotation_relation(
        &self,
        sel: &FrameSelection,
        t_tilde: f64,
        u: f64,
    ) -> Result<RotationRelation, HelicoidError> {
        let ([x, z], [a, b]) = self.profile.point(u)?;
        let (k1, k2) = self.k_values(sel, u)?;
        let ax = x + t_tilde * k2 * a;
        let ay = t_tilde * k1;
        let radius = ax.hypot(ay);
        if radius < EPS_ZERO {
            return Err(HelicoidError::PolarDataUndefined { u });
        }
        let theta = ay.atan2(ax);
        let psi = z / self.lambda + theta;
        let delta = t_tilde * k2 * b / self.lambda;
        let lhs = [radius * (psi + delta).cos(), -radius * (psi + delta).sin()];
        let sd = self.slice_legendre(u)?;
        let t = if sd.l2.abs() >= sd.l1.abs() {
            t_tilde * k1 / sd.l2
        } else {
            -t_tilde * k2 * a / sd.l1
        };
        let st = self.parallel_slice_point(t, u)?;
        let rotation = [[delta.cos(), delta.sin()], [-delta.sin(), delta.cos()]];
        let rhs = [
            rotation[0][0] * st[0] + rotation[0][1] * st[1],
            rotation[1][0] * st[0] + rotation[1][1] * st[1],
        ];
        let residual = (lhs[0] - rhs[0]).hypot(lhs[1] - rhs[1]);
        Ok(RotationRelation {
            lhs,
            rhs,
            residual,
            rotation,
            slice_offset: t,
        })
    }
}

fn entry(j: &Jet) -> EntryJet {
    EntryJet {
        value: j.value(),
        du: j.derivative(1),
        dv: 0.0,
    }
}

/// Divides the common vanishing factor out of `(p, q)` at the base point and
/// normalizes to a unit pair. Returns the pair untouched (normalized) when it
/// does not vanish there.
fn smooth_unit_pair(p: &Jet, q: &Jet, u: f64) -> Result<(Jet, Jet, usize), HelicoidError> {
    let mut p = *p;
    let mut q = *q;
    let mut m = 0;
    if p.value().hypot(q.value()) <= EPS_ZERO {
        let scale = p
            .coeffs()
            .iter()
            .chain(q.coeffs())
            .fold(0.0f64, |acc, c| acc.max(c.abs()));
        if scale <= VANISH_TOL {
            return Err(HelicoidError::NoSmoothSelection {
                u,
                reason: "pair vanishes to jet order",
            });
        }
        let tol = 1e-9 * scale;
        let order = p.order().min(q.order());
        m = (0..=order)
            .find(|&k| p.coeff(k).abs().max(q.coeff(k).abs()) > tol)
            .ok_or(HelicoidError::NoSmoothSelection {
                u,
                reason: "no coefficient clears the deflation tolerance",
            })?;
        p = p
            .deflate(m, tol)
            .ok_or(HelicoidError::NoSmoothSelection {
                u,
                reason: "vanishing orders disagree",
            })?;
        q = q
            .deflate(m, tol)
            .ok_or(HelicoidError::NoSmoothSelection {
                u,
                reason: "vanishing orders disagree",
            })?;
    }
    let norm = p
        .mul(&p)
        .add(&q.mul(&q))
        .sqrt()
        .map_err(|_| HelicoidError::NoSmoothSelection {
            u,
            reason: "normalization degenerates after deflation",
        })?;
    Ok((p.div(&norm)?, q.div(&norm)?, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{profile, DEFAULT_LAMBDA};
    use crate::framed::{
        basic_invariants, frame_samples, framed_curvature, gauss_mean_from_partials,
        gfs_invariants as gfs_from_samples, integrability_residual,
    };
    use crate::linalg::{dot3, norm3};
    use approx::assert_abs_diff_eq;

    fn surface(name: &str) -> HelicoidalSurface {
        HelicoidalSurface::new(profile(name).unwrap(), DEFAULT_LAMBDA).unwrap()
    }

    #[test]
    fn rejects_zero_pitch() {
        assert!(matches!(
            HelicoidalSurface::new(profile("a2").unwrap(), 0.0),
            Err(HelicoidError::ZeroPitch)
        ));
    }

    #[test]
    fn evaluation_matches_hand_values_and_screw_period() {
        let h = surface("a2");
        let p = h.point(0.0, 0.0).unwrap();
        assert_abs_diff_eq!(norm3(p), 0.0, epsilon = 1e-15);
        let sp = h.surface_partials(0.0, 0.0).unwrap();
        assert_abs_diff_eq!(norm3(sub3(sp.ru, [0.0, 0.0, 1.0])), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(norm3(sub3(sp.rv, [0.0, 0.0, 0.5])), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(norm3(sp.raw_normal()), 0.0, epsilon = 1e-12);
        let p = h.point(1.0, 0.0).unwrap();
        assert_abs_diff_eq!(norm3(sub3(p, [1.0, 0.0, 1.0])), 0.0, epsilon = 1e-12);
        for (u, v) in [(0.3, 0.4), (-1.2, 2.0), (0.9, -0.7)] {
            let lo = h.point(u, v).unwrap();
            let hi = h.point(u, v + std::f64::consts::TAU).unwrap();
            let lift = [0.0, 0.0, std::f64::consts::TAU * h.lambda()];
            assert_abs_diff_eq!(norm3(sub3(sub3(hi, lo), lift)), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn normal_decomposition_recombines() {
        let h = surface("a4");
        for (u, v) in [(0.3, 0.0), (0.8, 1.3), (-0.5, -2.1)] {
            let nd = h.normal(u, v).unwrap();
            let rebuilt = add3(scale3(nd.alpha_r, nd.nu1), scale3(nd.beta_r, nd.nu2));
            assert_abs_diff_eq!(norm3(sub3(nd.raw, rebuilt)), 0.0, epsilon = 1e-10);
        }
        // both coefficients carry the factor beta
        let nd = h.normal(0.0, 0.7).unwrap();
        assert_abs_diff_eq!(nd.alpha_r, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(nd.beta_r, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn gfs_invariants_match_printed_values_and_numeric_frames() {
        let h = surface("a2");
        let inv = h.gfs_invariants(0.0).unwrap();
        assert_abs_diff_eq!(inv.g[0][2], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.g[1][2], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.f1[1], -2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.f2[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.f2[2], 0.0, epsilon = 1e-12);
        // numeric frame oracle at a generic point
        let (u, v) = (0.4, 1.1);
        let d = frame_samples(
            |u, v| h.point(u, v).unwrap(),
            |u, v| h.gfs_frames(u, v).unwrap().0,
            |u, v| h.gfs_frames(u, v).unwrap().1,
            u,
            v,
            1e-3,
        );
        let num = gfs_from_samples(&d).unwrap();
        let cf = h.gfs_invariants(u).unwrap();
        for r in 0..2 {
            for c in 0..3 {
                assert_abs_diff_eq!(num.g[r][c], cf.g[r][c], epsilon = 1e-10);
            }
        }
        for c in 0..3 {
            assert_abs_diff_eq!(num.f1[c], cf.f1[c], epsilon = 1e-10);
            assert_abs_diff_eq!(num.f2[c], cf.f2[c], epsilon = 1e-10);
        }
        assert_abs_diff_eq!(num.alpha_r, cf.alpha_r, epsilon = 1e-10);
        assert_abs_diff_eq!(num.beta_r, cf.beta_r, epsilon = 1e-10);
    }

    #[test]
    fn default_selection_deflates_joint_zeros() {
        let h = surface("a2");
        let (k1, k2) = h.k_values(&FrameSelection::Default, 0.0).unwrap();
        assert_abs_diff_eq!(k1, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(k2, 0.0, epsilon = 1e-12);
        // constraints on a grid crossing the deflation point
        for i in 0..=200 {
            let u = -1.0 + i as f64 / 100.0;
            let (k1, k2) = h.k_values(&FrameSelection::Default, u).unwrap();
            let ([x, _], [_, b]) = h.profile().point(u).unwrap();
            assert_abs_diff_eq!(k1 * k1 + k2 * k2, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(-k1 * x + k2 * b * h.lambda(), 0.0, epsilon = 1e-12);
        }
        // e8 deflates once, e6 twice; circle never
        assert!(surface("e8").slice_pair_jets(0.0).unwrap().2 <= 3);
        let (k1, k2) = surface("circle")
            .k_values(&FrameSelection::Default, 2.0)
            .unwrap();
        assert_abs_diff_eq!(k1 * k1 + k2 * k2, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn user_selection_is_validated() {
        let h = surface("vline");
        // vline has (b lambda, x) = (0, 1): k = (0, 1) works, (1, 0) breaks
        let good = FrameSelection::User {
            k1: Expr::parse("0").unwrap(),
            k2: Expr::parse("1").unwrap(),
        };
        assert!(h.k_values(&good, 0.3).is_ok());
        let bad = FrameSelection::User {
            k1: Expr::parse("1").unwrap(),
            k2: Expr::parse("0").unwrap(),
        };
        assert!(matches!(
            h.k_values(&bad, 0.3),
            Err(HelicoidError::InvalidFrameSelection { .. })
        ));
        let non_unit = FrameSelection::User {
            k1: Expr::parse("0").unwrap(),
            k2: Expr::parse("2").unwrap(),
        };
        assert!(matches!(
            h.k_values(&non_unit, 0.3),
            Err(HelicoidError::InvalidFrameSelection { .. })
        ));
    }

    #[test]
    fn framed_invariants_match_printed_values_at_origin() {
        let h = surface("a2");
        let inv = h.framed_invariants(&FrameSelection::Default, 0.0).unwrap();
        assert_abs_diff_eq!(inv.g[0][0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.g[0][1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.g[1][0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.g[1][1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.f2[1], -1.0, epsilon = 1e-12);
        assert!(inv.strict);
    }

    #[test]
    fn framed_invariants_match_numeric_frame_differentiation() {
        // settles the rotation-entry signs, e2 = -k1 b in particular
        let sel = FrameSelection::Default;
        for name in ["a2", "a4", "e6", "e8"] {
            let h = surface(name);
            for u in [0.7, -0.9, 0.35] {
                let v = 0.6;
                let d = frame_samples(
                    |u, v| h.point(u, v).unwrap(),
                    |u, v| h.frame_n(&sel, u, v).unwrap(),
                    |u, v| h.frame_s(u, v).unwrap(),
                    u,
                    v,
                    1e-4,
                );
                let num = basic_invariants(&d).unwrap();
                let cf = h.framed_invariants(&sel, u).unwrap();
                for r in 0..2 {
                    for c in 0..2 {
                        assert_abs_diff_eq!(num.g[r][c], cf.g[r][c], epsilon = 1e-10);
                    }
                }
                for c in 0..3 {
                    assert_abs_diff_eq!(num.f1[c], cf.f1[c], epsilon = 1e-10);
                    assert_abs_diff_eq!(num.f2[c], cf.f2[c], epsilon = 1e-10);
                }
            }
        }
    }

    #[test]
    fn invariants_satisfy_integrability_on_grids() {
        for name in ["a2", "a4", "e6", "e8"] {
            let h = surface(name);
            for i in 0..=50 {
                let u = -2.0 + 4.0 * i as f64 / 50.0;
                let res = integrability_residual(&h.gfs_invariant_jets(u).unwrap());
                assert_eq!(res.len(), 7);
                for r in &res {
                    assert!(r.abs() < 1e-9, "{name} gfs at {u}: {r:.3e}");
                }
                let res = integrability_residual(
                    &h.framed_invariant_jets(&FrameSelection::Default, u).unwrap(),
                );
                assert_eq!(res.len(), 6);
                for r in &res {
                    assert!(r.abs() < 1e-9, "{name} framed at {u}: {r:.3e}");
                }
            }
        }
    }

    #[test]
    fn curvature_closed_forms_agree_with_determinants_and_geometry() {
        let sel = FrameSelection::Default;
        let h = surface("a2");
        let cf = h.curvature(&sel, 0.0).unwrap();
        assert_abs_diff_eq!(cf.jf, 0.0, epsilon = 1e-12);
        for i in 0..100 {
            let u = -1.9 + 3.8 * i as f64 / 99.0;
            let closed = h.curvature(&sel, u).unwrap();
            let det = framed_curvature(&h.framed_invariants(&sel, u).unwrap()).unwrap();
            assert_abs_diff_eq!(closed.jf, det.jf, epsilon = 1e-12);
            assert_abs_diff_eq!(closed.kf, det.kf, epsilon = 1e-12);
            assert_abs_diff_eq!(closed.hf, det.hf, epsilon = 1e-12);
        }
        // classical curvature from the fundamental forms at a regular point
        let u = 0.5;
        let closed = h.curvature(&sel, u).unwrap();
        let sp = h.surface_partials(u, 0.0).unwrap();
        let n = h.frame_n(&sel, u, 0.0).unwrap();
        let (k, hm) = gauss_mean_from_partials(&sp, n);
        assert_abs_diff_eq!(closed.kf / closed.jf, k, epsilon = 1e-8);
        assert_abs_diff_eq!(closed.hf / closed.jf, hm, epsilon = 1e-8);
        // frame normal times area density matches the raw normal
        let nd = h.normal(u, 0.0).unwrap();
        let jf = closed.jf;
        assert_abs_diff_eq!(norm3(sub3(scale3(jf, n), nd.raw)), 0.0, epsilon = 1e-10);
    }

    #[test]
    fn invariants_are_v_independent() {
        let h = surface("e6");
        let sel = FrameSelection::Default;
        for u in [-1.1, 0.2, 0.9] {
            let d1 = frame_samples(
                |u, v| h.point(u, v).unwrap(),
                |u, v| h.frame_n(&sel, u, v).unwrap(),
                |u, v| h.frame_s(u, v).unwrap(),
                u,
                0.3,
                1e-3,
            );
            let d2 = frame_samples(
                |u, v| h.point(u, v).unwrap(),
                |u, v| h.frame_n(&sel, u, v).unwrap(),
                |u, v| h.frame_s(u, v).unwrap(),
                u,
                2.4,
                1e-3,
            );
            let i1 = basic_invariants(&d1).unwrap();
            let i2 = basic_invariants(&d2).unwrap();
            for r in 0..2 {
                for c in 0..2 {
                    assert_abs_diff_eq!(i1.g[r][c], i2.g[r][c], epsilon = 1e-11);
                }
            }
            for c in 0..3 {
                assert_abs_diff_eq!(i1.f1[c], i2.f1[c], epsilon = 1e-11);
                assert_abs_diff_eq!(i1.f2[c], i2.f2[c], epsilon = 1e-11);
            }
        }
    }

    #[test]
    fn singular_set_matches_normal_norm_indicator() {
        // singular exactly where the indicator jet vanishes
        let h = surface("a4");
        let g0 = h.normal_norm2_jet(0.0, 2).unwrap();
        assert_abs_diff_eq!(g0.value(), 0.0, epsilon = 1e-18);
        // x = 0 but b != 0 at u = -1: regular
        let g1 = h.normal_norm2_jet(-1.0, 2).unwrap();
        assert!(g1.value() > 1e-3);
        let nd = h.normal(-1.0, 0.0).unwrap();
        assert!(norm3(nd.raw) > 1e-2);
    }

    #[test]
    fn slice_points_follow_definitions() {
        let h = surface("a2");
        for i in 0..100 {
            let u = -2.0 + 4.0 * i as f64 / 99.0;
            let c = h.slice_point(u, SliceVariant::Mirror).unwrap();
            let expect = [u * u * (2.0 * u).cos(), u * u * (2.0 * u).sin()];
            assert_abs_diff_eq!(c[0], expect[0], epsilon = 1e-12);
            assert_abs_diff_eq!(c[1], expect[1], epsilon = 1e-12);
            let s = h.slice_point(u, SliceVariant::Slice).unwrap();
            assert_abs_diff_eq!(s[0], c[0], epsilon = 1e-15);
            assert_abs_diff_eq!(s[1], -c[1], epsilon = 1e-15);
        }
    }

    #[test]
    fn slice_legendre_pair_and_curvature() {
        let h = surface("a2");
        let sd = h.slice_legendre(0.0).unwrap();
        assert_abs_diff_eq!(sd.l1, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sd.l2, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sd.beta_s, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sd.beta_s_direct, 0.0, epsilon = 1e-12);
        for name in ["a2", "a4", "e6", "e8"] {
            let h = surface(name);
            for i in 0..=80 {
                let u = -2.0 + 4.0 * i as f64 / 80.0;
                let sd = h.slice_legendre(u).unwrap();
                assert!(sd.pair_residual.abs() < 1e-10, "{name} at {u}");
                assert_abs_diff_eq!(
                    sd.l1 * sd.l1 + sd.l2 * sd.l2,
                    1.0,
                    epsilon = 1e-12
                );
            }
        }
        // right helicoid: slice is the unit circle, never singular, and the
        // printed curvature misses the pitch scaling carried by the direct one
        let h = surface("vline");
        let sd = h.slice_legendre(0.8).unwrap();
        assert_abs_diff_eq!(sd.beta_s_direct, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sd.beta_s, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sd.printed_defect()[0], -1.0, epsilon = 1e-12);
        let s = h.slice_point(0.8, SliceVariant::Slice).unwrap();
        assert_abs_diff_eq!(s[0].hypot(s[1]), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn slice_frame_satisfies_defining_identities() {
        // d(slice)/du = beta_s_direct mu_s and d(nu_s)/du = ell_s_direct mu_s
        for name in ["a2", "e8", "circle"] {
            let h = surface(name);
            let dom = h.profile().domain();
            for i in 1..40 {
                let u = dom[0] + (dom[1] - dom[0]) * i as f64 / 40.0;
                let sd = h.slice_legendre(u).unwrap();
                let hstep = 1e-5;
                let sp = h.slice_point(u + hstep, SliceVariant::Slice).unwrap();
                let sm = h.slice_point(u - hstep, SliceVariant::Slice).unwrap();
                let sdot = [(sp[0] - sm[0]) / (2.0 * hstep), (sp[1] - sm[1]) / (2.0 * hstep)];
                let expect = [sd.beta_s_direct * sd.mu_s[0], sd.beta_s_direct * sd.mu_s[1]];
                assert_abs_diff_eq!(sdot[0], expect[0], epsilon = 1e-7);
                assert_abs_diff_eq!(sdot[1], expect[1], epsilon = 1e-7);
            }
        }
    }

    #[test]
    fn parallel_surface_offsets_by_unit_normal() {
        let h = surface("a2");
        let sel = FrameSelection::Default;
        let p0 = h.parallel_point(&sel, 0.0, 0.5, 0.3).unwrap();
        let r = h.point(0.5, 0.3).unwrap();
        assert_abs_diff_eq!(norm3(sub3(p0, r)), 0.0, epsilon = 1e-15);
        for (t, u, v) in [(0.1, 0.5, 0.0), (-0.3, -1.2, 2.0), (0.7, 0.9, -0.4)] {
            let p = h.parallel_point(&sel, t, u, v).unwrap();
            let r = h.point(u, v).unwrap();
            assert_abs_diff_eq!(norm3(sub3(p, r)), t.abs(), epsilon = 1e-12);
        }
        // independent frame computation
        let (u, v, t): (f64, f64, f64) = (0.5, 0.0, 0.1);
        let ([x, z], [a, b]) = h.profile().point(u).unwrap();
        let den = (x * x + b * b * h.lambda() * h.lambda()).sqrt();
        let (k1, k2) = (b * h.lambda() / den, x / den);
        let n = [
            k2 * a * v.cos() + k1 * v.sin(),
            k2 * a * v.sin() - k1 * v.cos(),
            k2 * b,
        ];
        let manual = [
            x * v.cos() + t * n[0],
            x * v.sin() + t * n[1],
            z + h.lambda() * v + t * n[2],
        ];
        let p = h.parallel_point(&sel, t, u, v).unwrap();
        assert_abs_diff_eq!(norm3(sub3(p, manual)), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn offset_slice_rotation_identity_holds() {
        let sel = FrameSelection::Default;
        let h = surface("a2");
        let rr = h.rotation_relation(&sel, 0.05, 0.5).unwrap();
        assert!(rr.residual < 1e-9, "residual {:.3e}", rr.residual);
        // rotation matrix is orthogonal with unit determinant
        let m = rr.rotation;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        assert_abs_diff_eq!(det, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m[0][0] * m[0][1] + m[1][0] * m[1][1], 0.0, epsilon = 1e-12);
        // zero offset reduces both sides to the slice curve
        let rr = h.rotation_relation(&sel, 0.0, 0.5).unwrap();
        assert_abs_diff_eq!(rr.residual, 0.0, epsilon = 1e-14);
        // vertical profile: constant frame, identity rotation
        let h = surface("vline");
        let sel_v = FrameSelection::Default;
        let rr = h.rotation_relation(&sel_v, 0.3, 0.8).unwrap();
        assert_abs_diff_eq!(rr.rotation[0][0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rr.rotation[0][1], 0.0, epsilon = 1e-12);
        assert!(rr.residual < 1e-12);
    }

    #[test]
    fn frame_normal_is_unit_and_orthogonal_to_tangents() {
        let h = surface("e8");
        let sel = FrameSelection::Default;
        for (u, v) in [(0.4, 0.0), (-0.7, 1.9), (1.3, -2.5)] {
            let n = h.frame_n(&sel, u, v).unwrap();
            let s = h.frame_s(u, v).unwrap();
            let sp = h.surface_partials(u, v).unwrap();
            assert_abs_diff_eq!(norm3(n), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(norm3(s), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(dot3(n, s), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(dot3(n, sp.ru), 0.0, epsilon = 1e-10);
            assert_abs_diff_eq!(dot3(n, sp.rv), 0.0, epsilon = 1e-10);
        }
    }
}
