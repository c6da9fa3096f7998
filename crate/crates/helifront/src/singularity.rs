//! Cusp recognition for plane curves and edge classification for
//! helicoidal surfaces along their singular set.
//!
//! A surface point is singular exactly where the normal indicator
//! `beta^2 (x^2 + b^2 lambda^2)` vanishes. When the profile radius `x` is
//! nonzero there, the edge traces the profile curve and inherits its plane
//! cusp type. When the parameter sits on the screw axis (`x = 0`), the
//! horizontal slice curve decides among four cuspidal edge types; its
//! derivatives up to order five are available in closed form and double as
//! an oracle check against jet differentiation of the slice itself.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::framed::EPS_ZERO;
use crate::helicoid::{HelicoidError, HelicoidalSurface};
use crate::jet::{Jet, MAX_ORDER};
use crate::legendre::LegendreError;
use crate::linalg::{det2, det2v};

/// Upper edge of the indecisive band: a normalized witness at or below
/// [`EPS_ZERO`] counts as zero, at or above `MARGINAL_TOL` as nonzero, and
/// anything between is reported as marginal rather than forced either way.
pub const MARGINAL_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum SingularityError {
    /// Input jets carry fewer derivative orders than the classifier reads.
    #[error("jet order {got} is too low, the classifier needs order {need}")]
    JetOrderTooLow { need: usize, got: usize },
    /// The order-five slice matrix drops terms carrying a factor of `x` and
    /// is only valid on the screw axis.
    #[error("order-five slice derivative needs x(u0) = 0, got x(u0) = {x}")]
    C5RequiresXZero { x: f64 },
    /// Closed-form slice derivative matrices exist for orders two to five.
    #[error("no closed-form slice derivative of order {0}")]
    UnsupportedSliceOrder(usize),
    #[error(transparent)]
    Profile(#[from] LegendreError),
    #[error(transparent)]
    Surface(#[from] HelicoidError),
}

/// Three-way outcome of a zero test against the tolerance band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Zeroness {
    Vanishes,
    Marginal,
    Clear,
}

fn zeroness(w: f64) -> Zeroness {
    let a = w.abs();
    if a <= EPS_ZERO {
        Zeroness::Vanishes
    } else if a < MARGINAL_TOL {
        Zeroness::Marginal
    } else {
        Zeroness::Clear
    }
}

/// Determinant scaled by the operand norms, which makes it the sine of the
/// angle between the vectors and hence scale-free. Falls back to the raw
/// determinant when an operand vanishes.
fn angle_det(p: [f64; 2], q: [f64; 2]) -> f64 {
    let scale = p[0].hypot(p[1]) * q[0].hypot(q[1]);
    let det = det2v(p, q);
    if scale > 1e-300 {
        det / scale
    } else {
        det
    }
}

/// Local diffeomorphism type of a plane curve at a parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspTag {
    RegularPoint,
    Cusp32,
    Cusp52,
    Cusp43,
    Cusp53,
    /// Outside the recognized normal forms, or decided inside the band.
    Degenerate,
}

impl CuspTag {
    pub fn label(self) -> &'static str {
        match self {
            CuspTag::RegularPoint => "RegularPoint",
            CuspTag::Cusp32 => "Cusp_3_2",
            CuspTag::Cusp52 => "Cusp_5_2",
            CuspTag::Cusp43 => "Cusp_4_3",
            CuspTag::Cusp53 => "Cusp_5_3",
            CuspTag::Degenerate => "Degenerate",
        }
    }
}

/// Numbers the plane cusp decision reads. Determinants are angle
/// determinants, see [`CuspClass`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct CuspWitnesses {
    /// First derivative norm; nonzero means the point is regular.
    pub speed: f64,
    /// Angle determinant of the second and third derivatives.
    pub det_2_3: f64,
    /// Second derivative norm.
    pub accel: f64,
    /// Factor with third derivative = k * second derivative, when defined.
    pub prop_k: Option<f64>,
    /// Angle determinant of (second derivative, 3 c5 - 10 k c4).
    pub det_5_2_test: Option<f64>,
    /// Angle determinant of the third and fourth derivatives.
    pub det_3_4: Option<f64>,
    /// Angle determinant of the third and fifth derivatives.
    pub det_3_5: Option<f64>,
}

/// Plane cusp classification together with the numbers that decided it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuspClass {
    pub tag: CuspTag,
    /// A deciding witness fell between the zero and nonzero thresholds.
    pub marginal: bool,
    pub witnesses: CuspWitnesses,
}

/// Classify the local type of a plane curve from component jets of order at
/// least five at a common base point.
///
/// The decision cascade follows the derivative tests for the 3/2, 5/2, 4/3
/// and 5/3 normal forms; anything that falls through, and any input whose
/// deciding witness lands inside the marginal band, is `Degenerate`.
pub fn classify_plane_cusp(cx: &Jet, cy: &Jet) -> Result<CuspClass, SingularityError> {
    const NEED: usize = 5;
    let got = cx.order().min(cy.order());
    if got < NEED {
        return Err(SingularityError::JetOrderTooLow { need: NEED, got });
    }
    let d = |k: usize| [cx.derivative(k), cy.derivative(k)];
    let (d2, d3, d4, d5) = (d(2), d(3), d(4), d(5));
    let done = |tag: CuspTag, marginal: bool, witnesses: CuspWitnesses| {
        Ok(CuspClass {
            tag,
            marginal,
            witnesses,
        })
    };

    let d1 = d(1);
    let mut w = CuspWitnesses {
        speed: d1[0].hypot(d1[1]),
        ..CuspWitnesses::default()
    };
    if w.speed > EPS_ZERO {
        return done(CuspTag::RegularPoint, false, w);
    }

    w.det_2_3 = angle_det(d2, d3);
    match zeroness(w.det_2_3) {
        Zeroness::Clear => return done(CuspTag::Cusp32, false, w),
        Zeroness::Marginal => return done(CuspTag::Degenerate, true, w),
        Zeroness::Vanishes => {}
    }

    w.accel = d2[0].hypot(d2[1]);
    match zeroness(w.accel) {
        Zeroness::Clear => {
            // third derivative must be proportional to the second; read the
            // factor off the dominant component and verify on the other one
            let i = usize::from(d2[1].abs() > d2[0].abs());
            let k = d3[i] / d2[i];
            w.prop_k = Some(k);
            let resid = (d3[1 - i] - k * d2[1 - i]).abs();
            let denom = d3[0].hypot(d3[1]).max(k.abs() * w.accel).max(1e-300);
            if resid / denom > MARGINAL_TOL {
                return done(CuspTag::Degenerate, true, w);
            }
            let probe = [
                3.0 * d5[0] - 10.0 * k * d4[0],
                3.0 * d5[1] - 10.0 * k * d4[1],
            ];
            let det = angle_det(d2, probe);
            w.det_5_2_test = Some(det);
            match zeroness(det) {
                Zeroness::Clear => done(CuspTag::Cusp52, false, w),
                Zeroness::Marginal => done(CuspTag::Degenerate, true, w),
                Zeroness::Vanishes => done(CuspTag::Degenerate, false, w),
            }
        }
        Zeroness::Marginal => done(CuspTag::Degenerate, true, w),
        Zeroness::Vanishes => {
            let det34 = angle_det(d3, d4);
            w.det_3_4 = Some(det34);
            match zeroness(det34) {
                Zeroness::Clear => return done(CuspTag::Cusp43, false, w),
                Zeroness::Marginal => return done(CuspTag::Degenerate, true, w),
                Zeroness::Vanishes => {}
            }
            let det35 = angle_det(d3, d5);
            w.det_3_5 = Some(det35);
            match zeroness(det35) {
                Zeroness::Clear => done(CuspTag::Cusp53, false, w),
                Zeroness::Marginal => done(CuspTag::Degenerate, true, w),
                Zeroness::Vanishes => done(CuspTag::Degenerate, false, w),
            }
        }
    }
}

/// First column of the rotation-form matrix carrying the `n`-th derivative
/// of the horizontal slice curve: the full matrix is `[[c11, -c21], [c21,
/// c11]]` applied to `(cos(z/lambda), sin(z/lambda))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SliceJetMatrix {
    pub n: usize,
    pub c11: f64,
    pub c21: f64,
}

impl SliceJetMatrix {
    pub fn c12(&self) -> f64 {
        -self.c21
    }

    pub fn c22(&self) -> f64 {
        self.c11
    }

    /// The `n`-th derivative vector of the slice at turning angle `phi`.
    pub fn apply(&self, phi: f64) -> [f64; 2] {
        let (s, c) = phi.sin_cos();
        [
            self.c11 * c - self.c21 * s,
            self.c21 * c + self.c11 * s,
        ]
    }
}

/// Closed-form `n`-th derivative matrix of the slice curve at `u0` for `n`
/// in `2..=5`. The order-five form is restricted to parameters with
/// `x(u0) = 0` because its `x`-carrying terms are dropped.
pub fn slice_jet_closed_form(
    h: &HelicoidalSurface,
    u0: f64,
    n: usize,
) -> Result<SliceJetMatrix, SingularityError> {
    if !(2..=5).contains(&n) {
        return Err(SingularityError::UnsupportedSliceOrder(n));
    }
    let cj = h.profile().jets(u0, MAX_ORDER)?;
    let (ell, beta) = cj.ell_beta();
    let la = h.lambda();
    let x = cj.x.value();
    let a = cj.a.value();
    let b = cj.b.value();
    // l = ell and derivatives, q = beta and derivatives
    let (l0, l1, l2, l3) = (
        ell.value(),
        ell.derivative(1),
        ell.derivative(2),
        ell.derivative(3),
    );
    let (q0, q1, q2, q3, q4) = (
        beta.value(),
        beta.derivative(1),
        beta.derivative(2),
        beta.derivative(3),
        beta.derivative(4),
    );
    let (c11, c21) = match n {
        2 => (
            -b * q1 - l0 * a * q0 - q0 * q0 * a * a * x / (la * la),
            -(-x * a * q1 + 2.0 * a * b * q0 * q0 + l0 * x * b * q0) / la,
        ),
        3 => (
            -2.0 * l0 * a * q1 - b * q2 - l1 * a * q0 + l0 * l0 * b * q0
                + (-3.0 * q0 * q1 * a * a * x
                    + 3.0 * q0 * q0 * a * b * l0 * x
                    + 3.0 * q0.powi(3) * a * a * b)
                    / (la * la),
            (-6.0 * a * b * q0 * q1 - 2.0 * x * b * l0 * q1 + x * a * q2
                + 3.0 * b * b * l0 * q0 * q0
                - 3.0 * a * a * l0 * q0 * q0
                - l1 * x * b * q0
                - x * a * l0 * l0 * q0)
                / la
                - q0.powi(3) * a.powi(3) * x / la.powi(3),
        ),
        4 => (
            -3.0 * l1 * a * q1 + 3.0 * l0 * l0 * b * q1 - 3.0 * l0 * a * q2 - b * q3
                - l2 * a * q0
                + 3.0 * l0 * l1 * b * q0
                + l0.powi(3) * a * q0
                + (-3.0 * q1 * q1 * a * a * x - 4.0 * q0 * q2 * a * a * x
                    + 14.0 * q0 * q1 * a * l0 * b * x
                    + 18.0 * q0 * q0 * q1 * a * a * b
                    - 3.0 * q0 * q0 * b * b * l0 * l0 * x
                    + 4.0 * q0 * q0 * a * a * l0 * l0 * x
                    + 4.0 * q0 * q0 * a * b * l1 * x
                    - 12.0 * q0.powi(3) * a * b * b * l0
                    + 6.0 * q0.powi(3) * a.powi(3) * l0)
                    / (la * la)
                + q0.powi(4) * a.powi(4) * x / la.powi(4),
            (14.0 * l0 * b * b * q0 * q1 - 14.0 * a * a * l0 * q0 * q1
                - 6.0 * a * b * q1 * q1
                - 8.0 * a * b * q0 * q2
                - 3.0 * l0 * l0 * a * x * q1
                - 3.0 * x * b * l1 * q1
                - 3.0 * x * b * l0 * q2
                + x * a * q3
                + 14.0 * a * b * l0 * l0 * q0 * q0
                + 4.0 * b * b * l1 * q0 * q0
                - 4.0 * a * a * l1 * q0 * q0
                - l2 * x * b * q0
                - 3.0 * l1 * x * l0 * a * q0
                + x * l0.powi(3) * q0 * b)
                / la
                + (-6.0 * q0 * q0 * q1 * a.powi(3) * x
                    + 4.0 * q0.powi(4) * a.powi(3) * b
                    + 6.0 * q0.powi(3) * a * a * x * l0 * b)
                    / la.powi(3),
        ),
        _ => {
            if x.abs() > EPS_ZERO {
                return Err(SingularityError::C5RequiresXZero { x });
            }
            (
                -b * q0 * l0.powi(4)
                    + 4.0 * a * l0.powi(3) * q1
                    + 6.0 * a * q0 * l0 * l0 * l1
                    + 12.0 * b * l0 * q1 * l1
                    + 3.0 * b * q0 * l1 * l1
                    + 6.0 * b * l0 * l0 * q2
                    - 6.0 * a * l1 * q2
                    + 4.0 * b * q0 * l0 * l2
                    - 4.0 * a * q1 * l2
                    - 4.0 * a * l0 * q3
                    - a * q0 * l3
                    - b * q4
                    + (-60.0 * a * a * b * q0.powi(3) * l0 * l0
                        + 15.0 * b.powi(3) * q0.powi(3) * l0 * l0
                        + 50.0 * a.powi(3) * q0 * q0 * l0 * q1
                        - 100.0 * a * b * b * q0 * q0 * l0 * q1
                        + 45.0 * a * a * b * q0 * q1 * q1
                        + 10.0 * a.powi(3) * q0.powi(3) * l1
                        - 20.0 * a * b * b * q0.powi(3) * l1
                        + 30.0 * a * a * b * q0 * q0 * q2)
                        / (la * la)
                    - 5.0 * a.powi(4) * b * q0.powi(5) / la.powi(4),
                (15.0 * a * a * q0 * q0 * l0.powi(3) - 15.0 * b * b * q0 * q0 * l0.powi(3)
                    + 90.0 * a * b * q0 * l0 * l0 * q1
                    - 20.0 * a * a * l0 * q1 * q1
                    + 20.0 * b * b * l0 * q1 * q1
                    + 50.0 * a * b * q0 * q0 * l0 * l1
                    - 25.0 * a * a * q0 * q1 * l1
                    + 25.0 * b * b * q0 * q1 * l1
                    - 25.0 * a * a * q0 * l0 * q2
                    + 25.0 * b * b * q0 * l0 * q2
                    - 20.0 * a * b * q1 * q2
                    - 5.0 * a * a * q0 * q0 * l2
                    + 5.0 * b * b * q0 * q0 * l2
                    - 10.0 * a * b * q0 * q3)
                    / la
                    + (10.0 * a.powi(4) * q0.powi(4) * l0 - 30.0 * a * a * b * b * q0.powi(4) * l0
                        + 40.0 * a.powi(3) * b * q0.powi(3) * q1)
                        / la.powi(3),
            )
        }
    };
    Ok(SliceJetMatrix { n, c11, c21 })
}

/// Jets of the slice curve `u -> x(u) (cos, sin)(z(u)/lambda)`, the
/// differentiation oracle for [`slice_jet_closed_form`].
pub fn slice_curve_jets(
    h: &HelicoidalSurface,
    u0: f64,
    order: usize,
) -> Result<(Jet, Jet), SingularityError> {
    let cj = h.profile().jets(u0, order)?;
    let (s, c) = cj.z.scale(1.0 / h.lambda()).sin_cos();
    Ok((cj.x.mul(&c), cj.x.mul(&s)))
}

/// Residual of the rotation-form determinant identity: for matrices
/// `X = [[x11, -x21], [x21, x11]]` and likewise `Y`, the determinant of
/// `(X v, Y v)` equals `|v|^2 det [[x11, y11], [x21, y21]]`.
pub fn det_identity_check(x11: f64, x21: f64, y11: f64, y21: f64, v: [f64; 2]) -> f64 {
    let xv = [x11 * v[0] - x21 * v[1], x21 * v[0] + x11 * v[1]];
    let yv = [y11 * v[0] - y21 * v[1], y21 * v[0] + y11 * v[1]];
    det2v(xv, yv) - (v[0] * v[0] + v[1] * v[1]) * det2(x11, y11, x21, y21)
}

/// Which degeneracies hold at a singular parameter on the screw axis: the
/// profile speed factor `beta`, the vertical normal component `b`, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularCase {
    /// `beta = 0`, `b != 0`.
    BetaZero,
    /// `beta != 0`, `b = 0`.
    BZero,
    /// `beta = 0` and `b = 0`.
    BetaAndBZero,
}

impl SingularCase {
    /// 1-based index of the case in reports.
    pub fn index(self) -> u8 {
        match self {
            SingularCase::BetaZero => 1,
            SingularCase::BZero => 2,
            SingularCase::BetaAndBZero => 3,
        }
    }
}

/// Edge type of a helicoidal surface point.
#[derive(Debug, Clone, PartialEq)]
pub enum EdgeTag {
    RegularSurfacePoint,
    /// Singular with nonzero radius; carries the plane cusp type of the
    /// profile curve, which the edge traces.
    GammaEdge(CuspClass),
    CuspidalEdge32,
    CuspidalEdge52,
    CuspidalEdge43,
    CuspidalEdge53,
    Degenerate,
}

impl EdgeTag {
    pub fn label(&self) -> String {
        match self {
            EdgeTag::RegularSurfacePoint => "RegularSurfacePoint".into(),
            EdgeTag::GammaEdge(c) => format!("GammaEdge({})", c.tag.label()),
            EdgeTag::CuspidalEdge32 => "CuspidalEdge_3_2".into(),
            EdgeTag::CuspidalEdge52 => "CuspidalEdge_5_2".into(),
            EdgeTag::CuspidalEdge43 => "CuspidalEdge_4_3".into(),
            EdgeTag::CuspidalEdge53 => "CuspidalEdge_5_3".into(),
            EdgeTag::Degenerate => "Degenerate".into(),
        }
    }
}

/// Profile numbers at the classified parameter plus the raw slice curve
/// determinants the decision hinges on. Keyed determinants: on-axis points
/// carry `det_c2_c3`, `det_c3_c4`, `det_c3_c5` and, when case 1 admits it,
/// `det_5_2_test`; off-axis singular points carry the profile determinant
/// `det_gamma_2_3`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeWitnesses {
    pub beta: f64,
    pub beta_dot: f64,
    pub ell: f64,
    pub ell_dot: f64,
    pub x: f64,
    pub b: f64,
    pub determinants: BTreeMap<String, f64>,
}

/// Edge classification with the numbers that decided it.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeClass {
    pub tag: EdgeTag,
    /// Axis trichotomy case; absent for regular and off-axis points and
    /// when the deciders land inside the marginal band.
    pub case: Option<SingularCase>,
    /// A deciding witness fell between the zero and nonzero thresholds.
    pub marginal: bool,
    pub witnesses: EdgeWitnesses,
}

/// Classify the edge type of the surface at profile parameter `u0`.
///
/// Points with normal length above [`EPS_ZERO`] are regular. Singular
/// points off the screw axis inherit the plane cusp type of the profile.
/// On the axis the case trichotomy on `(beta, b)` applies: case 1 admits
/// only a 5/2 edge (decided by `beta_dot * ell`), case 2 a 3/2 edge
/// (`ell`) or a 4/3 edge (`ell = 0`, `ell_dot`), case 3 only a 5/3 edge
/// (`beta_dot * ell`); everything else is degenerate.
pub fn classify_helicoid_singularity(
    h: &HelicoidalSurface,
    u0: f64,
) -> Result<EdgeClass, SingularityError> {
    let cj = h.profile().jets(u0, MAX_ORDER)?;
    let (ell, beta) = cj.ell_beta();
    let a = cj.a.value();
    let mut w = EdgeWitnesses {
        beta: beta.value(),
        beta_dot: beta.derivative(1),
        ell: ell.value(),
        ell_dot: ell.derivative(1),
        x: cj.x.value(),
        b: cj.b.value(),
        determinants: BTreeMap::new(),
    };

    let nu_norm = h.normal_norm2_jet(u0, 0)?.value().max(0.0).sqrt();
    if nu_norm > EPS_ZERO {
        return Ok(EdgeClass {
            tag: EdgeTag::RegularSurfacePoint,
            case: None,
            marginal: false,
            witnesses: w,
        });
    }

    if w.x.abs() > EPS_ZERO {
        let cusp = classify_plane_cusp(&cj.x, &cj.z)?;
        let g2 = [cj.x.derivative(2), cj.z.derivative(2)];
        let g3 = [cj.x.derivative(3), cj.z.derivative(3)];
        w.determinants.insert("det_gamma_2_3".into(), det2v(g2, g3));
        let marginal = cusp.marginal;
        return Ok(EdgeClass {
            tag: EdgeTag::GammaEdge(cusp),
            case: None,
            marginal,
            witnesses: w,
        });
    }

    // on the axis; the order-five matrix is available because x(u0) = 0.
    // the determinant of two slice derivatives equals the determinant of
    // their matrix first columns since cos^2 + sin^2 = 1
    let m2 = slice_jet_closed_form(h, u0, 2)?;
    let m3 = slice_jet_closed_form(h, u0, 3)?;
    let m4 = slice_jet_closed_form(h, u0, 4)?;
    let m5 = slice_jet_closed_form(h, u0, 5)?;
    w.determinants
        .insert("det_c2_c3".into(), det2(m2.c11, m3.c11, m2.c21, m3.c21));
    w.determinants
        .insert("det_c3_c4".into(), det2(m3.c11, m4.c11, m3.c21, m4.c21));
    w.determinants
        .insert("det_c3_c5".into(), det2(m3.c11, m5.c11, m3.c21, m5.c21));

    let (case, tag, marginal) = match (zeroness(w.beta), zeroness(w.b)) {
        (Zeroness::Vanishes, Zeroness::Clear) => {
            let case = SingularCase::BetaZero;
            if (w.b * w.beta_dot).abs() > EPS_ZERO {
                // probe vector for the 5/2 test, with the proportionality
                // factor of the third slice derivative over the second
                let k = (2.0 * a * w.ell * w.beta_dot + w.b * beta.derivative(2))
                    / (w.b * w.beta_dot);
                let p = [
                    3.0 * m5.c11 - 10.0 * k * m4.c11,
                    3.0 * m5.c21 - 10.0 * k * m4.c21,
                ];
                w.determinants
                    .insert("det_5_2_test".into(), det2(m2.c11, p[0], m2.c21, p[1]));
            }
            match zeroness(w.beta_dot * w.ell) {
                Zeroness::Clear => (Some(case), EdgeTag::CuspidalEdge52, false),
                Zeroness::Marginal => (Some(case), EdgeTag::Degenerate, true),
                Zeroness::Vanishes => (Some(case), EdgeTag::Degenerate, false),
            }
        }
        (Zeroness::Clear, Zeroness::Vanishes) => {
            let case = SingularCase::BZero;
            match zeroness(w.ell) {
                Zeroness::Clear => (Some(case), EdgeTag::CuspidalEdge32, false),
                Zeroness::Marginal => (Some(case), EdgeTag::Degenerate, true),
                Zeroness::Vanishes => match zeroness(w.ell_dot) {
                    Zeroness::Clear => (Some(case), EdgeTag::CuspidalEdge43, false),
                    Zeroness::Marginal => (Some(case), EdgeTag::Degenerate, true),
                    Zeroness::Vanishes => (Some(case), EdgeTag::Degenerate, false),
                },
            }
        }
        (Zeroness::Vanishes, Zeroness::Vanishes) => {
            let case = SingularCase::BetaAndBZero;
            match zeroness(w.beta_dot * w.ell) {
                Zeroness::Clear => (Some(case), EdgeTag::CuspidalEdge53, false),
                Zeroness::Marginal => (Some(case), EdgeTag::Degenerate, true),
                Zeroness::Vanishes => (Some(case), EdgeTag::Degenerate, false),
            }
        }
        // a marginal decider leaves the trichotomy itself undecided
        _ => (None, EdgeTag::Degenerate, true),
    };
    Ok(EdgeClass {
        tag,
        case,
        marginal,
        witnesses: w,
    })
}

/// A classified zero of the normal degeneracy indicator.
#[derive(Debug, Clone)]
pub struct SingularPoint {
    pub u_star: f64,
    pub class: EdgeClass,
}

/// Locate and classify every singular parameter in `interval`.
///
/// The scan grid is never coarser than 64 cells. Parameters where the
/// indicator cannot be evaluated count as regular.
pub fn singular_locus_scan(
    h: &HelicoidalSurface,
    interval: [f64; 2],
    n_grid: usize,
) -> Result<Vec<SingularPoint>, SingularityError> {
    let n = n_grid.max(64);
    let eval = |u: f64| -> (f64, f64) {
        match h.normal_norm2_jet(u, 1) {
            Ok(j) => (j.value(), j.derivative(1)),
            Err(_) => (f64::MAX, 0.0),
        }
    };
    let step = (interval[1] - interval[0]) / n as f64;
    let zeros = crate::roots::scan_indicator_zeros(
        &eval,
        interval[0],
        interval[1],
        n,
        EPS_ZERO * EPS_ZERO,
        0.5 * step,
    );
    zeros
        .into_iter()
        .map(|u_star| {
            classify_helicoid_singularity(h, u_star).map(|class| SingularPoint { u_star, class })
        })
        .collect()
}
