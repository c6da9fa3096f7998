//! C ABI over the core library: opaque surface handles, integer status
//! codes and flat result structs, plus a JSON bridge for the full
//! classification report. The companion header is generated into
//! `include/helifront.h` at build time.
//!
//! Ownership: `hf_surface_new_*` hand out heap handles released by
//! [`hf_surface_free`]; strings written by [`hf_surface_classify_json`] are
//! released by [`hf_string_free`]. Every function tolerates null pointers
//! and reports a status instead of crashing, and nothing unwinds across the
//! ABI boundary.

// range checks are written `!(lo < hi)` so NaN bounds are rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use helifront::builtin;
use helifront::cli;
use helifront::export::PointReport;
use helifront::helicoid::{FrameSelection, HelicoidError, HelicoidalSurface};
use helifront::linalg::cross3;
use helifront::singularity::{
    classify_helicoid_singularity, singular_locus_scan, CuspTag, EdgeClass, EdgeTag,
    SingularPoint, SingularityError,
};

/// Result code of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    NullArgument = 1,
    Utf8Error = 2,
    ParseError = 3,
    InvalidArgument = 4,
    /// No smooth unit frame exists along the requested profile.
    NoSmoothSelection = 5,
    NumericalError = 6,
    BufferTooSmall = 7,
}

/// Opaque helicoidal surface handle.
pub struct HfSurface {
    inner: HelicoidalSurface,
}

/// Framed curvature triple at one profile parameter.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HfCurvature {
    pub jf: f64,
    pub kf: f64,
    pub hf: f64,
}

/// Edge type of a surface point, mirroring the core classifier tags.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfEdgeTag {
    RegularSurfacePoint = 0,
    /// Singular with nonzero radius; `gamma_cusp` carries the profile type.
    GammaEdge = 1,
    CuspidalEdge32 = 2,
    CuspidalEdge52 = 3,
    CuspidalEdge43 = 4,
    CuspidalEdge53 = 5,
    Degenerate = 6,
}

/// Plane cusp type of the profile curve behind a `GammaEdge`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfCuspTag {
    NotApplicable = 0,
    RegularPoint = 1,
    Cusp32 = 2,
    Cusp52 = 3,
    Cusp43 = 4,
    Cusp53 = 5,
    Degenerate = 6,
}

/// Classification outcome with the scalar witnesses that decided it. The
/// named determinants of the full report are available through
/// [`hf_surface_classify_json`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct HfClassification {
    pub tag: HfEdgeTag,
    /// Profile cusp type when `tag` is `GammaEdge`, otherwise
    /// `NotApplicable`.
    pub gamma_cusp: HfCuspTag,
    /// Axis trichotomy case 1, 2 or 3; zero when no case applies.
    pub case_index: u8,
    /// Nonzero when a deciding witness fell inside the marginal band.
    pub marginal: u8,
    pub beta: f64,
    pub beta_dot: f64,
    pub ell: f64,
    pub ell_dot: f64,
    pub x: f64,
    pub b: f64,
}

fn cusp_tag(tag: CuspTag) -> HfCuspTag {
    match tag {
        CuspTag::RegularPoint => HfCuspTag::RegularPoint,
        CuspTag::Cusp32 => HfCuspTag::Cusp32,
        CuspTag::Cusp52 => HfCuspTag::Cusp52,
        CuspTag::Cusp43 => HfCuspTag::Cusp43,
        CuspTag::Cusp53 => HfCuspTag::Cusp53,
        CuspTag::Degenerate => HfCuspTag::Degenerate,
    }
}

impl HfClassification {
    fn from_class(class: &EdgeClass) -> HfClassification {
        let (tag, gamma_cusp) = match &class.tag {
            EdgeTag::RegularSurfacePoint => {
                (HfEdgeTag::RegularSurfacePoint, HfCuspTag::NotApplicable)
            }
            EdgeTag::GammaEdge(c) => (HfEdgeTag::GammaEdge, cusp_tag(c.tag)),
            EdgeTag::CuspidalEdge32 => (HfEdgeTag::CuspidalEdge32, HfCuspTag::NotApplicable),
            EdgeTag::CuspidalEdge52 => (HfEdgeTag::CuspidalEdge52, HfCuspTag::NotApplicable),
            EdgeTag::CuspidalEdge43 => (HfEdgeTag::CuspidalEdge43, HfCuspTag::NotApplicable),
            EdgeTag::CuspidalEdge53 => (HfEdgeTag::CuspidalEdge53, HfCuspTag::NotApplicable),
            EdgeTag::Degenerate => (HfEdgeTag::Degenerate, HfCuspTag::NotApplicable),
        };
        let w = &class.witnesses;
        HfClassification {
            tag,
            gamma_cusp,
            case_index: class.case.map_or(0, |c| c.index()),
            marginal: u8::from(class.marginal),
            beta: w.beta,
            beta_dot: w.beta_dot,
            ell: w.ell,
            ell_dot: w.ell_dot,
            x: w.x,
            b: w.b,
        }
    }
}

fn surface_status(e: &HelicoidError) -> HfStatus {
    match e {
        HelicoidError::NoSmoothSelection { .. } => HfStatus::NoSmoothSelection,
        HelicoidError::Profile(_)
        | HelicoidError::ZeroPitch
        | HelicoidError::InvalidFrameSelection { .. } => HfStatus::InvalidArgument,
        HelicoidError::Jet(_) | HelicoidError::PolarDataUndefined { .. } => {
            HfStatus::NumericalError
        }
    }
}

fn singularity_status(e: &SingularityError) -> HfStatus {
    match e {
        SingularityError::Surface(inner) => surface_status(inner),
        _ => HfStatus::InvalidArgument,
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, HfStatus> {
    if p.is_null() {
        return Err(HfStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| HfStatus::Utf8Error)
}

unsafe fn publish(out: *mut *mut HfSurface, surface: HelicoidalSurface) -> HfStatus {
    out.write(Box::into_raw(Box::new(HfSurface { inner: surface })));
    HfStatus::Ok
}

/// Create a surface from a named builtin profile.
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
/// On success `*out` owns the handle; on failure `*out` is null.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_new_builtin(
    name: *const c_char,
    lambda: f64,
    out: *mut *mut HfSurface,
) -> HfStatus {
    if out.is_null() {
        return HfStatus::NullArgument;
    }
    out.write(ptr::null_mut());
    let name = match read_str(name) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let Some(profile) = builtin::profile(name) else {
        return HfStatus::InvalidArgument;
    };
    match HelicoidalSurface::new(profile, lambda) {
        Ok(h) => publish(out, h),
        Err(e) => surface_status(&e),
    }
}

/// Create a surface from the JSON curve-spec format the CLI accepts.
///
/// # Safety
/// `spec_json` must be a valid NUL-terminated string and `out` a valid
/// pointer. On success `*out` owns the handle; on failure `*out` is null.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_new_json(
    spec_json: *const c_char,
    lambda: f64,
    out: *mut *mut HfSurface,
) -> HfStatus {
    if out.is_null() {
        return HfStatus::NullArgument;
    }
    out.write(ptr::null_mut());
    let text = match read_str(spec_json) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let Ok(profile) = cli::curve_from_json(text, None) else {
        return HfStatus::ParseError;
    };
    match HelicoidalSurface::new(profile, lambda) {
        Ok(h) => publish(out, h),
        Err(e) => surface_status(&e),
    }
}

/// Release a surface handle. Null is a no-op.
///
/// # Safety
/// `surface` must be a handle from `hf_surface_new_*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_free(surface: *mut HfSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// Evaluate the surface point at `(u, v)` into `out_xyz[0..3]`.
///
/// # Safety
/// `surface` must be a live handle and `out_xyz` must point at three
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_point(
    surface: *const HfSurface,
    u: f64,
    v: f64,
    out_xyz: *mut f64,
) -> HfStatus {
    if surface.is_null() || out_xyz.is_null() {
        return HfStatus::NullArgument;
    }
    match (*surface).inner.point(u, v) {
        Ok(p) => {
            for (i, c) in p.into_iter().enumerate() {
                out_xyz.add(i).write(c);
            }
            HfStatus::Ok
        }
        Err(e) => surface_status(&e),
    }
}

/// Evaluate the (unnormalized) surface normal at `(u, v)` into
/// `out_xyz[0..3]`. The vector vanishes exactly at singular points.
///
/// # Safety
/// `surface` must be a live handle and `out_xyz` must point at three
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_normal(
    surface: *const HfSurface,
    u: f64,
    v: f64,
    out_xyz: *mut f64,
) -> HfStatus {
    if surface.is_null() || out_xyz.is_null() {
        return HfStatus::NullArgument;
    }
    match (*surface).inner.surface_partials(u, v) {
        Ok(sp) => {
            for (i, c) in cross3(sp.ru, sp.rv).into_iter().enumerate() {
                out_xyz.add(i).write(c);
            }
            HfStatus::Ok
        }
        Err(e) => surface_status(&e),
    }
}

/// Framed curvature triple `(JF, KF, HF)` at profile parameter `u` under
/// the default frame selection.
///
/// # Safety
/// `surface` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_curvature(
    surface: *const HfSurface,
    u: f64,
    out: *mut HfCurvature,
) -> HfStatus {
    if surface.is_null() || out.is_null() {
        return HfStatus::NullArgument;
    }
    match (*surface).inner.curvature(&FrameSelection::Default, u) {
        Ok(c) => {
            out.write(HfCurvature {
                jf: c.jf,
                kf: c.kf,
                hf: c.hf,
            });
            HfStatus::Ok
        }
        Err(e) => surface_status(&e),
    }
}

/// Classify the surface point over profile parameter `u`.
///
/// # Safety
/// `surface` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_classify(
    surface: *const HfSurface,
    u: f64,
    out: *mut HfClassification,
) -> HfStatus {
    if surface.is_null() || out.is_null() {
        return HfStatus::NullArgument;
    }
    match classify_helicoid_singularity(&(*surface).inner, u) {
        Ok(class) => {
            out.write(HfClassification::from_class(&class));
            HfStatus::Ok
        }
        Err(e) => singularity_status(&e),
    }
}

/// Locate singular parameters in `[u_lo, u_hi]`. Writes up to `capacity`
/// values through `out_u` and the total count through `out_len`; returns
/// `BufferTooSmall` when the buffer cannot hold every hit.
///
/// # Safety
/// `surface` must be a live handle, `out_len` a valid pointer, and `out_u`
/// must point at `capacity` writable doubles whenever `capacity > 0`.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_scan(
    surface: *const HfSurface,
    u_lo: f64,
    u_hi: f64,
    n_grid: usize,
    out_u: *mut f64,
    capacity: usize,
    out_len: *mut usize,
) -> HfStatus {
    if surface.is_null() || out_len.is_null() {
        return HfStatus::NullArgument;
    }
    out_len.write(0);
    if !(u_lo < u_hi) {
        return HfStatus::InvalidArgument;
    }
    match singular_locus_scan(&(*surface).inner, [u_lo, u_hi], n_grid) {
        Ok(points) => {
            out_len.write(points.len());
            let n_write = points.len().min(capacity);
            if n_write > 0 {
                if out_u.is_null() {
                    return HfStatus::NullArgument;
                }
                for (i, p) in points.iter().take(n_write).enumerate() {
                    out_u.add(i).write(p.u_star);
                }
            }
            if points.len() > capacity {
                HfStatus::BufferTooSmall
            } else {
                HfStatus::Ok
            }
        }
        Err(e) => singularity_status(&e),
    }
}

/// Classify at `u` and return the full report, including the named
/// determinants, as a JSON string.
///
/// # Safety
/// `surface` must be a live handle and `out_json` a valid pointer. On
/// success `*out_json` owns a string released by [`hf_string_free`]; on
/// failure `*out_json` is null.
#[no_mangle]
pub unsafe extern "C" fn hf_surface_classify_json(
    surface: *const HfSurface,
    u: f64,
    out_json: *mut *mut c_char,
) -> HfStatus {
    if surface.is_null() || out_json.is_null() {
        return HfStatus::NullArgument;
    }
    out_json.write(ptr::null_mut());
    match classify_helicoid_singularity(&(*surface).inner, u) {
        Ok(class) => {
            let report = PointReport::from_point(&SingularPoint { u_star: u, class });
            let Ok(text) = serde_json::to_string_pretty(&report) else {
                return HfStatus::NumericalError;
            };
            match CString::new(text) {
                Ok(c) => {
                    out_json.write(c.into_raw());
                    HfStatus::Ok
                }
                Err(_) => HfStatus::NumericalError,
            }
        }
        Err(e) => singularity_status(&e),
    }
}

/// Release a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not yet be freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
