//! Plain-text emitters: OBJ meshes, CSV tables and JSON classification
//! reports. All output is built deterministically from its inputs so that
//! identical runs produce identical bytes.

use serde::Serialize;

use crate::legendre::SampledLegendreCurve;
use crate::singularity::{CuspWitnesses, EdgeClass, EdgeTag, EdgeWitnesses, SingularPoint};

/// ASCII OBJ mesh over a row-major `nu` x `nv` vertex grid (u index outer),
/// two triangles per quad with 1-based indices. Degenerate triangles along
/// singular rows are kept so the face count stays `2 (nu-1) (nv-1)`.
pub fn obj_mesh(vertices: &[[f64; 3]], nu: usize, nv: usize) -> String {
    assert_eq!(vertices.len(), nu * nv, "vertex grid shape");
    let mut out = String::new();
    for p in vertices {
        out.push_str(&format!("v {:.9} {:.9} {:.9}\n", p[0], p[1], p[2]));
    }
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            let v00 = i * nv + j + 1;
            let v01 = v00 + 1;
            let v10 = v00 + nv;
            let v11 = v10 + 1;
            out.push_str(&format!("f {v00} {v10} {v11}\n"));
            out.push_str(&format!("f {v00} {v11} {v01}\n"));
        }
    }
    out
}

/// One invariants-table row: framed invariants in the moving frame, framed
/// curvature, and the six integrability residuals at a grid point.
#[derive(Debug, Clone, Copy)]
pub struct InvariantRow {
    pub u: f64,
    pub v: f64,
    pub a1: f64,
    pub b1: f64,
    pub e1: f64,
    pub f1: f64,
    pub g1: f64,
    pub a2: f64,
    pub b2: f64,
    pub e2: f64,
    pub f2: f64,
    pub g2: f64,
    pub jf: f64,
    pub kf: f64,
    pub hf: f64,
    pub residuals: [f64; 6],
}

pub fn invariants_csv(rows: &[InvariantRow]) -> String {
    let mut out = String::from(
        "u,v,a1,b1,e1,f1,g1,a2,b2,e2,f2,g2,JF,KF,HF,\
         residual1,residual2,residual3,residual4,residual5,residual6\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.u,
            r.v,
            r.a1,
            r.b1,
            r.e1,
            r.f1,
            r.g1,
            r.a2,
            r.b2,
            r.e2,
            r.f2,
            r.g2,
            r.jf,
            r.kf,
            r.hf,
            r.residuals[0],
            r.residuals[1],
            r.residuals[2],
            r.residuals[3],
            r.residuals[4],
            r.residuals[5],
        ));
    }
    out
}

/// A sample of the two horizontal slice curves at one parameter.
#[derive(Debug, Clone, Copy)]
pub struct SliceRow {
    pub u: f64,
    /// Slice with the mirrored second component.
    pub s: [f64; 2],
    /// Plain slice.
    pub c: [f64; 2],
}

pub fn slice_csv(rows: &[SliceRow]) -> String {
    let mut out = String::from("u,sx,sy,cx,cy\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.u, r.s[0], r.s[1], r.c[0], r.c[1]
        ));
    }
    out
}

/// CSV of a reconstructed curve: parameter, point and unit normal.
pub fn curve_csv(sample: &SampledLegendreCurve) -> String {
    let mut out = String::from("u,x,z,a,b\n");
    for ((u, g), n) in sample.us.iter().zip(&sample.gamma).zip(&sample.nu) {
        out.push_str(&format!("{},{},{},{},{}\n", u, g[0], g[1], n[0], n[1]));
    }
    out
}

/// Plane cusp part of a report, carried by off-axis singular points.
#[derive(Debug, Clone, Serialize)]
pub struct GammaCuspReport {
    pub tag: String,
    pub marginal: bool,
    pub witnesses: CuspWitnesses,
}

/// One classified singular parameter.
#[derive(Debug, Clone, Serialize)]
pub struct PointReport {
    pub u_star: f64,
    /// Axis trichotomy case 1..3 when defined.
    pub case: Option<u8>,
    pub tag: String,
    pub marginal: bool,
    pub witnesses: EdgeWitnesses,
    pub gamma_cusp: Option<GammaCuspReport>,
}

impl PointReport {
    pub fn from_point(p: &SingularPoint) -> PointReport {
        let class: &EdgeClass = &p.class;
        let gamma_cusp = match &class.tag {
            EdgeTag::GammaEdge(c) => Some(GammaCuspReport {
                tag: c.tag.label().to_string(),
                marginal: c.marginal,
                witnesses: c.witnesses,
            }),
            _ => None,
        };
        PointReport {
            u_star: p.u_star,
            case: class.case.map(|c| c.index()),
            tag: class.tag.label(),
            marginal: class.marginal,
            witnesses: class.witnesses.clone(),
            gamma_cusp,
        }
    }
}

/// Full classification report for a scanned interval.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub lambda: f64,
    pub u_range: [f64; 2],
    pub n_grid: usize,
    pub points: Vec<PointReport>,
}

pub fn classification_json(report: &ClassificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization");
    s.push('\n');
    s
}
