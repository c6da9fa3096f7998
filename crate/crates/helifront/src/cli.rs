//! Command line front end: load a profile curve (built-in or a JSON spec),
//! then scan and classify singularities, emit meshes, invariant tables,
//! slice polylines, or reconstruct a curve from curvature data.
//!
//! Exit codes: 0 on success (an empty singular list is a success), 1 for a
//! malformed spec or any other failure, 2 when a frame-requiring output hits
//! a parameter without a smooth frame selection.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use thiserror::Error;

use crate::builtin;
use crate::export::{
    self, ClassificationReport, InvariantRow, PointReport, SliceRow,
};
use crate::expr::Expr;
use crate::framed::integrability_residual;
use crate::helicoid::{FrameSelection, HelicoidError, HelicoidalSurface, SliceVariant};
use crate::legendre::{reconstruct_curve, LegendreCurve, ReconstructionInit};
use crate::singularity::{singular_locus_scan, SingularityError};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed run spec, unreadable input, or a numeric failure. Exit 1.
    #[error("{0}")]
    Spec(String),
    /// No smooth frame selection at a parameter a requested output needs.
    /// Exit 2.
    #[error("{0}")]
    NoSmoothSelection(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Spec(_) => 1,
            CliError::NoSmoothSelection(_) => 2,
        }
    }
}

impl From<HelicoidError> for CliError {
    fn from(e: HelicoidError) -> Self {
        match e {
            HelicoidError::NoSmoothSelection { .. } => CliError::NoSmoothSelection(e.to_string()),
            other => CliError::Spec(other.to_string()),
        }
    }
}

impl From<SingularityError> for CliError {
    fn from(e: SingularityError) -> Self {
        match e {
            SingularityError::Surface(inner) => inner.into(),
            other => CliError::Spec(other.to_string()),
        }
    }
}

fn spec_err(e: impl std::fmt::Display) -> CliError {
    CliError::Spec(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "helifront",
    version,
    about = "Helicoidal surfaces swept from profile frontals: edge classification, \
             meshes, invariants, slices and curvature reconstruction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan a parameter interval and classify every singular point
    Classify(ClassifyArgs),
    /// Emit an ASCII OBJ mesh over the parameter grid
    Mesh(MeshArgs),
    /// Emit a CSV of framed invariants, curvature and integrability residuals
    Invariants(InvariantsArgs),
    /// Emit a CSV polyline of the two horizontal slice curves
    Slice(SliceArgs),
    /// Integrate a curvature pair into a curve and emit CSV samples
    Reconstruct(ReconstructArgs),
}

/// Profile source and pitch, shared by all surface subcommands.
#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Built-in profile (a2, a4, e6, e8, circle, vline; example1..example4
    /// alias the first four)
    #[arg(long, conflicts_with = "input")]
    pub builtin: Option<String>,
    /// Curve-spec JSON file with {"kind": "explicit", ...} or
    /// {"kind": "curvature", ...}
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Screw pitch (nonzero)
    #[arg(long, default_value_t = builtin::DEFAULT_LAMBDA, allow_negative_numbers = true)]
    pub lambda: f64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Scan interval LO:HI (default: the profile domain)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub u: Option<[f64; 2]>,
    /// Scan grid cells
    #[arg(long, default_value_t = 256)]
    pub grid: usize,
    /// Write the JSON report here (stdout gets a one-line summary per point)
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeshArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Profile interval LO:HI (default: the profile domain)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub u: Option<[f64; 2]>,
    /// Screw angle interval LO:HI
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "0:6.283185307179586")]
    pub v: [f64; 2],
    /// Vertex grid NUxNV, both at least 2
    #[arg(long, value_parser = parse_grid, default_value = "64x64")]
    pub grid: (usize, usize),
    /// Output path (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Profile interval LO:HI (default: the profile domain)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub u: Option<[f64; 2]>,
    /// Screw angle interval LO:HI
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true, default_value = "0:6.283185307179586")]
    pub v: [f64; 2],
    /// Sample grid NUxNV, both at least 2
    #[arg(long, value_parser = parse_grid, default_value = "64x64")]
    pub grid: (usize, usize),
    /// First component of a user frame selection (with --k2)
    #[arg(long, requires = "k2")]
    pub k1: Option<String>,
    /// Second component of a user frame selection (with --k1)
    #[arg(long, requires = "k1")]
    pub k2: Option<String>,
    /// Output path (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SliceArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Profile interval LO:HI (default: the profile domain)
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub u: Option<[f64; 2]>,
    /// Number of polyline segments
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
    /// Output path (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// Curvature expression ell(u)
    #[arg(long, allow_hyphen_values = true)]
    pub ell: String,
    /// Speed expression beta(u)
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// Integration interval LO:HI
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub u: [f64; 2],
    /// Integration steps
    #[arg(long, default_value_t = 4096)]
    pub steps: usize,
    /// Anchor parameter
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub u0: f64,
    /// Anchor point x component
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x0: f64,
    /// Anchor point z component
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z0: f64,
    /// Normal angle at the anchor
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub angle0: f64,
    /// Output path (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<[f64; 2], String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got '{s}'"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad number '{lo}'"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad number '{hi}'"))?;
    if !(lo < hi) {
        return Err(format!("empty interval {lo}:{hi}"));
    }
    Ok([lo, hi])
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (nu, nv) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected NUxNV, got '{s}'"))?;
    let nu: usize = nu.trim().parse().map_err(|_| format!("bad count '{nu}'"))?;
    let nv: usize = nv.trim().parse().map_err(|_| format!("bad count '{nv}'"))?;
    if nu < 2 || nv < 2 {
        return Err(format!("grid must be at least 2x2, got {nu}x{nv}"));
    }
    Ok((nu, nv))
}

/// Curve-spec file contents.
#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum CurveSpec {
    Explicit {
        x: String,
        z: String,
        a: String,
        b: String,
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
    Curvature {
        ell: String,
        beta: String,
        #[serde(default)]
        init: Option<InitSpec>,
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct InitSpec {
    #[serde(default)]
    u0: f64,
    #[serde(default)]
    gamma0: [f64; 2],
    #[serde(default)]
    angle0: f64,
}

fn parse_expr(src: &str, what: &str) -> Result<Expr, CliError> {
    Expr::parse(src).map_err(|e| CliError::Spec(format!("{what}: {e}")))
}

/// Parse the JSON curve-spec format shared by `--input` files and embedding
/// APIs. `u_hint` supplies the domain when the spec omits it.
pub fn curve_from_json(text: &str, u_hint: Option<[f64; 2]>) -> Result<LegendreCurve, CliError> {
    let spec: CurveSpec = serde_json::from_str(text).map_err(spec_err)?;
    let fallback = u_hint.unwrap_or([-1.0, 1.0]);
    Ok(match spec {
        CurveSpec::Explicit { x, z, a, b, domain } => LegendreCurve::Explicit {
            x: parse_expr(&x, "x")?,
            z: parse_expr(&z, "z")?,
            a: parse_expr(&a, "a")?,
            b: parse_expr(&b, "b")?,
            domain: domain.unwrap_or(fallback),
        },
        CurveSpec::Curvature {
            ell,
            beta,
            init,
            domain,
        } => {
            let init = init.unwrap_or_default();
            LegendreCurve::FromCurvature {
                ell: parse_expr(&ell, "ell")?,
                beta: parse_expr(&beta, "beta")?,
                init: ReconstructionInit {
                    u0: init.u0,
                    gamma0: init.gamma0,
                    angle0: init.angle0,
                },
                domain: domain.unwrap_or(fallback),
            }
        }
    })
}

fn load_profile(args: &ProfileArgs, u_hint: Option<[f64; 2]>) -> Result<LegendreCurve, CliError> {
    match (&args.builtin, &args.input) {
        (Some(name), None) => builtin::profile(name)
            .ok_or_else(|| CliError::Spec(format!("unknown builtin profile '{name}'"))),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Spec(format!("{}: {e}", path.display())))?;
            curve_from_json(&text, u_hint)
                .map_err(|e| CliError::Spec(format!("{}: {e}", path.display())))
        }
        _ => Err(CliError::Spec(
            "exactly one of --builtin or --input is required".into(),
        )),
    }
}

fn make_surface(args: &ProfileArgs, u_hint: Option<[f64; 2]>) -> Result<HelicoidalSurface, CliError> {
    let profile = load_profile(args, u_hint)?;
    Ok(HelicoidalSurface::new(profile, args.lambda)?)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Spec(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn sample_interval(range: [f64; 2], n: usize) -> impl Iterator<Item = f64> {
    let [lo, hi] = range;
    let step = (hi - lo) / (n - 1).max(1) as f64;
    (0..n).map(move |i| if i == n - 1 { hi } else { lo + step * i as f64 })
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Mesh(args) => run_mesh(args),
        Command::Invariants(args) => run_invariants(args),
        Command::Slice(args) => run_slice(args),
        Command::Reconstruct(args) => run_reconstruct(args),
    }
}

fn run_classify(args: &ClassifyArgs) -> Result<(), CliError> {
    let h = make_surface(&args.profile, args.u)?;
    let u_range = args.u.unwrap_or_else(|| h.profile().domain());
    let points = singular_locus_scan(&h, u_range, args.grid)?;
    if points.is_empty() {
        println!(
            "no singular points in [{}, {}]",
            u_range[0], u_range[1]
        );
    }
    for p in &points {
        let case = p
            .class
            .case
            .map(|c| format!(" (case {})", c.index()))
            .unwrap_or_default();
        let marginal = if p.class.marginal { " [marginal]" } else { "" };
        println!(
            "{} at u* = {:.9}{case}{marginal}",
            p.class.tag.label(),
            p.u_star
        );
    }
    if let Some(path) = &args.report {
        let report = ClassificationReport {
            lambda: args.profile.lambda,
            u_range,
            n_grid: args.grid,
            points: points.iter().map(PointReport::from_point).collect(),
        };
        emit(&Some(path.clone()), &export::classification_json(&report))?;
    }
    Ok(())
}

fn run_mesh(args: &MeshArgs) -> Result<(), CliError> {
    let h = make_surface(&args.profile, args.u)?;
    let u_range = args.u.unwrap_or_else(|| h.profile().domain());
    let (nu, nv) = args.grid;
    let mut vertices = Vec::with_capacity(nu * nv);
    for u in sample_interval(u_range, nu) {
        for v in sample_interval(args.v, nv) {
            vertices.push(h.point(u, v)?);
        }
    }
    emit(&args.out, &export::obj_mesh(&vertices, nu, nv))
}

fn run_invariants(args: &InvariantsArgs) -> Result<(), CliError> {
    let h = make_surface(&args.profile, args.u)?;
    let u_range = args.u.unwrap_or_else(|| h.profile().domain());
    let sel = match (&args.k1, &args.k2) {
        (Some(k1), Some(k2)) => FrameSelection::User {
            k1: parse_expr(k1, "k1")?,
            k2: parse_expr(k2, "k2")?,
        },
        _ => FrameSelection::Default,
    };
    let (nu, nv) = args.grid;
    let mut rows = Vec::with_capacity(nu * nv);
    for u in sample_interval(u_range, nu) {
        let inv = h.framed_invariants(&sel, u)?;
        let jets = h.framed_invariant_jets(&sel, u)?;
        let res = integrability_residual(&jets);
        let cf = h.curvature(&sel, u)?;
        let residuals = [res[0], res[1], res[2], res[3], res[4], res[5]];
        for v in sample_interval(args.v, nv) {
            rows.push(InvariantRow {
                u,
                v,
                a1: inv.g[0][0],
                b1: inv.g[0][1],
                e1: inv.f1[0],
                f1: inv.f1[1],
                g1: inv.f1[2],
                a2: inv.g[1][0],
                b2: inv.g[1][1],
                e2: inv.f2[0],
                f2: inv.f2[1],
                g2: inv.f2[2],
                jf: cf.jf,
                kf: cf.kf,
                hf: cf.hf,
                residuals,
            });
        }
    }
    emit(&args.out, &export::invariants_csv(&rows))
}

fn run_slice(args: &SliceArgs) -> Result<(), CliError> {
    let h = make_surface(&args.profile, args.u)?;
    let u_range = args.u.unwrap_or_else(|| h.profile().domain());
    let mut rows = Vec::with_capacity(args.samples + 1);
    for u in sample_interval(u_range, args.samples.max(1) + 1) {
        rows.push(SliceRow {
            u,
            s: h.slice_point(u, SliceVariant::Slice)?,
            c: h.slice_point(u, SliceVariant::Mirror)?,
        });
    }
    emit(&args.out, &export::slice_csv(&rows))
}

fn run_reconstruct(args: &ReconstructArgs) -> Result<(), CliError> {
    let ell = parse_expr(&args.ell, "ell")?;
    let beta = parse_expr(&args.beta, "beta")?;
    let init = ReconstructionInit {
        u0: args.u0,
        gamma0: [args.x0, args.z0],
        angle0: args.angle0,
    };
    let sample =
        reconstruct_curve(&ell, &beta, &init, args.u, args.steps).map_err(spec_err)?;
    emit(&args.out, &export::curve_csv(&sample))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges_and_grids_parse() {
        assert_eq!(parse_range("-1:1").unwrap(), [-1.0, 1.0]);
        assert_eq!(parse_range(" 0 : 6.5 ").unwrap(), [0.0, 6.5]);
        assert!(parse_range("1:1").is_err());
        assert!(parse_range("1").is_err());
        assert_eq!(parse_grid("200x200").unwrap(), (200, 200));
        assert!(parse_grid("1x5").is_err());
        assert!(parse_grid("5").is_err());
    }

    #[test]
    fn builtin_aliases_resolve() {
        let args = ProfileArgs {
            builtin: Some("example2".into()),
            input: None,
            lambda: 0.5,
        };
        let h = make_surface(&args, None).unwrap();
        assert_eq!(h.profile().domain(), [-2.0, 2.0]);
        let args = ProfileArgs {
            builtin: Some("nonesuch".into()),
            input: None,
            lambda: 0.5,
        };
        assert!(matches!(make_surface(&args, None), Err(CliError::Spec(_))));
    }

    #[test]
    fn curve_specs_round_trip_through_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("curve.json");
        fs::write(
            &path,
            r#"{"kind":"explicit","x":"u^2","z":"u","a":"1/sqrt(1+4*u^2)","b":"-2*u/sqrt(1+4*u^2)","domain":[-1,1]}"#,
        )
        .unwrap();
        let args = ProfileArgs {
            builtin: None,
            input: Some(path.clone()),
            lambda: 0.5,
        };
        let h = make_surface(&args, None).unwrap();
        assert_eq!(h.profile().domain(), [-1.0, 1.0]);

        fs::write(
            &path,
            r#"{"kind":"curvature","ell":"1","beta":"1","init":{"u0":0,"gamma0":[1,0],"angle0":0}}"#,
        )
        .unwrap();
        let h = make_surface(&args, Some([0.0, 1.0])).unwrap();
        assert_eq!(h.profile().domain(), [0.0, 1.0]);

        fs::write(&path, r#"{"kind":"explicit","x":"u^"}"#).unwrap();
        assert!(matches!(make_surface(&args, None), Err(CliError::Spec(_))));
    }

    #[test]
    fn exit_codes_separate_spec_and_frame_failures() {
        assert_eq!(CliError::Spec("x".into()).exit_code(), 1);
        assert_eq!(CliError::NoSmoothSelection("x".into()).exit_code(), 2);
    }
}
