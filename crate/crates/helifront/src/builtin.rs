//! Built-in profile curves for the command line tool and the test corpus.
//!
//! Four profiles produce, at u = 0, one each of the four edge types the
//! classifier recognises; their names are the ADE labels of the plane cusp
//! the slice curve acquires there. `circle` sweeps a regular torus-like
//! surface and `vline` a right helicoid.

use crate::expr::Expr;
use crate::legendre::LegendreCurve;

/// Pitch used by the fixtures and as the command line default.
pub const DEFAULT_LAMBDA: f64 = 0.5;

const DOMAIN: [f64; 2] = [-2.0, 2.0];

pub fn names() -> &'static [&'static str] {
    &["a2", "a4", "e6", "e8", "circle", "vline"]
}

/// Named profile, or `None` for an unknown name. `example1..example4`
/// alias the four singular fixtures in the edge-type order 5/2, 3/2,
/// 4/3, 5/3.
pub fn profile(name: &str) -> Option<LegendreCurve> {
    let name = match name {
        "example1" => "a4",
        "example2" => "a2",
        "example3" => "e6",
        "example4" => "e8",
        other => other,
    };
    let (x, z, a, b, domain) = match name {
        // slice cusp (t^2, t^3): 3/2 edge at u = 0
        "a2" => ("u^2", "u", "1/sqrt(1+4*u^2)", "-2*u/sqrt(1+4*u^2)", DOMAIN),
        // slice cusp (t^2, t^5): 5/2 edge at u = 0
        "a4" => (
            "u^2+u^3",
            "u^2",
            "2/sqrt(8+12*u+9*u^2)",
            "-(2+3*u)/sqrt(8+12*u+9*u^2)",
            DOMAIN,
        ),
        // slice cusp (t^3, t^4): 4/3 edge at u = 0
        "e6" => ("u^3", "u", "1/sqrt(1+9*u^4)", "-3*u^2/sqrt(1+9*u^4)", DOMAIN),
        // slice cusp (t^3, t^5): 5/3 edge at u = 0
        "e8" => ("u^3", "u^2", "2/sqrt(4+9*u^2)", "-3*u/sqrt(4+9*u^2)", DOMAIN),
        "circle" => (
            "2+cos(u)",
            "sin(u)",
            "cos(u)",
            "sin(u)",
            [0.0, std::f64::consts::TAU],
        ),
        "vline" => ("1", "u", "1", "0", DOMAIN),
        _ => return None,
    };
    Some(LegendreCurve::Explicit {
        x: parse(x),
        z: parse(z),
        a: parse(a),
        b: parse(b),
        domain,
    })
}

fn parse(src: &str) -> Expr {
    Expr::parse(src).expect("built-in expression")
}
