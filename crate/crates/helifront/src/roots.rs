//! Zero finding for nonnegative degeneracy indicators along an interval.
//!
//! The scanned functions measure how singular a point is (squared normal
//! length, squared determinant size), so their zeros sit at local minima
//! rather than sign crossings. The scan brackets minima through derivative
//! sign changes on a grid, bisects the derivative, and keeps minimizers whose
//! indicator value passes the acceptance tolerance.

/// Zeros of a smooth indicator `g >= 0` on `[lo, hi]`.
///
/// `eval` returns `(g(u), g'(u))`. A point is accepted when `g <= accept_tol`.
/// Zeros closer than `merge_dist` collapse to one representative.
pub fn scan_indicator_zeros(
    eval: &dyn Fn(f64) -> (f64, f64),
    lo: f64,
    hi: f64,
    n_grid: usize,
    accept_tol: f64,
    merge_dist: f64,
) -> Vec<f64> {
    assert!(hi > lo && n_grid >= 2, "bad scan interval");
    let step = (hi - lo) / n_grid as f64;
    let mut candidates = Vec::new();
    let mut prev = eval(lo);
    if prev.0 <= accept_tol {
        candidates.push(lo);
    }
    for i in 1..=n_grid {
        let u = lo + step * i as f64;
        let cur = eval(u);
        // grid point already at the bottom, possibly with g' = 0 exactly
        if cur.0 <= accept_tol {
            candidates.push(u);
        } else if prev.1 < 0.0 && cur.1 > 0.0 {
            let m = bisect_derivative(eval, u - step, u);
            if eval(m).0 <= accept_tol {
                candidates.push(m);
            }
        }
        prev = cur;
    }
    candidates.sort_by(f64::total_cmp);
    let mut zeros: Vec<f64> = Vec::new();
    for c in candidates {
        match zeros.last_mut() {
            Some(last) if (c - *last).abs() <= merge_dist => {
                // keep the deeper of the merged pair
                if eval(c).0 < eval(*last).0 {
                    *last = c;
                }
            }
            _ => zeros.push(c),
        }
    }
    zeros
}

/// Bisects `g'` on a bracket with `g'(a) < 0 < g'(b)`.
fn bisect_derivative(eval: &dyn Fn(f64) -> (f64, f64), mut a: f64, mut b: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let dm = eval(m).1;
        if dm == 0.0 {
            return m;
        }
        if dm < 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(g: impl Fn(f64) -> (f64, f64), lo: f64, hi: f64) -> Vec<f64> {
        scan_indicator_zeros(&|u| g(u), lo, hi, 2000, 1e-18, 1e-6)
    }

    #[test]
    fn finds_separated_quadratic_zeros() {
        let g = |u: f64| {
            let w = u * (u - 1.0);
            (w * w, 2.0 * w * (2.0 * u - 1.0))
        };
        let zeros = scan(g, -2.0, 2.0);
        assert_eq!(zeros.len(), 2);
        assert!(zeros[0].abs() < 1e-12 && (zeros[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pins_flat_quartic_zero() {
        let zeros = scan(|u| (u.powi(4), 4.0 * u.powi(3)), -1.3, 1.7);
        assert_eq!(zeros.len(), 1);
        assert!(zeros[0].abs() < 1e-12);
    }

    #[test]
    fn rejects_positive_minima_and_accepts_endpoint() {
        assert!(scan(|u| (u * u + 0.01, 2.0 * u), -1.0, 1.0).is_empty());
        let zeros = scan(|u| (u * u, 2.0 * u), 0.0, 1.0);
        assert_eq!(zeros, vec![0.0]);
    }
}
