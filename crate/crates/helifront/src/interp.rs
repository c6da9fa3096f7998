//! Cubic spline interpolation on uniform grids.
//!
//! Not-a-knot end conditions keep first-derivative accuracy near the ends,
//! which the curvature round-trip bound relies on.

/// Cubic interpolant of samples on a uniform grid.
#[derive(Debug, Clone)]
pub struct CubicSpline {
    start: f64,
    step: f64,
    ys: Vec<f64>,
    /// Second derivatives at the knots.
    m: Vec<f64>,
}

impl CubicSpline {
    /// Not-a-knot spline through `ys` sampled at `start + i*step`.
    /// Needs at least four samples.
    pub fn not_a_knot(start: f64, step: f64, ys: &[f64]) -> CubicSpline {
        let n = ys.len();
        assert!(n >= 4, "spline needs at least four samples");
        assert!(step > 0.0);
        let h2 = step * step;
        let delta = |i: usize| (ys[i - 1] - 2.0 * ys[i] + ys[i + 1]) / h2;

        // Not-a-knot at a uniform spacing pins the second derivative at the
        // first and last interior knots to the centered difference; the rest
        // is the standard tridiagonal system.
        let mut m = vec![0.0; n];
        m[1] = delta(1);
        m[n - 2] = delta(n - 2);
        if n > 4 {
            let k = n - 4; // unknowns m[2..=n-3]
            let mut diag = vec![4.0; k];
            let mut rhs = vec![0.0; k];
            for (j, r) in rhs.iter_mut().enumerate() {
                *r = 6.0 * delta(j + 2);
            }
            rhs[0] -= m[1];
            rhs[k - 1] -= m[n - 2];
            // Thomas elimination with unit off-diagonals
            for j in 1..k {
                let w = 1.0 / diag[j - 1];
                diag[j] -= w;
                rhs[j] -= w * rhs[j - 1];
            }
            m[k + 1] = rhs[k - 1] / diag[k - 1];
            for j in (0..k - 1).rev() {
                m[j + 2] = (rhs[j] - m[j + 3]) / diag[j];
            }
        }
        m[0] = 2.0 * m[1] - m[2];
        m[n - 1] = 2.0 * m[n - 2] - m[n - 3];
        CubicSpline {
            start,
            step,
            ys: ys.to_vec(),
            m,
        }
    }

    fn segment(&self, u: f64) -> (usize, f64) {
        let n = self.ys.len();
        let t = (u - self.start) / self.step;
        let i = (t.floor() as isize).clamp(0, n as isize - 2) as usize;
        (i, u - (self.start + i as f64 * self.step))
    }

    pub fn eval(&self, u: f64) -> f64 {
        let (i, d) = self.segment(u);
        let h = self.step;
        let (y0, y1, m0, m1) = (self.ys[i], self.ys[i + 1], self.m[i], self.m[i + 1]);
        let t = d / h;
        let s = 1.0 - t;
        s * y0 + t * y1
            + h * h / 6.0 * ((s * s * s - s) * m0 + (t * t * t - t) * m1)
    }

    pub fn deriv(&self, u: f64) -> f64 {
        let (i, d) = self.segment(u);
        let h = self.step;
        let (y0, y1, m0, m1) = (self.ys[i], self.ys[i + 1], self.m[i], self.m[i + 1]);
        let t = d / h;
        let s = 1.0 - t;
        (y1 - y0) / h + h / 6.0 * ((1.0 - 3.0 * s * s) * m0 + (3.0 * t * t - 1.0) * m1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reproduces_cubic_polynomial_exactly() {
        let f = |u: f64| 2.0 * u * u * u - u * u + 3.0 * u - 5.0;
        let ys: Vec<f64> = (0..9).map(|i| f(-1.0 + 0.5 * i as f64)).collect();
        let s = CubicSpline::not_a_knot(-1.0, 0.5, &ys);
        for &u in &[-0.95, -0.3, 0.0, 0.77, 2.49, 3.0] {
            assert_relative_eq!(s.eval(u), f(u), epsilon = 1e-12, max_relative = 1e-12);
            assert_relative_eq!(
                s.deriv(u),
                6.0 * u * u - 2.0 * u + 3.0,
                epsilon = 1e-11,
                max_relative = 1e-11
            );
        }
    }

    #[test]
    fn derivative_of_sine_converges() {
        let n = 1001;
        let step = 2.0 / (n - 1) as f64;
        let ys: Vec<f64> = (0..n).map(|i| (-1.0 + step * i as f64).sin()).collect();
        let s = CubicSpline::not_a_knot(-1.0, step, &ys);
        for &u in &[-1.0, -0.999, -0.5, 0.123, 0.98, 1.0] {
            assert_relative_eq!(s.deriv(u), u.cos(), epsilon = 5e-9);
        }
    }
}
