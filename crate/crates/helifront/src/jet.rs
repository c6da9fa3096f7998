//! Truncated Taylor expansions (jets) of smooth real functions of one variable.
//!
//! A [`Jet`] stores the base point together with Taylor coefficients
//! `c[k] = f^(k)(u0) / k!` up to a fixed maximum order. All arithmetic is
//! exact truncated-series arithmetic, so coefficients are the true Taylor
//! coefficients of the combined function up to floating-point rounding.

use thiserror::Error;

/// Highest supported jet order. Order 5 drives the cusp classifiers; the
/// spare order absorbs one deflation or derivative step.
pub const MAX_ORDER: usize = 6;

/// Divisors and radicands whose value at the base point is at most this are
/// treated as vanishing.
pub const VANISH_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JetError {
    /// Division by a jet whose value at the base point vanishes.
    #[error("division by a jet that vanishes at the base point")]
    DivisionByVanishing,
    /// Square root of a jet whose value at the base point vanishes or is negative.
    #[error("square root of a jet that vanishes or is negative at the base point")]
    SqrtOfVanishing,
    /// Requested order above [`MAX_ORDER`].
    #[error("jet order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderOutOfRange(usize),
}

/// Truncated Taylor expansion of a smooth function at a base point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    base: f64,
    order: usize,
    c: [f64; MAX_ORDER + 1],
}

impl Jet {
    /// Jet of the constant function `value`.
    pub fn constant(base: f64, value: f64, order: usize) -> Jet {
        let mut c = [0.0; MAX_ORDER + 1];
        c[0] = value;
        Jet {
            base,
            order: order.min(MAX_ORDER),
            c,
        }
    }

    /// Jet of the identity `u -> u` at `base`.
    pub fn variable(base: f64, order: usize) -> Jet {
        let mut c = [0.0; MAX_ORDER + 1];
        c[0] = base;
        if order >= 1 {
            c[1] = 1.0;
        }
        Jet {
            base,
            order: order.min(MAX_ORDER),
            c,
        }
    }

    /// Jet with explicitly given Taylor coefficients `coeffs[k] = f^(k)/k!`.
    pub fn from_coeffs(base: f64, coeffs: &[f64]) -> Result<Jet, JetError> {
        if coeffs.is_empty() || coeffs.len() > MAX_ORDER + 1 {
            return Err(JetError::OrderOutOfRange(coeffs.len().saturating_sub(1)));
        }
        let mut c = [0.0; MAX_ORDER + 1];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Jet {
            base,
            order: coeffs.len() - 1,
            c,
        })
    }

    pub fn base_point(&self) -> f64 {
        self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Value of the function at the base point.
    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// Taylor coefficient `f^(k)(u0)/k!`; zero above the carried order.
    pub fn coeff(&self, k: usize) -> f64 {
        if k <= self.order {
            self.c[k]
        } else {
            0.0
        }
    }

    /// Coefficients up to the carried order.
    pub fn coeffs(&self) -> &[f64] {
        &self.c[..=self.order]
    }

    /// `k`-th derivative at the base point, `k! * coeff(k)`.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut fact = 1.0;
        for i in 2..=k {
            fact *= i as f64;
        }
        fact * self.coeff(k)
    }

    /// Index of the first coefficient with `|c[k]| > tol`, if any.
    pub fn vanishing_order(&self, tol: f64) -> Option<usize> {
        (0..=self.order).find(|&k| self.c[k].abs() > tol)
    }

    /// Jet of the derivative; drops one order (an order-0 jet differentiates
    /// to the order-0 zero jet).
    pub fn deriv(&self) -> Jet {
        let mut c = [0.0; MAX_ORDER + 1];
        for k in 1..=self.order {
            c[k - 1] = self.c[k] * k as f64;
        }
        Jet {
            base: self.base,
            order: self.order.saturating_sub(1),
            c,
        }
    }

    /// Jet of the antiderivative with value `c0` at the base point; gains one
    /// order, which must stay within [`MAX_ORDER`].
    pub fn integrate(&self, c0: f64) -> Result<Jet, JetError> {
        if self.order + 1 > MAX_ORDER {
            return Err(JetError::OrderOutOfRange(self.order + 1));
        }
        let mut c = [0.0; MAX_ORDER + 1];
        c[0] = c0;
        for k in 0..=self.order {
            c[k + 1] = self.c[k] / (k + 1) as f64;
        }
        Ok(Jet {
            base: self.base,
            order: self.order + 1,
            c,
        })
    }

    /// Divide by `(u - base)^m`, shifting coefficients down; the first `m`
    /// coefficients must already vanish to `tol`. Drops `m` orders.
    pub fn deflate(&self, m: usize, tol: f64) -> Option<Jet> {
        if m > self.order {
            return None;
        }
        if (0..m).any(|k| self.c[k].abs() > tol) {
            return None;
        }
        let mut c = [0.0; MAX_ORDER + 1];
        c[..=self.order - m].copy_from_slice(&self.c[m..=self.order]);
        Some(Jet {
            base: self.base,
            order: self.order - m,
            c,
        })
    }

    /// Truncate to a lower order (no-op if already at or below it).
    pub fn truncate(&self, order: usize) -> Jet {
        let order = order.min(self.order);
        let mut c = [0.0; MAX_ORDER + 1];
        c[..=order].copy_from_slice(&self.c[..=order]);
        Jet {
            base: self.base,
            order,
            c,
        }
    }

    fn common(&self, rhs: &Jet) -> (usize, f64) {
        debug_assert!(
            (self.base - rhs.base).abs() <= 1e-12 * (1.0 + self.base.abs()),
            "jets combined at different base points"
        );
        (self.order.min(rhs.order), self.base)
    }

    pub fn add(&self, rhs: &Jet) -> Jet {
        let (order, base) = self.common(rhs);
        let mut c = [0.0; MAX_ORDER + 1];
        for (k, out) in c.iter_mut().enumerate().take(order + 1) {
            *out = self.c[k] + rhs.c[k];
        }
        Jet { base, order, c }
    }

    pub fn sub(&self, rhs: &Jet) -> Jet {
        let (order, base) = self.common(rhs);
        let mut c = [0.0; MAX_ORDER + 1];
        for (k, out) in c.iter_mut().enumerate().take(order + 1) {
            *out = self.c[k] - rhs.c[k];
        }
        Jet { base, order, c }
    }

    pub fn neg(&self) -> Jet {
        let mut out = *self;
        for k in 0..=self.order {
            out.c[k] = -out.c[k];
        }
        out
    }

    pub fn scale(&self, s: f64) -> Jet {
        let mut out = *self;
        for k in 0..=self.order {
            out.c[k] *= s;
        }
        out
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &Jet) -> Jet {
        let (order, base) = self.common(rhs);
        let mut c = [0.0; MAX_ORDER + 1];
        for (k, out) in c.iter_mut().enumerate().take(order + 1) {
            let mut s = 0.0;
            for j in 0..=k {
                s += self.c[j] * rhs.c[k - j];
            }
            *out = s;
        }
        Jet { base, order, c }
    }

    /// Truncated quotient; the divisor must not vanish at the base point.
    pub fn div(&self, rhs: &Jet) -> Result<Jet, JetError> {
        let (order, base) = self.common(rhs);
        if rhs.c[0].abs() <= VANISH_TOL {
            return Err(JetError::DivisionByVanishing);
        }
        let mut c = [0.0; MAX_ORDER + 1];
        for k in 0..=order {
            let mut s = self.c[k];
            for (cj, rj) in c[..k].iter().zip(rhs.c[1..=k].iter().rev()) {
                s -= cj * rj;
            }
            c[k] = s / rhs.c[0];
        }
        Ok(Jet { base, order, c })
    }

    /// Integer power via repeated multiplication; negative exponents divide.
    pub fn powi(&self, n: i32) -> Result<Jet, JetError> {
        let mut acc = Jet::constant(self.base, 1.0, self.order);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(self);
        }
        if n < 0 {
            Jet::constant(self.base, 1.0, self.order).div(&acc)
        } else {
            Ok(acc)
        }
    }

    /// Truncated square root; the radicand must be strictly positive at the
    /// base point.
    pub fn sqrt(&self) -> Result<Jet, JetError> {
        if self.c[0] <= VANISH_TOL {
            return Err(JetError::SqrtOfVanishing);
        }
        let mut c = [0.0; MAX_ORDER + 1];
        c[0] = self.c[0].sqrt();
        for k in 1..=self.order {
            let mut s = self.c[k];
            for j in 1..k {
                s -= c[j] * c[k - j];
            }
            c[k] = s / (2.0 * c[0]);
        }
        Ok(Jet {
            base: self.base,
            order: self.order,
            c,
        })
    }

    /// Sine and cosine computed simultaneously through the coupled
    /// coefficient recurrence.
    pub fn sin_cos(&self) -> (Jet, Jet) {
        let mut s = [0.0; MAX_ORDER + 1];
        let mut c = [0.0; MAX_ORDER + 1];
        s[0] = self.c[0].sin();
        c[0] = self.c[0].cos();
        for k in 1..=self.order {
            let mut sk = 0.0;
            let mut ck = 0.0;
            for j in 1..=k {
                sk += j as f64 * self.c[j] * c[k - j];
                ck -= j as f64 * self.c[j] * s[k - j];
            }
            s[k] = sk / k as f64;
            c[k] = ck / k as f64;
        }
        let mk = |arr| Jet {
            base: self.base,
            order: self.order,
            c: arr,
        };
        (mk(s), mk(c))
    }

    pub fn sin(&self) -> Jet {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Jet {
        self.sin_cos().1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn square_of_variable() {
        // u^2 at 0, order 3: coeffs (0, 0, 1, 0)
        let u = Jet::variable(0.0, 3);
        let j = u.mul(&u);
        assert_eq!(j.coeffs(), &[0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn sine_at_origin() {
        // sin(u) at 0, order 5: coeffs (0, 1, 0, -1/6, 0, 1/120)
        let j = Jet::variable(0.0, 5).sin();
        let expect = [0.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0];
        for (k, e) in expect.iter().enumerate() {
            assert_relative_eq!(j.coeff(k), *e, epsilon = 1e-15);
        }
    }

    #[test]
    fn sqrt_of_one_plus_four_u_squared() {
        // sqrt(1 + 4u^2) at 0, order 2: coeffs (1, 0, 2)
        let u = Jet::variable(0.0, 2);
        let r = Jet::constant(0.0, 1.0, 2)
            .add(&u.mul(&u).scale(4.0))
            .sqrt()
            .unwrap();
        assert_relative_eq!(r.coeff(0), 1.0, epsilon = 1e-15);
        assert_relative_eq!(r.coeff(1), 0.0, epsilon = 1e-15);
        assert_relative_eq!(r.coeff(2), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn division_by_vanishing_jet_fails() {
        let one = Jet::constant(0.0, 1.0, 3);
        let u = Jet::variable(0.0, 3);
        assert_eq!(one.div(&u), Err(JetError::DivisionByVanishing));
    }

    #[test]
    fn sqrt_of_vanishing_jet_fails() {
        let u = Jet::variable(0.0, 3);
        assert_eq!(u.mul(&u).sqrt(), Err(JetError::SqrtOfVanishing));
        assert_eq!(
            Jet::constant(0.0, -1.0, 3).sqrt(),
            Err(JetError::SqrtOfVanishing)
        );
    }

    #[test]
    fn pythagorean_identity_at_random_bases() {
        for &u0 in &[-2.0, -0.7, 0.0, 0.3, 1.9, 11.0] {
            let g = Jet::variable(u0, MAX_ORDER);
            let (s, c) = g.sin_cos();
            let one = s.mul(&s).add(&c.mul(&c));
            assert_relative_eq!(one.coeff(0), 1.0, epsilon = 1e-14);
            for k in 1..=MAX_ORDER {
                assert_relative_eq!(one.coeff(k), 0.0, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn deriv_and_integrate_are_inverse() {
        let j = Jet::from_coeffs(0.5, &[1.0, -2.0, 0.25, 3.0, -0.5]).unwrap();
        let back = j.deriv().integrate(j.value()).unwrap();
        for k in 0..=4 {
            assert_relative_eq!(back.coeff(k), j.coeff(k), epsilon = 1e-15);
        }
    }

    #[test]
    fn deflate_shifts_coefficients() {
        // u^2 * (3 + u) at 0: coeffs (0,0,3,1); deflating by 2 gives (3,1)
        let j = Jet::from_coeffs(0.0, &[0.0, 0.0, 3.0, 1.0]).unwrap();
        let d = j.deflate(2, 1e-12).unwrap();
        assert_eq!(d.order(), 1);
        assert_eq!(d.coeffs(), &[3.0, 1.0]);
        assert!(j.deflate(3, 1e-12).is_none());
    }

    #[test]
    fn reciprocal_power_matches_division() {
        let g = Jet::from_coeffs(1.0, &[2.0, 1.0, -0.5, 0.25]).unwrap();
        let inv2 = g.powi(-2).unwrap();
        let direct = Jet::constant(1.0, 1.0, 3)
            .div(&g.mul(&g))
            .unwrap();
        for k in 0..=3 {
            assert_relative_eq!(inv2.coeff(k), direct.coeff(k), epsilon = 1e-14);
        }
    }
}
