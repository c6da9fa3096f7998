//! Small fixed-size vector and determinant helpers.

#[inline]
pub fn dot3(p: [f64; 3], q: [f64; 3]) -> f64 {
    p[0] * q[0] + p[1] * q[1] + p[2] * q[2]
}

#[inline]
pub fn cross3(p: [f64; 3], q: [f64; 3]) -> [f64; 3] {
    [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ]
}

#[inline]
pub fn norm3(p: [f64; 3]) -> f64 {
    dot3(p, p).sqrt()
}

#[inline]
pub fn add3(p: [f64; 3], q: [f64; 3]) -> [f64; 3] {
    [p[0] + q[0], p[1] + q[1], p[2] + q[2]]
}

#[inline]
pub fn sub3(p: [f64; 3], q: [f64; 3]) -> [f64; 3] {
    [p[0] - q[0], p[1] - q[1], p[2] - q[2]]
}

#[inline]
pub fn scale3(c: f64, p: [f64; 3]) -> [f64; 3] {
    [c * p[0], c * p[1], c * p[2]]
}

/// det [[a, b], [c, d]].
#[inline]
pub fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a * d - b * c
}

/// 2-vector determinant det(p, q).
#[inline]
pub fn det2v(p: [f64; 2], q: [f64; 2]) -> f64 {
    p[0] * q[1] - p[1] * q[0]
}
