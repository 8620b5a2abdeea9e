//! Fixed-size real and complex vector/matrix helpers.
//!
//! Everything in scope is 3- or 4-dimensional, so plain arrays beat a general
//! linear-algebra dependency here.

use num_complex::Complex64;

use crate::fp;

pub(crate) type Mat3 = [[f64; 3]; 3];
pub(crate) type Mat4 = [[f64; 4]; 4];
pub(crate) type CMat3 = [[Complex64; 3]; 3];

pub(crate) const ZERO_C: Complex64 = Complex64::new(0.0, 0.0);

#[inline]
pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[inline]
pub(crate) fn norm(a: [f64; 3]) -> f64 {
    fp::sqrt(dot(a, a))
}

#[inline]
pub(crate) fn scale(a: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub(crate) fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// `None` when the vector is too short to define a direction.
pub(crate) fn normalize(a: [f64; 3]) -> Option<[f64; 3]> {
    let n = norm(a);
    if n > 0.0 && n.is_finite() {
        Some(scale(a, 1.0 / n))
    } else {
        None
    }
}

pub(crate) fn mat3_identity() -> Mat3 {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub(crate) fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub(crate) fn mat3_transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a[j][i];
        }
    }
    out
}

pub(crate) fn mat3_det(a: &Mat3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

pub(crate) fn mat3_apply(a: &Mat3, v: [f64; 3]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (i, entry) in out.iter_mut().enumerate() {
        *entry = dot(a[i], v);
    }
    out
}

pub(crate) fn mat3_max_abs_diff(a: &Mat3, b: &Mat3) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max(fp::abs(a[i][j] - b[i][j]));
        }
    }
    worst
}

pub(crate) fn mat4_identity() -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    out
}

pub(crate) fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub(crate) fn mat4_transpose(a: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a[j][i];
        }
    }
    out
}

pub(crate) fn mat4_apply(a: &Mat4, v: [f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (i, entry) in out.iter_mut().enumerate() {
        *entry = (0..4).map(|k| a[i][k] * v[k]).sum();
    }
    out
}

#[cfg(test)]
pub(crate) fn mat4_max_abs_diff(a: &Mat4, b: &Mat4) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max(fp::abs(a[i][j] - b[i][j]));
        }
    }
    worst
}

pub(crate) fn cmat3_identity() -> CMat3 {
    let mut out = [[ZERO_C; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    out
}

pub(crate) fn cmat3_from_real(a: &Mat3) -> CMat3 {
    let mut out = [[ZERO_C; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = Complex64::new(a[i][j], 0.0);
        }
    }
    out
}

pub(crate) fn cmat3_mul(a: &CMat3, b: &CMat3) -> CMat3 {
    let mut out = [[ZERO_C; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub(crate) fn cmat3_adjoint(a: &CMat3) -> CMat3 {
    let mut out = [[ZERO_C; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = a[j][i].conj();
        }
    }
    out
}

pub(crate) fn cmat3_max_abs_diff(a: &CMat3, b: &CMat3) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max((a[i][j] - b[i][j]).norm());
        }
    }
    worst
}

pub(crate) fn cmat3_hermiticity_residual(a: &CMat3) -> f64 {
    cmat3_max_abs_diff(a, &cmat3_adjoint(a))
}

/// Real 3-vector dotted into a complex 3-vector.
#[inline]
pub(crate) fn rc_dot3(a: [f64; 3], b: [Complex64; 3]) -> Complex64 {
    b[0] * a[0] + b[1] * a[1] + b[2] * a[2]
}

/// Plain (unconjugated) complex 3-vector dot product.
#[inline]
pub(crate) fn c_dot3(a: [Complex64; 3], b: [Complex64; 3]) -> Complex64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Minkowski contraction `a^mu b_mu` of complex four-vectors, no conjugation.
#[inline]
pub(crate) fn c_minkowski4(a: [Complex64; 4], b: [Complex64; 4]) -> Complex64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

/// Minkowski contraction with the first argument conjugated.
#[inline]
pub(crate) fn c_minkowski4_conj(a: [Complex64; 4], b: [Complex64; 4]) -> Complex64 {
    a[0].conj() * b[0] - a[1].conj() * b[1] - a[2].conj() * b[2] - a[3].conj() * b[3]
}

/// Minkowski contraction of a real four-vector with a complex one.
#[inline]
pub(crate) fn rc_minkowski4(a: [f64; 4], b: [Complex64; 4]) -> Complex64 {
    b[0] * a[0] - b[1] * a[1] - b[2] * a[2] - b[3] * a[3]
}
