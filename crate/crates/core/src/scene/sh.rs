//! Real spherical-harmonic color evaluation, degree ≤ 3.
//!
//! Follows the splatting convention: +0.5 offset on every channel and a
//! clamp at zero. Coefficients are ordered band-major, m ascending within a
//! band (index l² + l + m).

use crate::math::Vec3;
use crate::scene::cloud::{ShCoeffs, SH_COEFF_COUNT};
use crate::Real;

const C0: Real = 0.282_094_791_773_878_14;
const C1: Real = 0.488_602_511_902_919_9;
const C2: [Real; 5] = [
    1.092_548_430_592_079_2,
    -1.092_548_430_592_079_2,
    0.315_391_565_252_520_05,
    -1.092_548_430_592_079_2,
    0.546_274_215_296_039_6,
];
const C3: [Real; 7] = [
    -0.590_043_589_926_643_5,
    2.890_611_442_640_554,
    -0.457_045_799_464_465_8,
    0.373_176_332_590_115_4,
    -0.457_045_799_464_465_8,
    1.445_305_721_320_277,
    -0.590_043_589_926_643_5,
];

/// Basis function values at a unit direction, zero beyond `degree`.
pub fn sh_basis(dir: &Vec3, degree: usize) -> [Real; SH_COEFF_COUNT] {
    let (x, y, z) = (dir.x, dir.y, dir.z);
    let mut b = [0.0; SH_COEFF_COUNT];
    b[0] = C0;
    if degree >= 1 {
        b[1] = -C1 * y;
        b[2] = C1 * z;
        b[3] = -C1 * x;
    }
    if degree >= 2 {
        let (xx, yy, zz) = (x * x, y * y, z * z);
        b[4] = C2[0] * x * y;
        b[5] = C2[1] * y * z;
        b[6] = C2[2] * (2.0 * zz - xx - yy);
        b[7] = C2[3] * x * z;
        b[8] = C2[4] * (xx - yy);
        if degree >= 3 {
            b[9] = C3[0] * y * (3.0 * xx - yy);
            b[10] = C3[1] * x * y * z;
            b[11] = C3[2] * y * (4.0 * zz - xx - yy);
            b[12] = C3[3] * z * (2.0 * zz - 3.0 * xx - 3.0 * yy);
            b[13] = C3[4] * x * (4.0 * zz - xx - yy);
            b[14] = C3[5] * z * (xx - yy);
            b[15] = C3[6] * x * (xx - 3.0 * yy);
        }
    }
    b
}

/// Partial derivatives of each basis function w.r.t. the unit-direction
/// components.
pub fn sh_basis_jacobian(dir: &Vec3, degree: usize) -> [[Real; 3]; SH_COEFF_COUNT] {
    let (x, y, z) = (dir.x, dir.y, dir.z);
    let mut j = [[0.0; 3]; SH_COEFF_COUNT];
    if degree >= 1 {
        j[1] = [0.0, -C1, 0.0];
        j[2] = [0.0, 0.0, C1];
        j[3] = [-C1, 0.0, 0.0];
    }
    if degree >= 2 {
        let (xx, yy, zz) = (x * x, y * y, z * z);
        j[4] = [C2[0] * y, C2[0] * x, 0.0];
        j[5] = [0.0, C2[1] * z, C2[1] * y];
        j[6] = [-2.0 * C2[2] * x, -2.0 * C2[2] * y, 4.0 * C2[2] * z];
        j[7] = [C2[3] * z, 0.0, C2[3] * x];
        j[8] = [2.0 * C2[4] * x, -2.0 * C2[4] * y, 0.0];
        if degree >= 3 {
            j[9] = [C3[0] * 6.0 * x * y, C3[0] * 3.0 * (xx - yy), 0.0];
            j[10] = [C3[1] * y * z, C3[1] * x * z, C3[1] * x * y];
            j[11] = [
                -2.0 * C3[2] * x * y,
                C3[2] * (4.0 * zz - xx - 3.0 * yy),
                8.0 * C3[2] * y * z,
            ];
            j[12] = [
                -6.0 * C3[3] * x * z,
                -6.0 * C3[3] * y * z,
                C3[3] * (6.0 * zz - 3.0 * xx - 3.0 * yy),
            ];
            j[13] = [
                C3[4] * (4.0 * zz - 3.0 * xx - yy),
                -2.0 * C3[4] * x * y,
                8.0 * C3[4] * x * z,
            ];
            j[14] = [2.0 * C3[5] * x * z, -2.0 * C3[5] * y * z, C3[5] * (xx - yy)];
            j[15] = [3.0 * C3[6] * (xx - yy), -6.0 * C3[6] * x * y, 0.0];
        }
    }
    j
}

/// Evaluates the SH color for a unit `dir`: per channel
/// `max(0, 0.5 + Σ_k basis_k · coeff_k)`. Returns the color and which
/// channels were clamped (their gradient is zero).
pub fn sh_eval(coeffs: &ShCoeffs, dir: &Vec3, degree: usize) -> ([Real; 3], [bool; 3]) {
    let basis = sh_basis(dir, degree);
    let n = (degree + 1) * (degree + 1);
    let mut color = [0.5; 3];
    for k in 0..n {
        for ch in 0..3 {
            color[ch] += basis[k] * coeffs[k][ch];
        }
    }
    let mut clamped = [false; 3];
    for ch in 0..3 {
        if color[ch] < 0.0 {
            color[ch] = 0.0;
            clamped[ch] = true;
        }
    }
    (color, clamped)
}

/// Backward of [`sh_eval`]: maps dL/dcolor to gradients for the coefficients
/// and for the *unit* direction. Clamped channels contribute nothing.
pub fn sh_backward(
    coeffs: &ShCoeffs,
    dir: &Vec3,
    degree: usize,
    grad_color: &[Real; 3],
    clamped: &[bool; 3],
) -> (ShCoeffs, Vec3) {
    let basis = sh_basis(dir, degree);
    let jac = sh_basis_jacobian(dir, degree);
    let n = (degree + 1) * (degree + 1);
    let mut grad_coeffs = [[0.0; 3]; SH_COEFF_COUNT];
    let mut grad_dir = Vec3::zeros();
    for ch in 0..3 {
        if clamped[ch] {
            continue;
        }
        let g = grad_color[ch];
        if g == 0.0 {
            continue;
        }
        for k in 0..n {
            grad_coeffs[k][ch] = basis[k] * g;
            let c = coeffs[k][ch];
            grad_dir.x += g * c * jac[k][0];
            grad_dir.y += g * c * jac[k][1];
            grad_dir.z += g * c * jac[k][2];
        }
    }
    (grad_coeffs, grad_dir)
}
