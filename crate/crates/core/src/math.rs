//! Small numeric helpers shared by the projection and rasterization kernels.

use crate::Real;
use nalgebra::{Matrix2, Matrix3, Vector2, Vector3, Vector4};

pub type Vec2 = Vector2<Real>;
pub type Vec3 = Vector3<Real>;
pub type Vec4 = Vector4<Real>;
pub type Mat2 = Matrix2<Real>;
pub type Mat3 = Matrix3<Real>;

/// Quaternion stored as (w, x, y, z).
pub type Quat = [Real; 4];

pub const QUAT_IDENTITY: Quat = [1.0, 0.0, 0.0, 0.0];

pub fn quat_norm(q: &Quat) -> Real {
    (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt()
}

pub fn quat_normalize(q: &Quat) -> Quat {
    let n = quat_norm(q);
    [q[0] / n, q[1] / n, q[2] / n, q[3] / n]
}

/// Backward of `quat_normalize`: maps dL/dq̂ to dL/dq.
pub fn quat_normalize_backward(q: &Quat, grad_unit: &Quat) -> Quat {
    let n = quat_norm(q);
    let u = quat_normalize(q);
    let dot = grad_unit[0] * u[0] + grad_unit[1] * u[1] + grad_unit[2] * u[2] + grad_unit[3] * u[3];
    [
        (grad_unit[0] - dot * u[0]) / n,
        (grad_unit[1] - dot * u[1]) / n,
        (grad_unit[2] - dot * u[2]) / n,
        (grad_unit[3] - dot * u[3]) / n,
    ]
}

/// Rotation matrix of a unit quaternion.
pub fn quat_to_matrix(q: &Quat) -> Mat3 {
    let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
    Mat3::new(
        1.0 - 2.0 * (y * y + z * z),
        2.0 * (x * y - w * z),
        2.0 * (x * z + w * y),
        2.0 * (x * y + w * z),
        1.0 - 2.0 * (x * x + z * z),
        2.0 * (y * z - w * x),
        2.0 * (x * z - w * y),
        2.0 * (y * z + w * x),
        1.0 - 2.0 * (x * x + y * y),
    )
}

/// Partial derivatives of the rotation matrix w.r.t. the four unit-quaternion
/// components, in (w, x, y, z) order.
pub fn quat_to_matrix_jacobian(q: &Quat) -> [Mat3; 4] {
    let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
    let dw = Mat3::new(0.0, -2.0 * z, 2.0 * y, 2.0 * z, 0.0, -2.0 * x, -2.0 * y, 2.0 * x, 0.0);
    let dx = Mat3::new(
        0.0,
        2.0 * y,
        2.0 * z,
        2.0 * y,
        -4.0 * x,
        -2.0 * w,
        2.0 * z,
        2.0 * w,
        -4.0 * x,
    );
    let dy = Mat3::new(
        -4.0 * y,
        2.0 * x,
        2.0 * w,
        2.0 * x,
        0.0,
        2.0 * z,
        -2.0 * w,
        2.0 * z,
        -4.0 * y,
    );
    let dz = Mat3::new(
        -4.0 * z,
        -2.0 * w,
        2.0 * x,
        2.0 * w,
        -4.0 * z,
        2.0 * y,
        2.0 * x,
        2.0 * y,
        0.0,
    );
    [dw, dx, dy, dz]
}

/// 0.5 * (M + Mᵀ) for 2x2 matrices.
pub fn sym2(m: &Mat2) -> Mat2 {
    let off = 0.5 * (m[(0, 1)] + m[(1, 0)]);
    Mat2::new(m[(0, 0)], off, off, m[(1, 1)])
}

/// 0.5 * (M + Mᵀ) for 3x3 matrices.
pub fn sym3(m: &Mat3) -> Mat3 {
    0.5 * (m + m.transpose())
}

pub fn sigmoid(x: Real) -> Real {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

pub fn logit(p: Real) -> Real {
    (p / (1.0 - p)).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot_entry(q: &Quat, r: usize, c: usize) -> Real {
        quat_to_matrix(&quat_normalize(q))[(r, c)]
    }

    #[test]
    fn rotation_jacobian_matches_finite_differences() {
        // Unit quaternions only: the jacobian is for the matrix as a function
        // of the already-normalized components.
        let q = quat_normalize(&[0.9, -0.3, 0.2, 0.25]);
        let jac = quat_to_matrix_jacobian(&q);
        let eps = 1e-4 as Real;
        for k in 0..4 {
            for r in 0..3 {
                for c in 0..3 {
                    let mut qp = q;
                    let mut qm = q;
                    qp[k] += eps;
                    qm[k] -= eps;
                    // Differentiate quat_to_matrix directly (no renormalize).
                    let fd =
                        (quat_to_matrix(&qp)[(r, c)] - quat_to_matrix(&qm)[(r, c)]) / (2.0 * eps);
                    assert!(
                        (fd - jac[k][(r, c)]).abs() < 1e-2 as Real,
                        "k={k} r={r} c={c} fd={fd} an={}",
                        jac[k][(r, c)]
                    );
                }
            }
        }
    }

    #[test]
    fn normalize_backward_matches_finite_differences() {
        let q: Quat = [0.7, -0.4, 0.5, 0.1];
        // L = sum of entries of R(normalize(q)) as a scalar probe.
        let loss = |q: &Quat| -> Real {
            let m = quat_to_matrix(&quat_normalize(q));
            m.iter().sum()
        };
        // Analytic: dL/dq̂ via jacobian, then through normalization.
        let u = quat_normalize(&q);
        let jac = quat_to_matrix_jacobian(&u);
        let g_unit: Quat = [
            jac[0].iter().sum(),
            jac[1].iter().sum(),
            jac[2].iter().sum(),
            jac[3].iter().sum(),
        ];
        let g = quat_normalize_backward(&q, &g_unit);
        let eps = 1e-4 as Real;
        for k in 0..4 {
            let mut qp = q;
            let mut qm = q;
            qp[k] += eps;
            qm[k] -= eps;
            let fd = (loss(&qp) - loss(&qm)) / (2.0 * eps);
            assert!((fd - g[k]).abs() < 1e-2 as Real, "k={k} fd={fd} an={}", g[k]);
        }
    }

    #[test]
    fn sign_flip_gives_identical_rotation() {
        let q = quat_normalize(&[0.3, 0.8, -0.2, 0.4]);
        let neg = [-q[0], -q[1], -q[2], -q[3]];
        assert_eq!(quat_to_matrix(&q), quat_to_matrix(&neg));
    }

    #[test]
    fn sigmoid_logit_roundtrip() {
        for p in [0.005, 0.1, 0.5, 0.9, 0.995] {
            let p = p as Real;
            assert!((sigmoid(logit(p)) - p).abs() < 1e-6 as Real);
        }
    }
}
