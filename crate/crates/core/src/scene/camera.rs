//! Pinhole camera with a world→camera rigid transform.

use crate::math::{Mat3, Vec3};
use crate::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct Camera {
    /// World→camera rotation (orthonormal).
    pub rotation: Mat3,
    /// World→camera translation.
    pub translation: Vec3,
    pub fx: Real,
    pub fy: Real,
    pub cx: Real,
    pub cy: Real,
    pub width: usize,
    pub height: usize,
    /// Positive depth cutoff in world units.
    pub near: Real,
}

impl Camera {
    /// Validates the orthonormality and size invariants.
    pub fn check_invariants(&self) -> Result<(), String> {
        let e = (self.rotation.transpose() * self.rotation - Mat3::identity()).abs();
        let max = e.iter().fold(0.0 as Real, |a, &b| a.max(b));
        if max > 1e-5 as Real {
            return Err(format!("camera rotation not orthonormal (err {max})"));
        }
        if self.width < 1 || self.height < 1 {
            return Err("degenerate image size".into());
        }
        if !(self.near > 0.0) {
            return Err("near plane must be positive".into());
        }
        Ok(())
    }

    /// Camera center in world coordinates.
    pub fn center(&self) -> Vec3 {
        -(self.rotation.transpose() * self.translation)
    }

    pub fn world_to_cam(&self, p: &Vec3) -> Vec3 {
        self.rotation * p + self.translation
    }

    /// Look-at constructor: camera at `eye`, looking toward `target`, with
    /// `up` fixing the roll. Uses the +z-forward, +x-right, +y-down frame.
    pub fn look_at(
        eye: Vec3,
        target: Vec3,
        up: Vec3,
        fx: Real,
        fy: Real,
        width: usize,
        height: usize,
        near: Real,
    ) -> Self {
        let forward = (target - eye).normalize();
        let right = forward.cross(&-up).normalize();
        let down = forward.cross(&right).normalize();
        let rotation = Mat3::from_rows(&[
            right.transpose(),
            down.transpose(),
            forward.transpose(),
        ]);
        let translation = -(rotation * eye);
        Camera {
            rotation,
            translation,
            fx,
            fy,
            cx: width as Real / 2.0,
            cy: height as Real / 2.0,
            width,
            height,
            near,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn look_at_satisfies_invariants_and_centers() {
        let eye = Vec3::new(0.0, 1.0, -3.0);
        let cam = Camera::look_at(
            eye,
            Vec3::zeros(),
            Vec3::new(0.0, 1.0, 0.0),
            60.0,
            60.0,
            64,
            64,
            0.01,
        );
        cam.check_invariants().unwrap();
        assert!((cam.center() - eye).norm() < 1e-5 as Real);
        // The target must sit in front of the camera on the optical axis.
        let t = cam.world_to_cam(&Vec3::zeros());
        assert!(t.z > 0.0);
        assert!(t.x.abs() < 1e-5 as Real && t.y.abs() < 1e-5 as Real);
    }
}
