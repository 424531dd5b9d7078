//! The Gaussian cloud: struct-of-arrays storage for every per-Gaussian
//! attribute, plus the structural primitives (clone / split / prune) that
//! density control builds on.

use crate::math::{quat_normalize, Quat, Vec3, QUAT_IDENTITY};
use crate::Real;

/// Maximum spherical-harmonic degree carried per Gaussian.
pub const SH_MAX_DEGREE: usize = 3;
/// Number of SH basis functions at the maximum degree.
pub const SH_COEFF_COUNT: usize = (SH_MAX_DEGREE + 1) * (SH_MAX_DEGREE + 1);

/// Per-channel SH coefficients of one Gaussian.
pub type ShCoeffs = [[Real; 3]; SH_COEFF_COUNT];

/// A set of anisotropic 3D Gaussians stored attribute-major.
///
/// All attribute vectors have identical length. Each Gaussian carries a
/// stable id that is unique within a run and never reused, so structural
/// events can be replayed against shadow copies.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianCloud {
    pub position: Vec<Vec3>,
    /// Log of the per-axis standard deviation.
    pub log_scale: Vec<Vec3>,
    /// Unit quaternion (w, x, y, z); renormalized after every optimizer step.
    pub rotation: Vec<Quat>,
    /// Opacity stored as a logit; alpha = sigmoid(opacity_logit).
    pub opacity_logit: Vec<Real>,
    pub sh_coeffs: Vec<ShCoeffs>,
    /// Per-Gaussian appearance embeddings, flattened (`embed_dim` per entry).
    pub appearance_embed: Vec<Real>,
    pub embed_dim: usize,
    pub id: Vec<i64>,
    next_id: i64,
}

impl GaussianCloud {
    pub fn empty(embed_dim: usize) -> Self {
        Self {
            position: Vec::new(),
            log_scale: Vec::new(),
            rotation: Vec::new(),
            opacity_logit: Vec::new(),
            sh_coeffs: Vec::new(),
            appearance_embed: Vec::new(),
            embed_dim,
            id: Vec::new(),
            next_id: 0,
        }
    }

    pub fn count(&self) -> usize {
        self.position.len()
    }

    pub fn next_id(&self) -> i64 {
        self.next_id
    }

    /// Restores the id counter; only checkpoint loading should call this.
    pub fn set_next_id(&mut self, next: i64) {
        debug_assert!(self.id.iter().all(|&i| i < next));
        self.next_id = next;
    }

    pub fn embed(&self, idx: usize) -> &[Real] {
        &self.appearance_embed[idx * self.embed_dim..(idx + 1) * self.embed_dim]
    }

    /// Appends a Gaussian and assigns it a fresh id, which is returned.
    #[allow(clippy::too_many_arguments)]
    pub fn push(
        &mut self,
        position: Vec3,
        log_scale: Vec3,
        rotation: Quat,
        opacity_logit: Real,
        sh_coeffs: ShCoeffs,
        embed: &[Real],
    ) -> i64 {
        assert_eq!(embed.len(), self.embed_dim);
        let id = self.next_id;
        self.next_id += 1;
        self.position.push(position);
        self.log_scale.push(log_scale);
        self.rotation.push(rotation);
        self.opacity_logit.push(opacity_logit);
        self.sh_coeffs.push(sh_coeffs);
        self.appearance_embed.extend_from_slice(embed);
        self.id.push(id);
        id
    }

    /// Duplicates Gaussian `idx` with all attributes bitwise equal; the copy
    /// gets a fresh id, which is returned.
    pub fn clone_gaussian(&mut self, idx: usize) -> i64 {
        let embed: Vec<Real> = self.embed(idx).to_vec();
        self.push(
            self.position[idx],
            self.log_scale[idx],
            self.rotation[idx],
            self.opacity_logit[idx],
            self.sh_coeffs[idx],
            &embed,
        )
    }

    /// Removes the Gaussians at the given indices. Indices must be sorted
    /// ascending and unique. Remaining entries keep their relative order.
    pub fn remove_indices(&mut self, sorted_indices: &[usize]) {
        if sorted_indices.is_empty() {
            return;
        }
        debug_assert!(sorted_indices.windows(2).all(|w| w[0] < w[1]));
        let n = self.count();
        let mut keep = vec![true; n];
        for &i in sorted_indices {
            keep[i] = false;
        }
        let mut w = 0;
        for r in 0..n {
            if keep[r] {
                if w != r {
                    self.position[w] = self.position[r];
                    self.log_scale[w] = self.log_scale[r];
                    self.rotation[w] = self.rotation[r];
                    self.opacity_logit[w] = self.opacity_logit[r];
                    self.sh_coeffs[w] = self.sh_coeffs[r];
                    self.id[w] = self.id[r];
                    let d = self.embed_dim;
                    for k in 0..d {
                        self.appearance_embed[w * d + k] = self.appearance_embed[r * d + k];
                    }
                }
                w += 1;
            }
        }
        self.position.truncate(w);
        self.log_scale.truncate(w);
        self.rotation.truncate(w);
        self.opacity_logit.truncate(w);
        self.sh_coeffs.truncate(w);
        self.id.truncate(w);
        self.appearance_embed.truncate(w * self.embed_dim);
    }

    pub fn index_of_id(&self, id: i64) -> Option<usize> {
        self.id.iter().position(|&x| x == id)
    }

    /// Renormalizes every rotation quaternion in place.
    pub fn renormalize_rotations(&mut self) {
        for q in &mut self.rotation {
            *q = quat_normalize(q);
        }
    }

    /// Checks the structural invariants; used by tests and checkpoint loads.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.count();
        for (name, len) in [
            ("log_scale", self.log_scale.len()),
            ("rotation", self.rotation.len()),
            ("opacity_logit", self.opacity_logit.len()),
            ("sh_coeffs", self.sh_coeffs.len()),
            ("id", self.id.len()),
        ] {
            if len != n {
                return Err(format!("attribute {name} has length {len}, expected {n}"));
            }
        }
        if self.appearance_embed.len() != n * self.embed_dim {
            return Err(format!(
                "appearance_embed has length {}, expected {}",
                self.appearance_embed.len(),
                n * self.embed_dim
            ));
        }
        let mut ids: Vec<i64> = self.id.clone();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err("duplicate gaussian ids".into());
        }
        if let Some(&max) = ids.last() {
            if max >= self.next_id {
                return Err("id counter behind live ids".into());
            }
        }
        Ok(())
    }
}

/// Identity-rotation helper used by initializers.
pub fn identity_quat() -> Quat {
    QUAT_IDENTITY
}

/// Scene scale: radius of the bounding sphere of the training-camera
/// centers, inflated by 1.1. Densification thresholds are relative to it.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SceneExtent {
    pub radius: Real,
}

impl SceneExtent {
    pub fn new(radius: Real) -> Self {
        assert!(radius > 0.0, "scene extent must be positive");
        Self { radius }
    }

    /// Bounding sphere (via centroid) of the camera centers, times 1.1.
    pub fn from_camera_centers(centers: &[Vec3]) -> Self {
        assert!(!centers.is_empty());
        let mut mean = Vec3::zeros();
        for c in centers {
            mean += c;
        }
        mean /= centers.len() as Real;
        let mut r: Real = 0.0;
        for c in centers {
            r = r.max((c - mean).norm());
        }
        Self::new((r * 1.1).max(1e-6))
    }
}
