//! Scene representation: Gaussian clouds, cameras, images, and the
//! geometric math feeding the rasterizer.

mod camera;
mod cloud;
mod image;
pub mod project;
pub mod sh;

pub use camera::Camera;
pub use cloud::{GaussianCloud, SceneExtent, SH_COEFF_COUNT, SH_MAX_DEGREE};
pub use image::ImageBuffer;
pub use project::{covariance_3d, project_gaussian, MipConfig, ProjectedGaussian};
pub use sh::sh_eval;
