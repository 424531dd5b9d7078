//! Dual 3D Gaussian splatting engine.
//!
//! A CPU implementation of robust novel-view synthesis built around three
//! mechanisms: co-training two Gaussian clouds with a mutual consistency
//! loss, asymmetric distractor masking (a rule-based hard mask plus a
//! learned soft mask), and a dynamic exponential-moving-average proxy that
//! tracks clone/split/prune changes of the trainable cloud.
//!
//! The crate is organized bottom-up:
//! - [`scene`]: Gaussian cloud, cameras, images, projection math
//! - [`raster`]: differentiable forward/backward rasterization
//! - [`appearance`]: per-view affine color model
//! - [`losses`]: reconstruction / consistency / mask objectives and metrics
//! - [`masking`]: hard multi-cue masks and learnable soft masks
//! - [`densify`]: adaptive density control with structural events
//! - [`ema`]: the dynamic EMA shadow cloud
//! - [`trainer`]: optimization loops, evaluation, checkpoints
//! - [`synthdata`]: fully ground-truthed synthetic datasets

/// Scalar type used by all kernels: `f32` by default, `f64` with the
/// `real64` feature.
#[cfg(feature = "real64")]
pub type Real = f64;
#[cfg(not(feature = "real64"))]
pub type Real = f32;

pub mod appearance;
pub mod densify;
pub mod ema;
pub mod io;
pub mod losses;
pub mod masking;
pub mod math;
pub mod optim;
pub mod raster;
pub mod scene;
pub mod synthdata;
pub mod trainer;

pub use scene::{Camera, GaussianCloud, ImageBuffer, SceneExtent};
